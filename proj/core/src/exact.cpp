#include "sinkloc/exact.hpp"

#include <algorithm>
#include <string>

#include "sinkloc/subsets.hpp"

namespace sinkloc {

namespace {

std::vector<Position> budgeted_positions(const Instance& instance, std::uint64_t budget) {
  require_valid(instance);
  std::vector<Position> positions = all_integer_positions(instance.network);
  const std::size_t k = std::min(instance.k, positions.size());
  const std::uint64_t subsets = binomial(positions.size(), k);
  if (subsets > budget) throw BudgetExceeded(positions.size(), instance.k, subsets, budget);
  return positions;
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::size_t positions, std::size_t k, std::uint64_t subsets, std::uint64_t budget)
    : std::runtime_error("exact search refused: C(" + std::to_string(positions) + ", " + std::to_string(k) +
                         ") = " + std::to_string(subsets) + " subsets exceeds budget " + std::to_string(budget) +
                         " (P = " + std::to_string(positions) + " positions, k = " + std::to_string(k) + ")"),
      positions_(positions),
      k_(k),
      subsets_(subsets),
      budget_(budget) {}

ExactResult solve_exact(const Instance& instance, const ExactOptions& options) {
  std::vector<Position> positions = budgeted_positions(instance, options.budget);
  SubsetSearchResult found = search_subsets(instance.network, positions, instance.k, {options.parallelism, std::nullopt});
  return {std::move(found.sinks), found.time, found.evaluated, positions.size()};
}

bool solve_exact_threshold(const Instance& instance, std::int64_t horizon, const ExactOptions& options) {
  std::vector<Position> positions = budgeted_positions(instance, options.budget);
  SubsetSearchResult found = search_subsets(instance.network, positions, instance.k, {options.parallelism, horizon});
  return found.time.within(horizon);
}

}  // namespace sinkloc
