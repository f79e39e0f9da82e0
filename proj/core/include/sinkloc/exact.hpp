#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "sinkloc/evaluator.hpp"
#include "sinkloc/network.hpp"

namespace sinkloc {

inline constexpr std::uint64_t kDefaultSubsetBudget = 5'000'000;

/// Raised instead of starting an enumeration larger than the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t positions, std::size_t k, std::uint64_t subsets, std::uint64_t budget);

  [[nodiscard]] std::size_t positions() const noexcept { return positions_; }
  [[nodiscard]] std::size_t k() const noexcept { return k_; }
  [[nodiscard]] std::uint64_t subsets() const noexcept { return subsets_; }
  [[nodiscard]] std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::size_t positions_;
  std::size_t k_;
  std::uint64_t subsets_;
  std::uint64_t budget_;
};

struct ExactOptions {
  std::uint64_t budget = kDefaultSubsetBudget;
  unsigned parallelism = 1;
};

struct ExactResult {
  SinkSet sinks;
  EvaluationResult time = EvaluationResult::infeasible();
  std::uint64_t subsets_evaluated = 0;
  std::size_t position_count = 0;
};

/// Exhaustive minimum over all k-subsets of all integer positions.
ExactResult solve_exact(const Instance& instance, const ExactOptions& options = {});

/// Whether some k-subset of integer positions evacuates within `horizon`.
/// Stops at the first witness.
bool solve_exact_threshold(const Instance& instance, std::int64_t horizon, const ExactOptions& options = {});

}  // namespace sinkloc
