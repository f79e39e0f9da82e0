#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sinkloc/evaluator.hpp"
#include "sinkloc/network.hpp"

namespace sinkloc {

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Index combinations of size k from [0, n) in lexicographic order.
class CombinationCursor {
 public:
  CombinationCursor(std::size_t n, std::size_t k);

  [[nodiscard]] bool valid() const noexcept { return valid_; }
  [[nodiscard]] const std::vector<std::size_t>& current() const noexcept { return indices_; }
  void advance();

 private:
  std::size_t n_;
  std::vector<std::size_t> indices_;
  bool valid_;
};

/// Every k-subset of a candidate list, once each, lexicographic in candidate
/// index. When k exceeds the number of candidates the single full set is
/// produced.
class SubsetStream {
 public:
  SubsetStream(std::vector<Position> candidates, std::size_t k);

  std::optional<SinkSet> next();
  [[nodiscard]] std::size_t subset_size() const noexcept { return k_; }

 private:
  std::vector<Position> candidates_;
  std::size_t k_;
  CombinationCursor cursor_;
};

struct SubsetSearchOptions {
  unsigned parallelism = 1;
  /// Stop as soon as some subset finishes within this horizon.
  std::optional<std::int64_t> stop_within;
};

struct SubsetSearchResult {
  SinkSet sinks;
  EvaluationResult time = EvaluationResult::infeasible();
  std::uint64_t evaluated = 0;
};

/// Evaluates subsets of `candidates` (sorted, canonical positions) and keeps
/// the minimum; ties go to the lexicographically smallest subset. Without
/// `stop_within` the result does not depend on the parallelism.
SubsetSearchResult search_subsets(const DynamicNetwork& network, std::span<const Position> candidates,
                                  std::size_t k, const SubsetSearchOptions& options = {});

}  // namespace sinkloc
