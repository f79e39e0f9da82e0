#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sinkloc/exact.hpp"
#include "sinkloc/network.hpp"

namespace sinkloc {

struct HittingSetInstance {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> family;
  std::size_t k = 1;

  friend bool operator==(const HittingSetInstance&, const HittingSetInstance&) = default;
};

std::vector<std::string> validate(const HittingSetInstance& hs);

/// Bipartite unit network: one vertex per element (universe order), then one
/// per set (family order); element x is joined to set y iff x ∈ y, with
/// capacity 1 and transit 1; each set vertex holds one unit of supply.
/// Throws std::invalid_argument for an invalid instance.
Instance from_hitting_set(const HittingSetInstance& hs);

/// Whether at most k elements intersect every set, by exhaustive search.
/// Throws BudgetExceeded if more than `budget` subsets would be tried.
bool brute_force_hitting_set(const HittingSetInstance& hs, std::uint64_t budget = kDefaultSubsetBudget);

struct ReductionCheck {
  bool has_hitting_set = false;
  bool evacuates_within_one = false;

  [[nodiscard]] bool agrees() const noexcept { return has_hitting_set == evacuates_within_one; }
};

/// Both sides of the equivalence "hitting set of size k exists" and
/// "k sinks evacuate the generated instance within one time step".
ReductionCheck check_reduction(const HittingSetInstance& hs, const ExactOptions& options = {});

bool verify_reduction(const HittingSetInstance& hs, const ExactOptions& options = {});

}  // namespace sinkloc
