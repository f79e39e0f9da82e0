#include "sinkloc/hardness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "sinkloc/subsets.hpp"

namespace sinkloc {

std::vector<std::string> validate(const HittingSetInstance& hs) {
  std::vector<std::string> out;
  if (hs.k < 1) out.push_back("k must be at least 1");
  std::set<std::string> universe;
  for (const auto& e : hs.universe) {
    if (e.empty()) out.push_back("empty element name");
    if (!universe.insert(e).second) out.push_back("duplicate element '" + e + "' in universe");
  }
  for (std::size_t i = 0; i < hs.family.size(); ++i) {
    const std::string where = "set " + std::to_string(i + 1);
    if (hs.family[i].empty()) out.push_back(where + " is empty");
    std::set<std::string> members;
    for (const auto& e : hs.family[i]) {
      if (!universe.contains(e)) out.push_back(where + ": element '" + e + "' not in universe");
      if (!members.insert(e).second) out.push_back(where + ": duplicate element '" + e + "'");
    }
  }
  return out;
}

Instance from_hitting_set(const HittingSetInstance& hs) {
  if (auto problems = validate(hs); !problems.empty()) {
    throw std::invalid_argument("invalid hitting set instance: " + problems.front());
  }

  Instance out;
  out.k = hs.k;
  DynamicNetwork& net = out.network;
  std::unordered_map<std::string, VertexId> element;
  for (const auto& e : hs.universe) element[e] = net.add_vertex(e);

  std::set<std::string> taken(hs.universe.begin(), hs.universe.end());
  for (std::size_t i = 0; i < hs.family.size(); ++i) {
    std::string name = "S" + std::to_string(i + 1);
    while (taken.contains(name)) name += "'";
    taken.insert(name);
    const VertexId set_vertex = net.add_vertex(name);
    net.set_supply(set_vertex, 1);
    std::vector<VertexId> members;
    for (const auto& e : hs.family[i]) members.push_back(element.at(e));
    std::sort(members.begin(), members.end());
    for (VertexId x : members) net.add_edge(x, set_vertex, 1, 1);
  }
  return out;
}

bool brute_force_hitting_set(const HittingSetInstance& hs, std::uint64_t budget) {
  if (auto problems = validate(hs); !problems.empty()) {
    throw std::invalid_argument("invalid hitting set instance: " + problems.front());
  }
  if (hs.family.empty()) return true;
  const std::size_t n = hs.universe.size();
  if (n > 64) throw std::invalid_argument("universe larger than 64 elements");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[hs.universe[i]] = i;
  std::vector<std::uint64_t> masks;
  for (const auto& set : hs.family) {
    std::uint64_t m = 0;
    for (const auto& e : set) m |= std::uint64_t{1} << index.at(e);
    masks.push_back(m);
  }

  // Any hitting set of size <= k extends to one of size exactly min(k, n).
  const std::size_t size = std::min(hs.k, n);
  const std::uint64_t subsets = binomial(n, size);
  if (subsets > budget) throw BudgetExceeded(n, hs.k, subsets, budget);

  for (CombinationCursor cursor(n, size); cursor.valid(); cursor.advance()) {
    std::uint64_t chosen = 0;
    for (std::size_t i : cursor.current()) chosen |= std::uint64_t{1} << i;
    if (std::all_of(masks.begin(), masks.end(), [chosen](std::uint64_t m) { return (m & chosen) != 0; })) {
      return true;
    }
  }
  return false;
}

ReductionCheck check_reduction(const HittingSetInstance& hs, const ExactOptions& options) {
  ReductionCheck check;
  check.has_hitting_set = brute_force_hitting_set(hs, options.budget);
  check.evacuates_within_one = solve_exact_threshold(from_hitting_set(hs), 1, options);
  return check;
}

bool verify_reduction(const HittingSetInstance& hs, const ExactOptions& options) {
  return check_reduction(hs, options).agrees();
}

}  // namespace sinkloc
