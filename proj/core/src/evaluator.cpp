#include "sinkloc/evaluator.hpp"

#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sinkloc {

std::string EvaluationResult::str() const {
  return is_feasible() ? std::to_string(time_) : std::string("infeasible");
}

DirectedDynamicNetwork reduce_to_directed(const DynamicNetwork& network, const SinkSet& sinks) {
  std::vector<EdgePoint> interior;
  for (const Position& p : sinks) {
    if (!p.is_vertex()) interior.push_back(p.edge_point());
  }

  Subdivision split = subdivide_at(network, interior);
  const DynamicNetwork& net = split.network;

  DirectedDynamicNetwork out;
  out.vertex_count = net.vertex_count() + 1;
  out.collector = static_cast<VertexId>(net.vertex_count());
  out.supply.assign(out.vertex_count, 0);
  for (const auto& [v, s] : net.supplies) out.supply[v] = s;

  out.arcs.reserve(2 * net.edge_count() + sinks.size());
  for (const Edge& e : net.edges) {
    out.arcs.push_back({e.u, e.v, e.capacity, e.transit});
    out.arcs.push_back({e.v, e.u, e.capacity, e.transit});
  }
  const std::int64_t total = network.total_supply();
  for (const Position& p : sinks) {
    VertexId x = p.is_vertex() ? p.vertex() : split.vertex_of.at(p.edge_point());
    out.arcs.push_back({x, out.collector, total, 0});
  }
  return out;
}

std::optional<HorizonBounds> horizon_bounds(const DirectedDynamicNetwork& reduced) {
  constexpr std::int64_t unreached = std::numeric_limits<std::int64_t>::max();
  const std::size_t n = reduced.vertex_count;

  // Distances to the collector along usable arcs, searched backwards.
  std::vector<std::vector<std::pair<VertexId, std::int64_t>>> incoming(n);
  for (const Arc& a : reduced.arcs) {
    if (a.capacity >= 1) incoming[a.to].emplace_back(a.from, a.transit);
  }
  std::vector<std::int64_t> dist(n, unreached);
  using Entry = std::pair<std::int64_t, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[reduced.collector] = 0;
  heap.emplace(0, reduced.collector);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[v]) continue;
    for (auto [u, w] : incoming[v]) {
      if (d + w < dist[u]) {
        dist[u] = d + w;
        heap.emplace(dist[u], u);
      }
    }
  }

  HorizonBounds bounds;
  for (VertexId v = 0; v < n; ++v) {
    if (reduced.supply_of(v) <= 0) continue;
    if (dist[v] == unreached) return std::nullopt;
    bounds.lower = std::max(bounds.lower, dist[v]);
  }
  bounds.upper = bounds.lower + reduced.total_supply();
  return bounds;
}

std::optional<HorizonBounds> horizon_bounds(const DynamicNetwork& network, const SinkSet& sinks) {
  return horizon_bounds(reduce_to_directed(network, sinks));
}

namespace {

template <typename Search>
EvaluationResult evaluate_with(const DynamicNetwork& network, const SinkSet& sinks, Search search) {
  if (sinks.empty()) throw std::invalid_argument("evacuation time needs at least one sink");
  DirectedDynamicNetwork reduced = reduce_to_directed(network, sinks);
  auto bounds = horizon_bounds(reduced);
  if (!bounds) return EvaluationResult::infeasible();
  auto test = [&](std::int64_t t) { return feasible(reduced, t); };
  return EvaluationResult::time(search(*bounds, test));
}

}  // namespace

EvaluationResult evacuation_time(const DynamicNetwork& network, const SinkSet& sinks) {
  return evaluate_with(network, sinks, [](HorizonBounds b, const auto& test) {
    // Infeasible below lower, feasible at upper.
    std::int64_t lo = b.lower;
    std::int64_t hi = b.upper;
    while (lo < hi) {
      std::int64_t mid = lo + (hi - lo) / 2;
      if (test(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  });
}

EvaluationResult evacuation_time_linear(const DynamicNetwork& network, const SinkSet& sinks) {
  return evaluate_with(network, sinks, [](HorizonBounds b, const auto& test) {
    // Does not trust the upper bound; terminates because every supply has a path.
    std::int64_t t = b.lower;
    while (!test(t)) ++t;
    return t;
  });
}

}  // namespace sinkloc
