#include "sinkloc/time_expansion.hpp"

#include <algorithm>
#include <stdexcept>

#include "max_flow.hpp"

namespace sinkloc {

std::int64_t DirectedDynamicNetwork::total_supply() const {
  std::int64_t total = 0;
  for (std::int64_t s : supply) total += std::max<std::int64_t>(s, 0);
  return total;
}

std::size_t TimeExpandedGraph::count(ArcKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(arcs_.begin(), arcs_.end(), [kind](const ExpandedArc& a) { return a.kind == kind; }));
}

TimeExpandedGraph build_time_expanded(const DirectedDynamicNetwork& net, std::int64_t horizon) {
  if (horizon < 0) throw std::invalid_argument("negative horizon");
  if (net.collector >= net.vertex_count) throw std::invalid_argument("collector not in vertex set");

  TimeExpandedGraph g;
  g.horizon_ = horizon;
  g.layer_size_ = net.vertex_count;
  g.demand_ = net.total_supply();
  const std::int64_t unbounded = g.demand_;
  const std::size_t n = net.vertex_count;

  std::size_t estimate = n + static_cast<std::size_t>(horizon + 1) * (net.arcs.size() + n + 1);
  g.arcs_.reserve(estimate);

  for (VertexId v = 0; v < n; ++v) {
    if (std::int64_t s = net.supply_of(v); s > 0) {
      g.arcs_.push_back({g.source(), g.node(v, 0), s, ArcKind::Supply});
    }
  }
  for (std::int64_t t = 0; t <= horizon; ++t) {
    for (const Arc& a : net.arcs) {
      if (a.capacity <= 0 || t + a.transit > horizon) continue;
      g.arcs_.push_back({g.node(a.from, t), g.node(a.to, t + a.transit), a.capacity, ArcKind::Movement});
    }
    if (t < horizon) {
      for (VertexId v = 0; v < n; ++v) {
        g.arcs_.push_back({g.node(v, t), g.node(v, t + 1), unbounded, ArcKind::Holdover});
      }
    }
    g.arcs_.push_back({g.node(net.collector, t), g.sink(), unbounded, ArcKind::Collection});
  }
  return g;
}

FlowResult max_flow(const TimeExpandedGraph& graph) {
  detail::Dinic solver(graph.node_count());
  solver.reserve_arcs(graph.arcs().size());
  for (const ExpandedArc& a : graph.arcs()) solver.add_arc(a.from, a.to, a.capacity);

  FlowResult result;
  result.value = solver.run(graph.source(), graph.sink());
  result.arc_flow.resize(graph.arcs().size());
  for (std::size_t i = 0; i < graph.arcs().size(); ++i) result.arc_flow[i] = solver.flow(i);
  return result;
}

bool feasible(const DirectedDynamicNetwork& net, std::int64_t horizon) {
  const std::int64_t demand = net.total_supply();
  if (demand == 0) return true;
  TimeExpandedGraph graph = build_time_expanded(net, horizon);
  detail::Dinic solver(graph.node_count());
  solver.reserve_arcs(graph.arcs().size());
  for (const ExpandedArc& a : graph.arcs()) solver.add_arc(a.from, a.to, a.capacity);
  return solver.run(graph.source(), graph.sink(), demand) == demand;
}

}  // namespace sinkloc
