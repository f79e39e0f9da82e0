#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sinkloc/network.hpp"

namespace sinkloc {

/// Directed arc of a dynamic network. Transit may be 0 (collection arcs).
struct Arc {
  VertexId from = 0;
  VertexId to = 0;
  std::int64_t capacity = 0;
  std::int64_t transit = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed dynamic network with one designated collection vertex that
/// absorbs all supply.
struct DirectedDynamicNetwork {
  std::size_t vertex_count = 0;
  std::vector<Arc> arcs;
  std::vector<std::int64_t> supply;  // indexed by vertex; may be shorter than vertex_count
  VertexId collector = 0;

  [[nodiscard]] std::int64_t supply_of(VertexId v) const {
    return v < supply.size() ? supply[v] : 0;
  }
  /// Sum of positive supplies; the amount the collector must receive.
  [[nodiscard]] std::int64_t total_supply() const;
};

enum class ArcKind : std::uint8_t { Supply, Movement, Holdover, Collection };

struct ExpandedArc {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::int64_t capacity = 0;
  ArcKind kind = ArcKind::Movement;
};

/// Static network with a node per (vertex, step) for steps 0..T, plus a
/// super-source and super-sink.
///
/// Layer-major numbering: node(v, t) = t * |V| + v; the super-source and
/// super-sink follow the last layer. Arcs are emitted as: supply arcs in
/// vertex order, then per layer t the movement arcs departing at t (dynamic
/// arc order), holdover arcs (vertex order) and the collection arc.
class TimeExpandedGraph {
 public:
  [[nodiscard]] std::int64_t horizon() const noexcept { return horizon_; }
  [[nodiscard]] std::size_t layer_size() const noexcept { return layer_size_; }
  [[nodiscard]] std::size_t node_count() const noexcept { return layer_size_ * (horizon_ + 1) + 2; }
  [[nodiscard]] std::uint32_t node(VertexId v, std::int64_t t) const noexcept {
    return static_cast<std::uint32_t>(t * static_cast<std::int64_t>(layer_size_) + v);
  }
  [[nodiscard]] std::uint32_t source() const noexcept { return static_cast<std::uint32_t>(node_count() - 2); }
  [[nodiscard]] std::uint32_t sink() const noexcept { return static_cast<std::uint32_t>(node_count() - 1); }
  [[nodiscard]] const std::vector<ExpandedArc>& arcs() const noexcept { return arcs_; }
  [[nodiscard]] std::size_t count(ArcKind kind) const;
  /// The flow value that saturates every supply arc.
  [[nodiscard]] std::int64_t demand() const noexcept { return demand_; }

 private:
  friend TimeExpandedGraph build_time_expanded(const DirectedDynamicNetwork&, std::int64_t);

  std::int64_t horizon_ = 0;
  std::size_t layer_size_ = 0;
  std::int64_t demand_ = 0;
  std::vector<ExpandedArc> arcs_;
};

/// Movement arcs (u,t)->(v,t+τ) for 0 <= t <= T-τ (zero-capacity arcs are
/// omitted), holdover (v,t)->(v,t+1), supply source->(s,0) and collection
/// (collector,t)->sink. Unbounded capacities are set to the total supply.
TimeExpandedGraph build_time_expanded(const DirectedDynamicNetwork& net, std::int64_t horizon);

struct FlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> arc_flow;  // aligned with TimeExpandedGraph::arcs()
};

FlowResult max_flow(const TimeExpandedGraph& graph);

/// True iff all positive supply reaches the collector by step `horizon`.
bool feasible(const DirectedDynamicNetwork& net, std::int64_t horizon);

}  // namespace sinkloc
