#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sinkloc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge. Stored canonically with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  std::int64_t capacity = 0;  // units admitted per time step
  std::int64_t transit = 1;   // time steps end to end

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected dynamic network: graph, capacities, transit times and
/// supplies. A vertex absent from `supplies` has supply 0.
///
/// The struct is a plain value; call validate() before handing it to a
/// solver. Solvers never mutate a network.
struct DynamicNetwork {
  std::vector<std::string> vertex_names;
  std::vector<Edge> edges;
  std::map<VertexId, std::int64_t> supplies;

  VertexId add_vertex(std::string name);
  /// Appends an edge, swapping endpoints so that u < v.
  EdgeId add_edge(VertexId a, VertexId b, std::int64_t capacity, std::int64_t transit);
  void set_supply(VertexId v, std::int64_t supply);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_names.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges.size(); }
  [[nodiscard]] std::int64_t supply(VertexId v) const;
  [[nodiscard]] std::int64_t total_supply() const;
  [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view name) const;

  friend bool operator==(const DynamicNetwork&, const DynamicNetwork&) = default;
};

/// Every violated structural invariant, one message per offending element.
/// An empty result means the network is valid.
std::vector<std::string> validate(const DynamicNetwork& network);

/// Non-fatal observations (zero-capacity edges are legal but unusable).
std::vector<std::string> lint(const DynamicNetwork& network);

/// A point on an edge, `offset` time steps away from the edge's u endpoint.
struct EdgePoint {
  EdgeId edge = 0;
  std::int64_t offset = 0;

  auto operator<=>(const EdgePoint&) const = default;
};

/// A sink location: a vertex or an integer point on an edge.
///
/// Ordering puts all vertices (by id) before all edge points (by edge, then
/// offset). Candidate lists are produced in this order, so index order and
/// position order coincide.
struct Position {
  enum class Kind : std::uint8_t { Vertex = 0, EdgePoint = 1 };

  Kind kind = Kind::Vertex;
  std::uint32_t id = 0;  // vertex id or edge id
  std::int64_t offset = 0;

  static constexpr Position at_vertex(VertexId v) noexcept { return {Kind::Vertex, v, 0}; }
  static constexpr Position on_edge(EdgeId e, std::int64_t offset) noexcept {
    return {Kind::EdgePoint, e, offset};
  }

  [[nodiscard]] constexpr bool is_vertex() const noexcept { return kind == Kind::Vertex; }
  [[nodiscard]] constexpr VertexId vertex() const noexcept { return id; }
  [[nodiscard]] constexpr EdgePoint edge_point() const noexcept { return {id, offset}; }

  auto operator<=>(const Position&) const = default;
};

/// Maps offsets 0 and τ(e) onto the endpoint vertices. Throws
/// std::out_of_range for unknown ids or offsets outside [0, τ(e)].
Position canonicalize(const DynamicNetwork& network, Position position);

[[nodiscard]] bool is_canonical(const DynamicNetwork& network, const Position& position);

/// Vertices in id order, then for each edge its interior offsets ascending.
std::vector<Position> all_integer_positions(const DynamicNetwork& network);

/// A set of distinct positions, kept sorted.
class SinkSet {
 public:
  SinkSet() = default;
  /// Throws std::invalid_argument on duplicates.
  explicit SinkSet(std::vector<Position> positions);
  /// Canonicalizes every position first, then builds the set.
  static SinkSet canonical(const DynamicNetwork& network, std::vector<Position> positions);

  [[nodiscard]] std::span<const Position> positions() const noexcept { return positions_; }
  [[nodiscard]] std::size_t size() const noexcept { return positions_.size(); }
  [[nodiscard]] bool empty() const noexcept { return positions_.empty(); }
  [[nodiscard]] auto begin() const noexcept { return positions_.begin(); }
  [[nodiscard]] auto end() const noexcept { return positions_.end(); }
  [[nodiscard]] bool contains(const Position& p) const;

  auto operator<=>(const SinkSet&) const = default;

 private:
  std::vector<Position> positions_;
};

struct Instance {
  DynamicNetwork network;
  std::size_t k = 1;

  friend bool operator==(const Instance&, const Instance&) = default;
};

std::vector<std::string> validate(const Instance& instance);

/// Throws std::invalid_argument listing every violation, if any.
void require_valid(const Instance& instance);

/// Result of splitting edges at interior points.
struct Subdivision {
  DynamicNetwork network;
  std::map<EdgePoint, VertexId> vertex_of;
};

/// Turns each interior point into a fresh vertex. An edge with points at
/// o1 < ... < oj becomes j+1 fragments with transits o1, o2-o1, ..., τ-oj,
/// each keeping the original capacity. Fragments replace the original edge
/// in place; new vertices are appended in (edge, offset) order. Duplicate
/// points are merged. Throws std::invalid_argument for non-interior points.
Subdivision subdivide_at(const DynamicNetwork& network, std::span<const EdgePoint> points);

}  // namespace sinkloc
