#include "sinkloc/network.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace sinkloc {

namespace {

std::string describe_edge(const DynamicNetwork& net, std::size_t index) {
  const Edge& e = net.edges[index];
  auto name = [&](VertexId v) {
    return v < net.vertex_count() ? net.vertex_names[v] : "#" + std::to_string(v);
  };
  return "edge e" + std::to_string(index + 1) + " (" + name(e.u) + ", " + name(e.v) + ")";
}

}  // namespace

VertexId DynamicNetwork::add_vertex(std::string name) {
  vertex_names.push_back(std::move(name));
  return static_cast<VertexId>(vertex_names.size() - 1);
}

EdgeId DynamicNetwork::add_edge(VertexId a, VertexId b, std::int64_t capacity,
                                std::int64_t transit) {
  if (a > b) std::swap(a, b);
  edges.push_back({a, b, capacity, transit});
  return static_cast<EdgeId>(edges.size() - 1);
}

void DynamicNetwork::set_supply(VertexId v, std::int64_t supply) { supplies[v] = supply; }

std::int64_t DynamicNetwork::supply(VertexId v) const {
  auto it = supplies.find(v);
  return it == supplies.end() ? 0 : it->second;
}

std::int64_t DynamicNetwork::total_supply() const {
  std::int64_t total = 0;
  for (const auto& [v, s] : supplies) total += s;
  return total;
}

std::optional<VertexId> DynamicNetwork::find_vertex(std::string_view name) const {
  auto it = std::find(vertex_names.begin(), vertex_names.end(), name);
  if (it == vertex_names.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertex_names.begin());
}

std::vector<std::string> validate(const DynamicNetwork& net) {
  std::vector<std::string> out;
  const std::size_t n = net.vertex_count();

  std::set<std::string_view> seen_names;
  for (const auto& name : net.vertex_names) {
    if (name.empty()) out.push_back("vertex with empty name");
    if (!seen_names.insert(name).second) out.push_back("duplicate vertex name '" + name + "'");
  }

  std::set<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    const Edge& e = net.edges[i];
    const std::string what = describe_edge(net, i);
    if (e.u >= n || e.v >= n) {
      out.push_back(what + ": endpoint not in vertex list");
      continue;
    }
    if (e.transit < 1) {
      out.push_back(what + ": transit " + std::to_string(e.transit) + " must be at least 1");
    }
    if (e.capacity < 0) {
      out.push_back(what + ": capacity " + std::to_string(e.capacity) + " is negative");
    }
    if (e.u == e.v) {
      out.push_back(what + ": self-loop");
      continue;
    }
    if (e.u > e.v) out.push_back(what + ": endpoints not in canonical order (u < v)");
    if (!pairs.insert(std::minmax(e.u, e.v)).second) {
      out.push_back(what + ": parallel edge");
    }
  }

  for (const auto& [v, s] : net.supplies) {
    if (v >= n) {
      out.push_back("source #" + std::to_string(v) + " not in vertex list");
      continue;
    }
    if (s < 0) {
      out.push_back("source " + net.vertex_names[v] + ": negative supply " + std::to_string(s));
    }
  }
  return out;
}

std::vector<std::string> lint(const DynamicNetwork& net) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    if (net.edges[i].capacity == 0) out.push_back(describe_edge(net, i) + " has capacity 0");
  }
  return out;
}

Position canonicalize(const DynamicNetwork& net, Position p) {
  if (p.is_vertex()) {
    if (p.id >= net.vertex_count()) throw std::out_of_range("unknown vertex id");
    return Position::at_vertex(p.id);
  }
  if (p.id >= net.edge_count()) throw std::out_of_range("unknown edge id");
  const Edge& e = net.edges[p.id];
  if (p.offset < 0 || p.offset > e.transit) {
    throw std::out_of_range("offset " + std::to_string(p.offset) + " outside [0, " +
                            std::to_string(e.transit) + "] on edge e" + std::to_string(p.id + 1));
  }
  if (p.offset == 0) return Position::at_vertex(e.u);
  if (p.offset == e.transit) return Position::at_vertex(e.v);
  return p;
}

bool is_canonical(const DynamicNetwork& net, const Position& p) {
  if (p.is_vertex()) return p.id < net.vertex_count() && p.offset == 0;
  return p.id < net.edge_count() && p.offset > 0 && p.offset < net.edges[p.id].transit;
}

std::vector<Position> all_integer_positions(const DynamicNetwork& net) {
  std::vector<Position> out;
  std::size_t total = net.vertex_count();
  for (const Edge& e : net.edges) total += static_cast<std::size_t>(e.transit - 1);
  out.reserve(total);
  for (VertexId v = 0; v < net.vertex_count(); ++v) out.push_back(Position::at_vertex(v));
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    for (std::int64_t off = 1; off < net.edges[id].transit; ++off) {
      out.push_back(Position::on_edge(id, off));
    }
  }
  return out;
}

SinkSet::SinkSet(std::vector<Position> positions) : positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end()) {
    throw std::invalid_argument("sink set contains duplicate positions");
  }
}

SinkSet SinkSet::canonical(const DynamicNetwork& net, std::vector<Position> positions) {
  for (auto& p : positions) p = canonicalize(net, p);
  return SinkSet(std::move(positions));
}

bool SinkSet::contains(const Position& p) const {
  return std::binary_search(positions_.begin(), positions_.end(), p);
}

std::vector<std::string> validate(const Instance& instance) {
  auto out = validate(instance.network);
  if (instance.k < 1) out.push_back("k must be at least 1");
  return out;
}

void require_valid(const Instance& instance) {
  auto problems = validate(instance);
  if (problems.empty()) return;
  std::string message = "invalid instance:";
  for (const auto& p : problems) message += "\n  " + p;
  throw std::invalid_argument(message);
}

Subdivision subdivide_at(const DynamicNetwork& net, std::span<const EdgePoint> points) {
  std::vector<EdgePoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  for (const EdgePoint& p : sorted) {
    if (p.edge >= net.edge_count() || p.offset <= 0 || p.offset >= net.edges[p.edge].transit) {
      throw std::invalid_argument("point e" + std::to_string(p.edge + 1) + ":" +
                                  std::to_string(p.offset) + " is not interior to any edge");
    }
  }

  Subdivision out;
  out.network.vertex_names = net.vertex_names;
  out.network.supplies = net.supplies;
  for (const EdgePoint& p : sorted) {
    out.vertex_of[p] = out.network.add_vertex("e" + std::to_string(p.edge + 1) + "@" +
                                              std::to_string(p.offset));
  }

  auto next = sorted.begin();
  for (EdgeId id = 0; id < net.edge_count(); ++id) {
    const Edge& e = net.edges[id];
    VertexId from = e.u;
    std::int64_t at = 0;
    for (; next != sorted.end() && next->edge == id; ++next) {
      VertexId mid = out.vertex_of.at(*next);
      out.network.add_edge(from, mid, e.capacity, next->offset - at);
      from = mid;
      at = next->offset;
    }
    out.network.add_edge(from, e.v, e.capacity, e.transit - at);
  }
  return out;
}

}  // namespace sinkloc
