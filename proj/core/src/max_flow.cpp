#include "max_flow.hpp"

#include <algorithm>

namespace sinkloc::detail {

Dinic::Dinic(std::size_t nodes) : head_(nodes, -1), level_(nodes), cursor_(nodes) {
  queue_.reserve(nodes);
}

void Dinic::reserve_arcs(std::size_t arcs) {
  next_.reserve(2 * arcs);
  to_.reserve(2 * arcs);
  residual_.reserve(2 * arcs);
}

std::size_t Dinic::add_arc(std::uint32_t from, std::uint32_t to, std::int64_t capacity) {
  const auto id = static_cast<std::int32_t>(to_.size());
  to_.push_back(to);
  residual_.push_back(capacity);
  next_.push_back(head_[from]);
  head_[from] = id;

  to_.push_back(from);
  residual_.push_back(0);
  next_.push_back(head_[to]);
  head_[to] = id + 1;
  return static_cast<std::size_t>(id / 2);
}

bool Dinic::build_levels(std::uint32_t source, std::uint32_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  queue_.clear();
  level_[source] = 0;
  queue_.push_back(source);
  for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
    const std::uint32_t u = queue_[qi];
    for (std::int32_t a = head_[u]; a != -1; a = next_[a]) {
      if (residual_[a] > 0 && level_[to_[a]] < 0) {
        level_[to_[a]] = level_[u] + 1;
        queue_.push_back(to_[a]);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t Dinic::push(std::uint32_t node, std::uint32_t sink, std::int64_t pushed) {
  if (node == sink) return pushed;
  for (std::int32_t& a = cursor_[node]; a != -1; a = next_[a]) {
    const std::uint32_t v = to_[a];
    if (residual_[a] <= 0 || level_[v] != level_[node] + 1) continue;
    if (std::int64_t got = push(v, sink, std::min(pushed, residual_[a])); got > 0) {
      residual_[a] -= got;
      residual_[a ^ 1] += got;
      return got;
    }
  }
  return 0;
}

std::int64_t Dinic::run(std::uint32_t source, std::uint32_t sink, std::int64_t limit) {
  std::int64_t total = 0;
  if (source == sink) return 0;
  while (total < limit && build_levels(source, sink)) {
    std::copy(head_.begin(), head_.end(), cursor_.begin());
    while (total < limit) {
      std::int64_t got = push(source, sink, limit - total);
      if (got == 0) break;
      total += got;
    }
  }
  return total;
}

}  // namespace sinkloc::detail
