#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace sinkloc::detail {

// Dinic's algorithm on a forward-star residual graph. Arc 2i is the i-th
// added arc, 2i+1 its reverse.
class Dinic {
 public:
  explicit Dinic(std::size_t nodes);

  void reserve_arcs(std::size_t arcs);
  std::size_t add_arc(std::uint32_t from, std::uint32_t to, std::int64_t capacity);

  // Augments until no path remains or `limit` units are routed.
  std::int64_t run(std::uint32_t source, std::uint32_t sink,
                   std::int64_t limit = std::numeric_limits<std::int64_t>::max());

  [[nodiscard]] std::int64_t flow(std::size_t arc) const { return residual_[2 * arc + 1]; }

 private:
  bool build_levels(std::uint32_t source, std::uint32_t sink);
  std::int64_t push(std::uint32_t node, std::uint32_t sink, std::int64_t pushed);

  std::vector<std::int32_t> head_;
  std::vector<std::int32_t> next_;
  std::vector<std::uint32_t> to_;
  std::vector<std::int64_t> residual_;
  std::vector<std::int32_t> level_;
  std::vector<std::int32_t> cursor_;
  std::vector<std::uint32_t> queue_;
};

}  // namespace sinkloc::detail
