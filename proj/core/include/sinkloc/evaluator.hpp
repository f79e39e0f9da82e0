#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "sinkloc/network.hpp"
#include "sinkloc/time_expansion.hpp"

namespace sinkloc {

/// Minimum evacuation horizon of a sink set, or Infeasible. Infeasible
/// orders after every finite time.
class EvaluationResult {
 public:
  static constexpr EvaluationResult time(std::int64_t t) noexcept { return EvaluationResult(t); }
  static constexpr EvaluationResult infeasible() noexcept { return EvaluationResult(); }

  [[nodiscard]] constexpr bool is_feasible() const noexcept { return time_ >= 0; }
  /// Only meaningful when is_feasible().
  [[nodiscard]] constexpr std::int64_t value() const noexcept { return time_; }
  [[nodiscard]] constexpr bool within(std::int64_t horizon) const noexcept {
    return is_feasible() && time_ <= horizon;
  }
  [[nodiscard]] std::string str() const;

  friend constexpr bool operator==(const EvaluationResult&, const EvaluationResult&) = default;
  friend constexpr std::strong_ordering operator<=>(const EvaluationResult& a, const EvaluationResult& b) {
    if (a.is_feasible() != b.is_feasible()) {
      return a.is_feasible() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.time_ <=> b.time_;
  }

 private:
  constexpr EvaluationResult() = default;
  constexpr explicit EvaluationResult(std::int64_t t) : time_(t) {}

  std::int64_t time_ = -1;
};

/// Directed transshipment instance for a fixed sink set: every edge becomes
/// two opposite arcs, edges hosting interior sinks are split at them first,
/// and every sink gets a zero-transit arc into a fresh collector vertex
/// (the last vertex) with capacity equal to the total supply.
DirectedDynamicNetwork reduce_to_directed(const DynamicNetwork& network, const SinkSet& sinks);

struct HorizonBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;

  friend bool operator==(const HorizonBounds&, const HorizonBounds&) = default;
};

/// lower: the largest shortest-transit distance from a positive-supply
/// source to its nearest sink over positive-capacity edges. upper: lower
/// plus the total supply. nullopt when some supply cannot reach any sink.
std::optional<HorizonBounds> horizon_bounds(const DirectedDynamicNetwork& reduced);
std::optional<HorizonBounds> horizon_bounds(const DynamicNetwork& network, const SinkSet& sinks);

/// Least horizon at which all supply reaches the sinks (binary search over
/// horizon_bounds). Throws std::invalid_argument for an empty sink set.
EvaluationResult evacuation_time(const DynamicNetwork& network, const SinkSet& sinks);

/// Same value found by scanning upward from the lower bound.
EvaluationResult evacuation_time_linear(const DynamicNetwork& network, const SinkSet& sinks);

}  // namespace sinkloc
