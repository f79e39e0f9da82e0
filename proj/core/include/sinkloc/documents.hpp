#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sinkloc/evaluator.hpp"
#include "sinkloc/hardness.hpp"
#include "sinkloc/network.hpp"

namespace sinkloc {

inline constexpr int kDocumentVersion = 1;

/// Malformed document. `where` is a JSON pointer to the offending element.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}

  [[nodiscard]] const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// Instance documents are JSON:
//
//   {
//     "format": "sinkloc-instance",
//     "version": 1,
//     "k": 2,
//     "vertices": ["a", "b", "c"],
//     "edges": [{"u": "a", "v": "b", "capacity": 1, "transit": 4}, ...],
//     "sources": [{"vertex": "a", "supply": 2}, ...]
//   }
//
// Edges are referred to as e1, e2, ... in list order. Vertex names must be
// non-empty and free of ':' and whitespace. Unknown keys are rejected.

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

//   {"format": "sinkloc-hitting-set", "version": 1, "k": 1,
//    "universe": ["a", "b"], "family": [["a"], ["a", "b"]]}
HittingSetInstance parse_hitting_set(std::string_view text);
std::string serialize_hitting_set(const HittingSetInstance& hs);

/// "<vertex>" or "e<edge number>:<offset>".
std::string format_position(const DynamicNetwork& network, const Position& position);
/// Parses a sink token and canonicalizes it. Throws DocumentError.
Position parse_position(const DynamicNetwork& network, std::string_view token);

struct SolutionDocument {
  std::string solver;
  std::vector<std::string> sinks;
  EvaluationResult time = EvaluationResult::infeasible();
  std::optional<std::uint64_t> candidates;
  std::uint64_t subsets_evaluated = 0;
  std::optional<double> wall_time_ms;

  friend bool operator==(const SolutionDocument&, const SolutionDocument&) = default;
};

std::string serialize_solution(const SolutionDocument& solution);
SolutionDocument parse_solution(std::string_view text);

}  // namespace sinkloc
