#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sinkloc/evaluator.hpp"
#include "sinkloc/network.hpp"
#include "sinkloc/rational.hpp"
#include "sinkloc/subsets.hpp"

namespace sinkloc {

/// Sampled sink positions for a given ε: every vertex plus, on each edge,
/// the interior offsets t_e, 2·t_e, ... below τ(e), where
/// t_e = max(1, ⌊ε·τ(e)⌋). Consecutive candidates on an edge (endpoints
/// included) are therefore at most t_e apart.
struct CandidateSet {
  std::vector<Position> positions;
  Rational epsilon;
};

/// t_e for an edge of the given transit.
std::int64_t sampling_stride(std::int64_t transit, const Rational& epsilon);

/// Throws std::invalid_argument unless ε > 0.
CandidateSet sample_positions(const DynamicNetwork& network, const Rational& epsilon);

SubsetStream enumerate_k_subsets(const CandidateSet& candidates, std::size_t k);

struct ApproxResult {
  SinkSet sinks;
  EvaluationResult time = EvaluationResult::infeasible();
  Rational epsilon;
  std::uint64_t candidates_evaluated = 0;  // number of sink sets evaluated
  std::size_t candidate_count = 0;
};

struct SolveOptions {
  unsigned parallelism = 1;
};

/// Best sink set among all k-subsets of the candidate set. Finite times beat
/// Infeasible; ties go to the lexicographically smallest set. Throws
/// std::invalid_argument for an invalid instance or ε <= 0.
ApproxResult solve_fptas(const Instance& instance, const Rational& epsilon, const SolveOptions& options = {});

}  // namespace sinkloc
