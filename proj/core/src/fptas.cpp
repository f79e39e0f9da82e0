#include "sinkloc/fptas.hpp"

#include <algorithm>
#include <stdexcept>

namespace sinkloc {

std::int64_t sampling_stride(std::int64_t transit, const Rational& epsilon) {
  return std::max<std::int64_t>(1, epsilon.floor_times(transit));
}

CandidateSet sample_positions(const DynamicNetwork& network, const Rational& epsilon) {
  if (!epsilon.positive()) throw std::invalid_argument("epsilon must be positive, got " + epsilon.str());
  CandidateSet out{{}, epsilon};
  for (VertexId v = 0; v < network.vertex_count(); ++v) out.positions.push_back(Position::at_vertex(v));
  for (EdgeId id = 0; id < network.edge_count(); ++id) {
    const std::int64_t transit = network.edges[id].transit;
    const std::int64_t stride = sampling_stride(transit, epsilon);
    for (std::int64_t off = stride; off < transit; off += stride) {
      out.positions.push_back(Position::on_edge(id, off));
    }
  }
  return out;
}

SubsetStream enumerate_k_subsets(const CandidateSet& candidates, std::size_t k) {
  return SubsetStream(candidates.positions, k);
}

ApproxResult solve_fptas(const Instance& instance, const Rational& epsilon, const SolveOptions& options) {
  require_valid(instance);
  CandidateSet candidates = sample_positions(instance.network, epsilon);
  SubsetSearchResult found =
      search_subsets(instance.network, candidates.positions, instance.k, {options.parallelism, std::nullopt});

  ApproxResult out;
  out.sinks = std::move(found.sinks);
  out.time = found.time;
  out.epsilon = epsilon;
  out.candidates_evaluated = found.evaluated;
  out.candidate_count = candidates.positions.size();
  return out;
}

}  // namespace sinkloc
