// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Failure details follow the line, indented.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "corpus.hpp"
#include "sinkloc/documents.hpp"
#include "sinkloc/evaluator.hpp"
#include "sinkloc/exact.hpp"
#include "sinkloc/fptas.hpp"
#include "sinkloc/hardness.hpp"

namespace {

using namespace sinkloc;
namespace fs = std::filesystem;

constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr int kCorpusSize = 200;

struct Verdict {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(std::string detail) {
    pass = false;
    details.push_back(std::move(detail));
  }
};

const std::vector<Rational>& epsilons() {
  static const std::vector<Rational> e{Rational(1, 4), Rational(1, 2), Rational(1, 1)};
  return e;
}

// Connected corpus within the stated bounds; connectivity through
// positive-capacity tree edges makes every instance feasible.
const std::vector<Instance>& corpus() {
  static const std::vector<Instance> instances = [] {
    testing::Rng rng(kCorpusSeed);
    std::vector<Instance> out;
    for (int i = 0; i < kCorpusSize; ++i) out.push_back(testing::random_instance(rng));
    return out;
  }();
  return instances;
}

struct CorpusRun {
  ExactResult exact;
  std::vector<ApproxResult> approx;  // one per epsilon
};

const std::vector<CorpusRun>& corpus_runs() {
  static const std::vector<CorpusRun> runs = [] {
    std::vector<CorpusRun> out;
    for (const Instance& inst : corpus()) {
      CorpusRun run{solve_exact(inst), {}};
      for (const Rational& e : epsilons()) run.approx.push_back(solve_fptas(inst, e));
      out.push_back(std::move(run));
    }
    return out;
  }();
  return runs;
}

std::string describe(std::size_t index, const Instance& inst) {
  return "instance #" + std::to_string(index) + ":\n" + serialize_instance(inst);
}

Verdict approximation_guarantee() {
  Verdict v;
  std::size_t checks = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const CorpusRun& run = corpus_runs()[i];
    if (!run.exact.time.is_feasible()) {
      v.fail(describe(i, corpus()[i]) + "exact solver reports infeasible on a corpus instance");
      continue;
    }
    const std::int64_t opt = run.exact.time.value();
    for (std::size_t j = 0; j < epsilons().size(); ++j) {
      const Rational& e = epsilons()[j];
      const EvaluationResult& got = run.approx[j].time;
      ++checks;
      // time <= (1 + p/q) * opt  <=>  q * time <= (q + p) * opt
      if (!got.is_feasible() || got.value() * e.denominator() > (e.denominator() + e.numerator()) * opt) {
        v.fail(describe(i, corpus()[i]) + "eps=" + e.str() + " approx=" + got.str() +
               " exact=" + std::to_string(opt));
      }
    }
  }
  v.summary = std::to_string(corpus().size()) + " instances, " + std::to_string(checks) + " (instance, eps) checks, " +
              std::to_string(v.details.size()) + " violations";
  return v;
}

Verdict conservativeness() {
  Verdict v;
  std::size_t checks = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const CorpusRun& run = corpus_runs()[i];
    for (std::size_t j = 0; j < epsilons().size(); ++j) {
      ++checks;
      if (run.approx[j].time < run.exact.time) {
        v.fail(describe(i, corpus()[i]) + "eps=" + epsilons()[j].str() + " approx=" + run.approx[j].time.str() +
               " below exact=" + run.exact.time.str());
      }
    }
  }
  v.summary = std::to_string(checks) + " checks, " + std::to_string(v.details.size()) + " below the exact optimum";
  return v;
}

Verdict feasibility_monotonicity() {
  Verdict v;
  testing::Rng rng(kCorpusSeed + 3);
  std::size_t horizons = 0;
  int feasible_pairs = 0;
  int stranded = 0;
  // Sinks inside a capacity-0 edge can strand supply; such pairs have no
  // upper bound and only take part in the binary/linear comparison.
  for (int i = 0; feasible_pairs < 120; ++i) {
    DynamicNetwork net = testing::random_network(rng);
    SinkSet sinks = testing::random_sinks(rng, net, static_cast<std::size_t>(testing::uniform(rng, 1, 3)), true);
    EvaluationResult binary = evacuation_time(net, sinks);
    EvaluationResult linear = evacuation_time_linear(net, sinks);
    if (binary != linear) {
      v.fail("pair " + std::to_string(i) + ": binary search " + binary.str() + " vs linear scan " + linear.str());
    }
    DirectedDynamicNetwork reduced = reduce_to_directed(net, sinks);
    auto bounds = horizon_bounds(reduced);
    if (!bounds) {
      ++stranded;
      continue;
    }
    ++feasible_pairs;
    bool previous = feasible(reduced, 0);
    for (std::int64_t t = 0; t <= bounds->upper; ++t) {
      const bool next = feasible(reduced, t + 1);
      ++horizons;
      if (previous && !next) v.fail("pair " + std::to_string(i) + ": feasible at T=" + std::to_string(t) + " only");
      previous = next;
    }
    if (!previous) v.fail("pair " + std::to_string(i) + ": not feasible at the upper bound");
  }
  v.summary = std::to_string(feasible_pairs) + " feasible pairs (" + std::to_string(horizons) + " horizons) + " +
              std::to_string(stranded) + " stranded pairs, binary search = linear scan";
  return v;
}

Verdict reduction_consistency() {
  Verdict v;
  testing::Rng rng(kCorpusSeed + 4);
  const int pairs = 120;
  int crowded = 0;
  for (int i = 0; i < pairs; ++i) {
    DynamicNetwork net = testing::random_network(rng);
    SinkSet sinks = testing::random_sinks(rng, net, static_cast<std::size_t>(testing::uniform(rng, 2, 3)), true);

    std::vector<EdgePoint> interior;
    std::vector<Position> vertex_sinks;
    std::map<EdgeId, int> per_edge;
    for (const Position& p : sinks) {
      if (p.is_vertex()) {
        vertex_sinks.push_back(p);
      } else {
        interior.push_back(p.edge_point());
        ++per_edge[p.id];
      }
    }
    for (const auto& [edge, count] : per_edge) crowded += count >= 2 ? 1 : 0;
    Subdivision sub = subdivide_at(net, interior);
    for (const EdgePoint& p : interior) vertex_sinks.push_back(Position::at_vertex(sub.vertex_of.at(p)));

    EvaluationResult direct = evacuation_time(net, sinks);
    EvaluationResult split = evacuation_time(sub.network, SinkSet(vertex_sinks));
    if (direct != split) {
      v.fail("pair " + std::to_string(i) + ": reduction " + direct.str() + " vs subdivided " + split.str() + "\n" +
             serialize_instance({net, 1}));
    }
  }
  v.summary = std::to_string(pairs) + " pairs, " + std::to_string(crowded) + " with several sinks inside one edge";
  if (crowded == 0) v.fail("corpus produced no edge hosting two interior sinks");
  return v;
}

Verdict hand_values() {
  Verdict v;
  auto check = [&](const std::string& what, const EvaluationResult& got, const EvaluationResult& want) {
    if (got != want) v.fail(what + ": got " + got.str() + ", expected " + want.str());
  };

  DynamicNetwork edge;
  edge.add_vertex("u");
  edge.add_vertex("v");
  edge.add_edge(0, 1, 1, 4);
  edge.set_supply(0, 2);
  check("single edge", evacuation_time(edge, SinkSet({Position::at_vertex(1)})), EvaluationResult::time(5));

  DynamicNetwork star;
  star.add_vertex("c");
  for (auto name : {"l1", "l2", "l3"}) {
    VertexId leaf = star.add_vertex(name);
    star.add_edge(0, leaf, 1, 1);
    star.set_supply(leaf, 1);
  }
  check("star", evacuation_time(star, SinkSet({Position::at_vertex(0)})), EvaluationResult::time(1));

  Instance mid;
  mid.network.add_vertex("u");
  mid.network.add_vertex("v");
  mid.network.add_edge(0, 1, 1, 2);
  mid.network.set_supply(0, 1);
  mid.network.set_supply(1, 1);
  mid.k = 1;
  ExactResult r = solve_exact(mid);
  check("midpoint", r.time, EvaluationResult::time(1));
  if (r.sinks != SinkSet({Position::on_edge(0, 1)})) {
    v.fail("midpoint: sink " + format_position(mid.network, *r.sinks.begin()) + ", expected e1:1");
  }
  v.summary = "single edge Time(5), star Time(1), midpoint e1:1 Time(1)";
  return v;
}

Verdict hardness_reduction() {
  Verdict v;
  std::size_t exhaustive = 0;
  const std::string letters = "abcde";
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::string> universe;
    for (std::size_t i = 0; i < n; ++i) universe.push_back(std::string(1, letters[i]));
    // Pool: every nonempty subset of size at most 2, plus the whole universe.
    std::vector<std::vector<std::string>> pool;
    for (std::size_t a = 0; a < n; ++a) pool.push_back({universe[a]});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) pool.push_back({universe[a], universe[b]});
    }
    if (n > 2) pool.push_back(universe);

    for (std::size_t size = 0; size <= 4; ++size) {
      for (CombinationCursor c(pool.size(), size); c.valid(); c.advance()) {
        HittingSetInstance hs{universe, {}, 1};
        for (std::size_t idx : c.current()) hs.family.push_back(pool[idx]);
        for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
          hs.k = k;
          ++exhaustive;
          ReductionCheck check = check_reduction(hs);
          if (!check.agrees()) {
            v.fail(serialize_hitting_set(hs) + "hitting set " + (check.has_hitting_set ? "yes" : "no") +
                   ", one-step evacuation " + (check.evacuates_within_one ? "yes" : "no"));
          }
        }
      }
    }
  }

  testing::Rng rng(kCorpusSeed + 6);
  const int random = 100;
  for (int i = 0; i < random; ++i) {
    HittingSetInstance hs = testing::random_hitting_set(rng, 6, 6);
    if (!verify_reduction(hs)) v.fail(serialize_hitting_set(hs) + "random instance disagrees");
  }
  v.summary = std::to_string(exhaustive) + " exhaustive + " + std::to_string(random) + " random instances, " +
              std::to_string(v.details.size()) + " failures";
  return v;
}

Verdict candidate_bounds() {
  Verdict v;
  std::size_t sets = 0;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const DynamicNetwork& net = corpus()[i].network;
    for (const Rational& e : epsilons()) {
      ++sets;
      CandidateSet c = sample_positions(net, e);
      const auto limit = static_cast<std::int64_t>(net.vertex_count()) +
                         static_cast<std::int64_t>(net.edge_count()) * e.ceil_reciprocal();
      if (static_cast<std::int64_t>(c.positions.size()) > limit) {
        std::string transits;
        for (const Edge& edge : net.edges) transits += " " + std::to_string(edge.transit);
        v.fail("instance #" + std::to_string(i) + " eps=" + e.str() + ": " + std::to_string(c.positions.size()) +
               " candidates > " + std::to_string(limit) + " (|V|=" + std::to_string(net.vertex_count()) +
               ", |E|=" + std::to_string(net.edge_count()) + ", transits" + transits + ")");
      }
      for (EdgeId id = 0; id < net.edge_count(); ++id) {
        const std::int64_t stride = sampling_stride(net.edges[id].transit, e);
        std::int64_t previous = 0;
        auto gap = [&](std::int64_t at) {
          if (at - previous > stride) {
            v.fail("instance #" + std::to_string(i) + " eps=" + e.str() + " edge e" + std::to_string(id + 1) +
                   ": gap " + std::to_string(at - previous) + " > stride " + std::to_string(stride));
          }
          previous = at;
        };
        for (const Position& p : c.positions) {
          if (!p.is_vertex() && p.id == id) gap(p.offset);
        }
        gap(net.edges[id].transit);
      }
    }
  }
  v.summary = std::to_string(sets) + " candidate sets, " + std::to_string(v.details.size()) + " violations";
  return v;
}

Verdict parallel_determinism() {
  Verdict v;
  const fs::path dir = fs::temp_directory_path() / "sinkloc_acceptance";
  fs::create_directories(dir);
  const int instances = 20;
  for (int i = 0; i < instances; ++i) {
    const fs::path path = dir / ("instance" + std::to_string(i) + ".json");
    std::ofstream(path, std::ios::binary) << serialize_instance(corpus()[static_cast<std::size_t>(i)]);
    std::string reference;
    for (const char* p : {"1", "2", "8"}) {
      std::ostringstream out, err;
      int status = cli::run({"solve", path.string(), "--epsilon", "1/4", "--parallelism", p}, out, err);
      if (status != 0) {
        v.fail("instance #" + std::to_string(i) + " parallelism " + p + ": exit " + std::to_string(status) + " " +
               err.str());
        continue;
      }
      if (reference.empty()) {
        reference = out.str();
      } else if (out.str() != reference) {
        v.fail("instance #" + std::to_string(i) + " parallelism " + p + " output differs:\n" + out.str() +
               "expected:\n" + reference);
      }
    }
  }
  fs::remove_all(dir);
  v.summary = std::to_string(instances) + " instances x parallelism {1,2,8}, byte-compared";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "approximation guarantee", approximation_guarantee},
      {2, "conservativeness", conservativeness},
      {3, "feasibility monotonicity", feasibility_monotonicity},
      {4, "reduction consistency", reduction_consistency},
      {5, "hand-derived values", hand_values},
      {6, "hitting set equivalence", hardness_reduction},
      {7, "candidate set size and gap", candidate_bounds},
      {8, "determinism under parallelism", parallel_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", c.number, c.name, v.summary.c_str(),
                seconds);
    for (const std::string& d : v.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    failures += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
