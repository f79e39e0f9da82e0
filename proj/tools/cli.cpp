#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sinkloc/documents.hpp"
#include "sinkloc/evaluator.hpp"
#include "sinkloc/exact.hpp"
#include "sinkloc/fptas.hpp"
#include "sinkloc/hardness.hpp"
#include "sinkloc/rational.hpp"

namespace sinkloc::cli {

namespace {

// Raised for bad input files or arguments; reported on stderr.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::vector<std::string> sinks;
  std::string epsilon = "1/2";
  std::optional<std::size_t> k_override;
  std::uint64_t budget = kDefaultSubsetBudget;
  unsigned parallelism = 1;
  std::string output;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance load_instance(const Options& opts, std::ostream& err) {
  Instance instance;
  try {
    instance = parse_instance(read_file(opts.input));
  } catch (const DocumentError& e) {
    throw InputError(opts.input + ": " + e.what());
  }
  if (opts.k_override) {
    if (*opts.k_override < 1) throw InputError("--k-override must be at least 1");
    instance.k = *opts.k_override;
  }
  if (auto problems = validate(instance); !problems.empty()) {
    std::string message = opts.input + ": invalid instance";
    for (const auto& p : problems) message += "\n  " + p;
    throw InputError(message);
  }
  for (const auto& w : lint(instance.network)) err << "warning: " << w << "\n";
  return instance;
}

HittingSetInstance load_hitting_set(const Options& opts) {
  try {
    return parse_hitting_set(read_file(opts.input));
  } catch (const DocumentError& e) {
    throw InputError(opts.input + ": " + e.what());
  }
}

void emit(const Options& opts, const std::string& document, std::ostream& out) {
  if (opts.output.empty()) {
    out << document;
    return;
  }
  std::ofstream file(opts.output, std::ios::binary);
  if (!file) throw InputError("cannot write '" + opts.output + "'");
  file << document;
}

std::vector<std::string> format_sinks(const DynamicNetwork& net, const SinkSet& sinks) {
  std::vector<std::string> out;
  for (const Position& p : sinks) out.push_back(format_position(net, p));
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void cmd_solve(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Instance instance = load_instance(opts, err);
  Rational epsilon;
  try {
    epsilon = Rational::parse(opts.epsilon);
  } catch (const std::exception& e) {
    throw InputError(std::string("--epsilon: ") + e.what());
  }
  if (!epsilon.positive()) throw InputError("--epsilon must be positive");

  ApproxResult result = solve_fptas(instance, epsilon, {opts.parallelism});
  if (instance.k > result.candidate_count) {
    err << "warning: k = " << instance.k << " exceeds the " << result.candidate_count
        << " candidate positions; using all of them\n";
  }

  SolutionDocument doc;
  doc.solver = "fptas eps=" + epsilon.str();
  doc.sinks = format_sinks(instance.network, result.sinks);
  doc.time = result.time;
  doc.candidates = result.candidate_count;
  doc.subsets_evaluated = result.candidates_evaluated;
  if (opts.timing) doc.wall_time_ms = elapsed_ms(start);
  emit(opts, serialize_solution(doc), out);
}

void cmd_evaluate(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Instance instance = load_instance(opts, err);
  if (opts.sinks.empty()) throw InputError("evaluate needs at least one sink");

  std::vector<Position> positions;
  for (const auto& token : opts.sinks) {
    try {
      positions.push_back(parse_position(instance.network, token));
    } catch (const DocumentError& e) {
      throw InputError(e.what());
    }
  }
  SinkSet sinks;
  try {
    sinks = SinkSet(std::move(positions));
  } catch (const std::invalid_argument&) {
    throw InputError("sink tokens name the same position more than once");
  }

  SolutionDocument doc;
  doc.solver = "evaluate";
  doc.sinks = format_sinks(instance.network, sinks);
  doc.time = evacuation_time(instance.network, sinks);
  doc.subsets_evaluated = 1;
  if (opts.timing) doc.wall_time_ms = elapsed_ms(start);
  emit(opts, serialize_solution(doc), out);
}

void cmd_exact(const Options& opts, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Instance instance = load_instance(opts, err);
  ExactResult result = solve_exact(instance, {opts.budget, opts.parallelism});

  SolutionDocument doc;
  doc.solver = "exact";
  doc.sinks = format_sinks(instance.network, result.sinks);
  doc.time = result.time;
  doc.candidates = result.position_count;
  doc.subsets_evaluated = result.subsets_evaluated;
  if (opts.timing) doc.wall_time_ms = elapsed_ms(start);
  emit(opts, serialize_solution(doc), out);
}

void cmd_gen_hs(const Options& opts, std::ostream& out) {
  HittingSetInstance hs = load_hitting_set(opts);
  emit(opts, serialize_instance(from_hitting_set(hs)), out);
}

void cmd_verify_hs(const Options& opts, std::ostream& out) {
  HittingSetInstance hs = load_hitting_set(opts);
  ReductionCheck check = check_reduction(hs, {opts.budget, opts.parallelism});

  nlohmann::ordered_json report;
  report["format"] = "sinkloc-reduction-report";
  report["version"] = kDocumentVersion;
  report["k"] = hs.k;
  report["hitting_set"] = check.has_hitting_set;
  report["evacuates_within_one"] = check.evacuates_within_one;
  report["result"] = check.agrees() ? "pass" : "fail";
  emit(opts, report.dump(2) + "\n", out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-sink location on dynamic networks", "sinkloc"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--output", opts.output, "Write the document to this file instead of stdout");
  };
  auto add_parallel = [&](CLI::App* cmd) {
    cmd->add_option("--parallelism", opts.parallelism, "Worker threads for subset evaluation")
        ->check(CLI::Range(1u, 1024u));
  };
  auto add_timing = [&](CLI::App* cmd) {
    cmd->add_flag("--timing", opts.timing, "Include wall_time_ms in the solution document");
  };

  auto* solve = app.add_subcommand("solve", "Approximate the best k sinks by candidate sampling");
  solve->add_option("instance", opts.input, "Instance document")->required();
  solve->add_option("--epsilon", opts.epsilon, "Approximation parameter as p/q or decimal")
      ->capture_default_str();
  solve->add_option("--k-override", opts.k_override, "Use this k instead of the document's");
  add_parallel(solve);
  add_timing(solve);
  add_common(solve);

  auto* evaluate = app.add_subcommand("evaluate", "Evacuation time for the given sinks");
  evaluate->add_option("instance", opts.input, "Instance document")->required();
  evaluate->add_option("sinks", opts.sinks, "Sink tokens: <vertex> or e<edge>:<offset>")->required();
  add_timing(evaluate);
  add_common(evaluate);

  auto* exact = app.add_subcommand("exact", "Exhaustive search over all integer positions");
  exact->add_option("instance", opts.input, "Instance document")->required();
  exact->add_option("--budget", opts.budget, "Maximum number of sink sets to evaluate")->capture_default_str();
  exact->add_option("--k-override", opts.k_override, "Use this k instead of the document's");
  add_parallel(exact);
  add_timing(exact);
  add_common(exact);

  auto* gen_hs = app.add_subcommand("gen-hs", "Build a sink-location instance from a hitting set instance");
  gen_hs->add_option("hitting-set", opts.input, "Hitting set document")->required();
  add_common(gen_hs);

  auto* verify_hs = app.add_subcommand("verify-hs", "Check the hitting set / one-step evacuation equivalence");
  verify_hs->add_option("hitting-set", opts.input, "Hitting set document")->required();
  verify_hs->add_option("--budget", opts.budget, "Maximum number of subsets per side")->capture_default_str();
  add_parallel(verify_hs);
  add_common(verify_hs);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (solve->parsed()) cmd_solve(opts, out, err);
    if (evaluate->parsed()) cmd_evaluate(opts, out, err);
    if (exact->parsed()) cmd_exact(opts, out, err);
    if (gen_hs->parsed()) cmd_gen_hs(opts, out);
    if (verify_hs->parsed()) cmd_verify_hs(opts, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sinkloc::cli
