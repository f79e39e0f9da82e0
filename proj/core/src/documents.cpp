#include "sinkloc/documents.hpp"

#include <algorithm>
#include <charconv>
#include <initializer_list>
#include <set>

#include "json.hpp"

namespace sinkloc {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kInstanceFormat = "sinkloc-instance";
constexpr std::string_view kHittingSetFormat = "sinkloc-hitting-set";
constexpr std::string_view kSolutionFormat = "sinkloc-solution";

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError("byte " + std::to_string(e.byte), "not valid JSON");
  }
}

const Json& expect_object(const Json& j, const std::string& path,
                          std::initializer_list<std::string_view> required,
                          std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) throw DocumentError(path.empty() ? "/" : path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    auto known = [&](std::initializer_list<std::string_view> keys) {
      return std::find(keys.begin(), keys.end(), key) != keys.end();
    };
    if (!known(required) && !known(optional)) throw DocumentError(child(path, key), "unknown field");
  }
  for (std::string_view key : required) {
    if (!j.contains(key)) throw DocumentError(child(path, key), "missing field");
  }
  return j;
}

const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw DocumentError(path, "expected an array");
  return j;
}

std::int64_t expect_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw DocumentError(path, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw DocumentError(path, "integer out of range");
  }
  return j.get<std::int64_t>();
}

std::string expect_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw DocumentError(path, "expected a string");
  return j.get<std::string>();
}

void expect_header(const Json& j, std::string_view format) {
  if (expect_string(j.at("format"), "/format") != format) {
    throw DocumentError("/format", "expected \"" + std::string(format) + "\"");
  }
  if (expect_int(j.at("version"), "/version") != kDocumentVersion) {
    throw DocumentError("/version", "unsupported version");
  }
}

Json header(std::string_view format) {
  Json j;
  j["format"] = format;
  j["version"] = kDocumentVersion;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool valid_name(std::string_view name) {
  return !name.empty() && name.find_first_of(": \t\r\n") == std::string_view::npos;
}

std::size_t expect_k(const Json& j) {
  std::int64_t k = expect_int(j, "/k");
  if (k < 1) throw DocumentError("/k", "k must be at least 1");
  return static_cast<std::size_t>(k);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const Json doc = parse_json(text);
  expect_object(doc, "", {"format", "version", "k", "vertices", "edges", "sources"});
  expect_header(doc, kInstanceFormat);

  Instance out;
  out.k = expect_k(doc.at("k"));
  DynamicNetwork& net = out.network;

  const Json& vertices = expect_array(doc.at("vertices"), "/vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = child("/vertices", i);
    std::string name = expect_string(vertices[i], path);
    if (!valid_name(name)) throw DocumentError(path, "vertex name must be non-empty without ':' or whitespace");
    if (net.find_vertex(name)) throw DocumentError(path, "duplicate vertex '" + name + "'");
    net.add_vertex(std::move(name));
  }

  auto vertex_ref = [&](const Json& j, const std::string& path) {
    std::string name = expect_string(j, path);
    auto id = net.find_vertex(name);
    if (!id) throw DocumentError(path, "unknown vertex '" + name + "'");
    return *id;
  };

  const Json& edges = expect_array(doc.at("edges"), "/edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = child("/edges", i);
    const Json& e = expect_object(edges[i], path, {"u", "v", "capacity", "transit"});
    net.add_edge(vertex_ref(e.at("u"), child(path, "u")), vertex_ref(e.at("v"), child(path, "v")),
                 expect_int(e.at("capacity"), child(path, "capacity")),
                 expect_int(e.at("transit"), child(path, "transit")));
  }

  const Json& sources = expect_array(doc.at("sources"), "/sources");
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const std::string path = child("/sources", i);
    const Json& s = expect_object(sources[i], path, {"vertex", "supply"});
    VertexId v = vertex_ref(s.at("vertex"), child(path, "vertex"));
    if (net.supplies.contains(v)) throw DocumentError(path, "vertex listed twice as a source");
    net.set_supply(v, expect_int(s.at("supply"), child(path, "supply")));
  }
  return out;
}

std::string serialize_instance(const Instance& instance) {
  const DynamicNetwork& net = instance.network;
  Json j = header(kInstanceFormat);
  j["k"] = instance.k;
  j["vertices"] = net.vertex_names;
  Json edges = Json::array();
  for (const Edge& e : net.edges) {
    Json rec;
    rec["u"] = net.vertex_names.at(e.u);
    rec["v"] = net.vertex_names.at(e.v);
    rec["capacity"] = e.capacity;
    rec["transit"] = e.transit;
    edges.push_back(std::move(rec));
  }
  j["edges"] = std::move(edges);
  Json sources = Json::array();
  for (const auto& [v, s] : net.supplies) {
    Json rec;
    rec["vertex"] = net.vertex_names.at(v);
    rec["supply"] = s;
    sources.push_back(std::move(rec));
  }
  j["sources"] = std::move(sources);
  return dump(j);
}

HittingSetInstance parse_hitting_set(std::string_view text) {
  const Json doc = parse_json(text);
  expect_object(doc, "", {"format", "version", "k", "universe", "family"});
  expect_header(doc, kHittingSetFormat);

  HittingSetInstance hs;
  hs.k = expect_k(doc.at("k"));
  std::set<std::string> universe;
  const Json& elements = expect_array(doc.at("universe"), "/universe");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string path = child("/universe", i);
    std::string name = expect_string(elements[i], path);
    if (!valid_name(name)) throw DocumentError(path, "element name must be non-empty without ':' or whitespace");
    if (!universe.insert(name).second) throw DocumentError(path, "duplicate element '" + name + "'");
    hs.universe.push_back(std::move(name));
  }

  const Json& family = expect_array(doc.at("family"), "/family");
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::string path = child("/family", i);
    const Json& set = expect_array(family[i], path);
    if (set.empty()) throw DocumentError(path, "empty set");
    std::set<std::string> seen;
    std::vector<std::string> members;
    for (std::size_t m = 0; m < set.size(); ++m) {
      const std::string mpath = child(path, m);
      std::string name = expect_string(set[m], mpath);
      if (!universe.contains(name)) throw DocumentError(mpath, "element '" + name + "' not in universe");
      if (!seen.insert(name).second) throw DocumentError(mpath, "duplicate element '" + name + "' in set");
      members.push_back(std::move(name));
    }
    hs.family.push_back(std::move(members));
  }
  return hs;
}

std::string serialize_hitting_set(const HittingSetInstance& hs) {
  Json j = header(kHittingSetFormat);
  j["k"] = hs.k;
  j["universe"] = hs.universe;
  j["family"] = hs.family;
  return dump(j);
}

std::string format_position(const DynamicNetwork& network, const Position& position) {
  if (position.is_vertex()) return network.vertex_names.at(position.vertex());
  return "e" + std::to_string(position.id + 1) + ":" + std::to_string(position.offset);
}

Position parse_position(const DynamicNetwork& network, std::string_view token) {
  const std::string where = "sink '" + std::string(token) + "'";
  auto colon = token.find(':');
  if (colon == std::string_view::npos) {
    auto v = network.find_vertex(token);
    if (!v) throw DocumentError(where, "unknown vertex");
    return Position::at_vertex(*v);
  }

  auto parse_number = [&](std::string_view digits) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw DocumentError(where, "expected <vertex> or e<edge>:<offset>");
    }
    return value;
  };
  std::string_view edge = token.substr(0, colon);
  if (edge.size() < 2 || edge.front() != 'e') throw DocumentError(where, "expected <vertex> or e<edge>:<offset>");
  const std::int64_t number = parse_number(edge.substr(1));
  const std::int64_t offset = parse_number(token.substr(colon + 1));
  if (number < 1 || static_cast<std::uint64_t>(number) > network.edge_count()) {
    throw DocumentError(where, "unknown edge");
  }
  const auto id = static_cast<EdgeId>(number - 1);
  if (offset < 0 || offset > network.edges[id].transit) {
    throw DocumentError(where, "offset outside [0, " + std::to_string(network.edges[id].transit) + "]");
  }
  return canonicalize(network, Position::on_edge(id, offset));
}

std::string serialize_solution(const SolutionDocument& solution) {
  Json j = header(kSolutionFormat);
  j["solver"] = solution.solver;
  j["sinks"] = solution.sinks;
  if (solution.time.is_feasible()) {
    j["evacuation_time"] = solution.time.value();
  } else {
    j["evacuation_time"] = "infeasible";
  }
  if (solution.candidates) j["candidates"] = *solution.candidates;
  j["subsets_evaluated"] = solution.subsets_evaluated;
  if (solution.wall_time_ms) j["wall_time_ms"] = *solution.wall_time_ms;
  return dump(j);
}

SolutionDocument parse_solution(std::string_view text) {
  const Json doc = parse_json(text);
  expect_object(doc, "", {"format", "version", "solver", "sinks", "evacuation_time", "subsets_evaluated"},
                {"candidates", "wall_time_ms"});
  expect_header(doc, kSolutionFormat);

  SolutionDocument out;
  out.solver = expect_string(doc.at("solver"), "/solver");
  const Json& sinks = expect_array(doc.at("sinks"), "/sinks");
  for (std::size_t i = 0; i < sinks.size(); ++i) out.sinks.push_back(expect_string(sinks[i], child("/sinks", i)));

  const Json& time = doc.at("evacuation_time");
  if (time.is_string()) {
    if (time.get<std::string>() != "infeasible") throw DocumentError("/evacuation_time", "expected \"infeasible\"");
    out.time = EvaluationResult::infeasible();
  } else {
    std::int64_t t = expect_int(time, "/evacuation_time");
    if (t < 0) throw DocumentError("/evacuation_time", "negative time");
    out.time = EvaluationResult::time(t);
  }
  if (doc.contains("candidates")) {
    out.candidates = static_cast<std::uint64_t>(expect_int(doc.at("candidates"), "/candidates"));
  }
  out.subsets_evaluated = static_cast<std::uint64_t>(expect_int(doc.at("subsets_evaluated"), "/subsets_evaluated"));
  if (doc.contains("wall_time_ms")) {
    const Json& w = doc.at("wall_time_ms");
    if (!w.is_number()) throw DocumentError("/wall_time_ms", "expected a number");
    out.wall_time_ms = w.get<double>();
  }
  return out;
}

}  // namespace sinkloc
