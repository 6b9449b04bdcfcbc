#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "openpack/errors.hpp"

namespace openpack::cli {
namespace {

struct Header {
  std::size_t n = 0;
  std::size_t m = 0;
};

std::string at_line(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

std::uint64_t read_count(std::istringstream& tokens, std::size_t line, const char* what) {
  std::string token;
  if (!(tokens >> token)) throw ParseError(at_line(line, std::string("missing ") + what));
  if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit)) {
    throw ParseError(at_line(line, std::string("expected a non-negative integer for ") + what +
                                       ", got '" + token + "'"));
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw ParseError(at_line(line, std::string(what) + " is out of range"));
  }
}

Vertex read_vertex(std::istringstream& tokens, std::size_t line, std::size_t n) {
  auto v = read_count(tokens, line, "vertex");
  if (v < 1 || v > n) {
    throw ParseError(at_line(line, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n)));
  }
  return static_cast<Vertex>(v - 1);
}

void expect_end(std::istringstream& tokens, std::size_t line) {
  std::string extra;
  if (tokens >> extra) throw ParseError(at_line(line, "unexpected trailing token '" + extra + "'"));
}

// Shared line scanner. `on_edge` consumes the rest of an "e" line.
template <typename OnEdge>
std::pair<Header, std::map<Vertex, std::string>> scan_lines(std::istream& in, bool multi,
                                                            OnEdge on_edge) {
  std::optional<Header> header;
  std::map<Vertex, std::string> labels;
  std::vector<std::pair<std::size_t, std::string>> pending_labels;
  std::size_t edges_seen = 0;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::istringstream tokens(text);
    std::string kind;
    if (!(tokens >> kind)) continue;
    if (kind == "c") {
      std::string word;
      if (tokens >> word && word == "label") {
        pending_labels.emplace_back(line, text);
      }
      continue;
    }
    if (kind == "p") {
      if (header) throw ParseError(at_line(line, "second problem line"));
      std::streampos mark = tokens.tellg();
      std::string format;
      tokens >> format;
      if (format == "multi") {
        if (!multi) throw ParseError(at_line(line, "multigraph file where a simple graph is expected"));
      } else if (multi) {
        throw ParseError(at_line(line, "expected 'p multi <n> <m>'"));
      } else if (format != "edge") {
        tokens.clear();
        tokens.seekg(mark);
      }
      Header h;
      h.n = read_count(tokens, line, "vertex count");
      h.m = read_count(tokens, line, "edge count");
      expect_end(tokens, line);
      header = h;
      continue;
    }
    if (kind == "e") {
      if (!header) throw ParseError(at_line(line, "edge before the problem line"));
      Vertex u = read_vertex(tokens, line, header->n);
      Vertex v = read_vertex(tokens, line, header->n);
      if (u == v) throw ParseError(at_line(line, "self-loop"));
      on_edge(u, v, tokens, line);
      expect_end(tokens, line);
      ++edges_seen;
      continue;
    }
    throw ParseError(at_line(line, "unknown line type '" + kind + "'"));
  }
  if (!header) throw ParseError("missing problem line 'p <n> <m>'");
  if (edges_seen != header->m) {
    throw ParseError("problem line announces " + std::to_string(header->m) + " edges, found " +
                     std::to_string(edges_seen));
  }
  for (const auto& [line, raw] : pending_labels) {
    std::istringstream tokens(raw);
    std::string skip;
    tokens >> skip >> skip;
    Vertex v = read_vertex(tokens, line, header->n);
    std::string rest;
    std::getline(tokens, rest);
    auto first = rest.find_first_not_of(" \t");
    if (first == std::string::npos) throw ParseError(at_line(line, "empty label"));
    if (!labels.emplace(v, rest.substr(first)).second) {
      throw ParseError(at_line(line, "second label for vertex " + std::to_string(v + 1)));
    }
  }
  return {*header, std::move(labels)};
}

std::vector<std::string> fill_labels(std::size_t n, const std::map<Vertex, std::string>& given) {
  if (given.empty()) return {};
  std::vector<std::string> out(n);
  for (Vertex v = 0; v < n; ++v) {
    auto it = given.find(v);
    out[v] = it != given.end() ? it->second : std::to_string(v);
  }
  return out;
}

void write_labels(std::ostringstream& out, const std::vector<std::string>& labels) {
  for (std::size_t v = 0; v < labels.size(); ++v) out << "c label " << v + 1 << ' ' << labels[v] << '\n';
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

std::uint64_t as_count(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::vector<std::uint32_t> as_index_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::uint32_t> out;
  for (const auto& item : j) {
    auto value = as_count(item, what);
    if (value > UINT32_MAX) throw ParseError(std::string(what) + " entry out of range");
    out.push_back(static_cast<std::uint32_t>(value));
  }
  return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::vector<Edge> edges;
  auto [header, labels] = scan_lines(in, false, [&](Vertex u, Vertex v, std::istringstream&, std::size_t) {
    edges.emplace_back(u, v);
  });
  return Graph(header.n, edges, fill_labels(header.n, labels));
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  if (g.has_labels()) write_labels(out, g.labels());
  auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Multigraph parse_multigraph(std::istream& in) {
  std::vector<MultiEdge> edges;
  auto [header, labels] = scan_lines(in, true, [&](Vertex u, Vertex v, std::istringstream& tokens,
                                                   std::size_t line) {
    auto label = read_count(tokens, line, "edge label");
    if (label > UINT32_MAX) throw ParseError(at_line(line, "edge label out of range"));
    edges.push_back({u, v, static_cast<std::uint32_t>(label)});
  });
  return Multigraph(header.n, std::move(edges), fill_labels(header.n, labels));
}

std::string write_multigraph(const Multigraph& mg) {
  std::ostringstream out;
  write_labels(out, mg.vertex_labels());
  out << "p multi " << mg.order() << ' ' << mg.size() << '\n';
  for (const auto& e : mg.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.label << '\n';
  return out.str();
}

Certificate parse_certificate(const json& j) {
  Certificate c;
  const json& problem = field(j, "problem");
  if (!problem.is_string()) throw ParseError("'problem' must be a string");
  c.problem = problem.get<std::string>();
  c.set = as_index_list(field(j, "set"), "set");
  if (auto it = j.find("size"); it != j.end() && as_count(*it, "size") != c.set.size()) {
    throw ParseError("'size' does not match the number of set members");
  }
  return c;
}

json certificate_json(const std::string& problem, std::span<const std::uint32_t> set) {
  return json{{"problem", problem}, {"set", std::vector<std::uint32_t>(set.begin(), set.end())},
              {"size", set.size()}};
}

HittingSetInstance parse_hitting_set(const json& j) {
  HittingSetInstance inst;
  inst.universe_size = as_count(field(j, "universe"), "universe");
  inst.r = as_count(field(j, "r"), "r");
  const json& sets = field(j, "sets");
  if (!sets.is_array()) throw ParseError("'sets' must be an array");
  for (const auto& s : sets) inst.sets.push_back(as_index_list(s, "set member"));
  inst.validate();
  return inst;
}

json hitting_set_json(const HittingSetInstance& inst) {
  return json{{"universe", inst.universe_size}, {"r", inst.r}, {"sets", inst.sets}};
}

RdmInstance parse_rdm(const json& j) {
  RdmInstance inst;
  inst.r = as_count(field(j, "r"), "r");
  inst.q = as_count(field(j, "q"), "q");
  const json& tuples = field(j, "tuples");
  if (!tuples.is_array()) throw ParseError("'tuples' must be an array");
  for (const auto& t : tuples) inst.tuples.push_back(as_index_list(t, "tuple entry"));
  inst.validate();
  return inst;
}

json rdm_json(const RdmInstance& inst) {
  return json{{"r", inst.r}, {"q", inst.q}, {"tuples", inst.tuples}};
}

json witness_json(const Witness& w) {
  struct Visitor {
    json operator()(const CommonNeighborWitness& x) const {
      return {{"kind", "common-neighbor"}, {"vertices", {x.first, x.second}}, {"shared", x.shared}};
    }
    json operator()(const UndominatedWitness& x) const {
      return {{"kind", "undominated"}, {"vertex", x.vertex}};
    }
    json operator()(const AdjacentPairWitness& x) const {
      return {{"kind", "adjacent-pair"}, {"vertices", {x.first, x.second}}};
    }
    json operator()(const SharedEndpointWitness& x) const {
      return {{"kind", "shared-endpoint"}, {"edges", {x.first_label, x.second_label}},
              {"endpoint", x.endpoint}};
    }
    json operator()(const UnhitSetWitness& x) const {
      return {{"kind", "unhit-set"}, {"set", x.set_index}};
    }
    json operator()(const CoordinateClashWitness& x) const {
      return {{"kind", "coordinate-clash"}, {"tuples", {x.first, x.second}},
              {"coordinate", x.coordinate}};
    }
    json operator()(const CardinalityWitness& x) const {
      return {{"kind", "cardinality"}, {"expected", x.expected}, {"actual", x.actual}};
    }
  };
  json out = std::visit(Visitor{}, w);
  out["message"] = describe(w);
  return out;
}

json partition_json(const SplitPartition& p) {
  return json{{"clique", p.clique}, {"independent", p.independent}};
}

json roles_json(const ReductionInstance& inst) {
  json roles = json::array();
  bool multi = std::holds_alternative<Multigraph>(inst.graph);
  for (Vertex v = 0; v < inst.roles.size(); ++v) {
    const Role& r = inst.roles[v];
    std::string label = multi ? inst.output_multigraph().vertex_label(v) : inst.output_graph().label(v);
    roles.push_back({{"vertex", v}, {"kind", role_name(r.kind)}, {"a", r.a}, {"b", r.b}, {"label", label}});
  }
  json out{{"construction", inst.construction}, {"roles", roles}};
  if (inst.partition) out["partition"] = partition_json(*inst.partition);
  if (inst.source_partition) out["source_partition"] = partition_json(*inst.source_partition);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json read_json_file(const std::filesystem::path& path) {
  std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::string text = read_file(path);
  try {
    return parse_graph_text(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write " + path.string());
  out << content;
}

}  // namespace openpack::cli
