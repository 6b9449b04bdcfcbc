#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "io.hpp"
#include "openpack/certify.hpp"
#include "openpack/errors.hpp"
#include "openpack/generators.hpp"
#include "openpack/oracle.hpp"
#include "openpack/recognize.hpp"
#include "openpack/reductions.hpp"
#include "openpack/solvers.hpp"
#include "scan.hpp"

namespace openpack::cli {
namespace {

Problem require_problem(const std::string& tag) {
  auto p = parse_problem(tag);
  if (!p) throw InvalidInput("unknown problem '" + tag + "', expected op or tds");
  return *p;
}

SplitPartition require_split(const Graph& g) {
  auto part = split_partition(g);
  if (!part) throw PreconditionFailed("graph is not a split graph");
  return *part;
}

json component_json(const ComponentSolve& c) {
  return json{{"vertices", c.vertices}, {"optimum", c.answer.size()}, {"method", c.method},
              {"evidence", c.evidence}};
}

json report_json(const SolveReport& report) {
  json components = json::array();
  for (const auto& c : report.components) components.push_back(component_json(c));
  return json{{"problem", problem_tag(report.problem)},
              {"optimum", report.optimum()},
              {"certificate", certificate_json(problem_tag(report.problem), report.answer)},
              {"method", report.method},
              {"class_evidence", report.evidence},
              {"components", components}};
}

int print_verdict(const CertifyResult& result, std::ostream& out) {
  json j{{"valid", result.valid}};
  if (!result.valid) j["witness"] = witness_json(*result.witness);
  out << j.dump() << '\n';
  return result.valid ? kExitOk : kExitRejected;
}

Multigraph read_multigraph_file(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return parse_multigraph(in);
}

std::filesystem::path default_prefix(const std::filesystem::path& input, int construction) {
  std::filesystem::path p = input;
  p.replace_extension();
  p += ".c" + std::to_string(construction);
  return p;
}

json map_certificate(const ReductionInstance& inst, const Certificate& cert) {
  const int c = inst.construction;
  const auto& s = cert.set;
  auto wrong = [&]() -> json {
    throw InvalidInput("construction " + std::to_string(c) + " cannot map a '" + cert.problem +
                       "' certificate");
  };
  if (c == 1 && cert.problem == "op") {
    auto trace = normalize_op_c1(inst, s);
    json j = certificate_json("is", trace.result);
    j["steps"] = trace.steps.size();
    return j;
  }
  if (c == 2 && cert.problem == "op") return certificate_json("is", normalize_op_c2(inst, s));
  if (c == 3 && cert.problem == "tds") return certificate_json("hs", map_tds_c3(inst, s));
  if (c == 3 && cert.problem == "hs") return certificate_json("tds", map_hs_c3(inst, s));
  if (c == 4 && cert.problem == "op") return certificate_json("rdm", map_op_c4(inst, s));
  if (c == 5 && cert.problem == "matching") {
    return certificate_json("op", map_c5_matching_to_packing(inst, s));
  }
  if (c == 5 && cert.problem == "op") return certificate_json("matching", map_c5_packing_to_matching(inst, s));
  return wrong();
}

void emit(const std::optional<std::filesystem::path>& path, const std::string& text, std::ostream& out) {
  if (path) {
    write_file(*path, text);
  } else {
    out << text;
  }
}

std::size_t require_positive(std::size_t value, const char* name) {
  if (value == 0) throw InvalidInput(std::string("--") + name + " must be positive");
  return value;
}

}  // namespace

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  auto fail = [&](int code, const char* kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
    return code;
  };
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(kExitInput, "parse", e.what());
  } catch (const FileError& e) {
    return fail(kExitInput, "file", e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(kExitInput, "parse", e.what());
  } catch (const InvalidInput& e) {
    return fail(kExitInput, "invalid-input", e.what());
  } catch (const SizeGuardExceeded& e) {
    return fail(kExitSizeGuard, "size-guard", e.what());
  } catch (const UndefinedProblem& e) {
    return fail(kExitUndefined, "undefined-problem", e.what());
  } catch (const PreconditionFailed& e) {
    return fail(kExitUndefined, "precondition", e.what());
  } catch (const BoundExceeded& e) {
    return fail(kExitUndefined, "bound-exceeded", e.what());
  } catch (const std::exception& e) {
    return fail(kExitInternal, "internal", e.what());
  }
}

// --- solve ----------------------------------------------------------------

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream&) {
  const Problem problem = require_problem(opt.problem);
  require_positive(opt.oracle_limit, "oracle-limit");
  require_positive(opt.max_class_r, "max-class-r");
  const Graph g = read_graph_file(opt.graph);
  const OracleLimits limits{opt.oracle_limit};
  SolveReport report;
  const std::string& m = opt.method;
  if (m == "auto") {
    report = auto_solve(g, problem, AutoSolveOptions{opt.max_class_r, limits});
  } else if (m == "oracle") {
    report.problem = problem;
    report.method = "oracle";
    report.answer = problem == Problem::open_packing ? max_open_packing_bf(g, limits)
                                                     : min_total_dominating_bf(g, limits);
  } else if (m == "bounded") {
    if (!opt.bound) throw InvalidInput("method bounded needs --bound");
    report = solve_bounded(g, problem, *opt.bound);
  } else if (m == "k13free-split" || m == "split-deg12") {
    if (problem != Problem::open_packing) throw InvalidInput("method " + m + " solves op only");
    report = m == "k13free-split" ? solve_op_k13free_split(g, require_split(g))
                                  : solve_op_split_deg12(g, require_split(g));
  } else if (m == "i1-split") {
    if (problem != Problem::total_domination) throw InvalidInput("method i1-split solves tds only");
    auto part = is_Ir_split(g, 1);
    if (!part) throw PreconditionFailed("graph is not I_1-split");
    report = solve_tds_i1_split(g, *part);
  } else {
    throw InvalidInput("unknown method '" + m + "'");
  }
  out << report_json(report).dump() << '\n';
  return kExitOk;
}

// --- certify --------------------------------------------------------------

int cmd_certify(const CertifyOptions& opt, std::ostream& out, std::ostream&) {
  const Certificate cert = parse_certificate(read_json_file(opt.certificate));
  const std::string& p = cert.problem;
  if (p == "hs") return print_verdict(is_hitting_set(parse_hitting_set(read_json_file(opt.instance)), cert.set), out);
  if (p == "rdm") return print_verdict(is_r_dimensional_matching(parse_rdm(read_json_file(opt.instance)), cert.set), out);
  if (p == "matching") return print_verdict(is_matching(read_multigraph_file(opt.instance), cert.set), out);
  const Graph g = read_graph_file(opt.instance);
  if (p == "is") return print_verdict(is_independent_set(g, cert.set), out);
  switch (require_problem(p)) {
    case Problem::open_packing:
      return print_verdict(is_open_packing_fast(g, cert.set), out);
    case Problem::total_domination:
      if (find_isolated_vertex(g)) throw UndefinedProblem("total domination is undefined with isolated vertices");
      return print_verdict(is_total_dominating(g, cert.set), out);
  }
  return kExitInternal;
}

// --- reduce ---------------------------------------------------------------

int cmd_reduce(const ReduceOptions& opt, std::ostream& out, std::ostream&) {
  ReductionInstance inst;
  switch (opt.construction) {
    case 1: inst = construct1(read_graph_file(opt.input)); break;
    case 2: inst = construct2(read_graph_file(opt.input)); break;
    case 3: inst = construct3(parse_hitting_set(read_json_file(opt.input))); break;
    case 4: inst = construct4(parse_rdm(read_json_file(opt.input))); break;
    case 5: {
      Graph g = read_graph_file(opt.input);
      inst = construct5(g, require_split(g));
      break;
    }
    default:
      throw InvalidInput("--construction must be 1..5");
  }
  const std::filesystem::path prefix = opt.output_prefix.value_or(default_prefix(opt.input, opt.construction));
  const bool multi = std::holds_alternative<Multigraph>(inst.graph);
  std::filesystem::path graph_path = prefix, roles_path = prefix;
  graph_path += multi ? ".mg" : ".gr";
  roles_path += ".roles.json";

  json summary{{"construction", opt.construction}};
  if (multi) {
    const Multigraph& mg = inst.output_multigraph();
    write_file(graph_path, write_multigraph(mg));
    summary["order"] = mg.order();
    summary["size"] = mg.size();
  } else {
    const Graph& g = inst.output_graph();
    write_file(graph_path, write_graph(g));
    summary["order"] = g.order();
    summary["size"] = g.size();
  }
  write_file(roles_path, roles_json(inst).dump(2) + "\n");
  summary["graph_file"] = graph_path.string();
  summary["roles_file"] = roles_path.string();
  if (opt.map_certificate) {
    summary["mapped"] = map_certificate(inst, parse_certificate(read_json_file(*opt.map_certificate)));
  }
  out << summary.dump() << '\n';
  return kExitOk;
}

// --- generate -------------------------------------------------------------

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream&) {
  const std::string& f = opt.family;
  if (f == "hitting-set") {
    auto inst = gen_random_hitting_set(opt.universe, opt.count, opt.r, opt.seed);
    emit(opt.output, hitting_set_json(inst).dump() + "\n", out);
    return kExitOk;
  }
  if (f == "rdm") {
    auto inst = gen_random_rdm(opt.q, opt.r, opt.count, opt.seed);
    emit(opt.output, rdm_json(inst).dump() + "\n", out);
    return kExitOk;
  }
  Graph g;
  if (f == "gr") g = gen_Gr(opt.r);
  else if (f == "hr") g = gen_Hr(opt.r);
  else if (f == "cycle") g = gen_cycle(opt.n);
  else if (f == "complete") g = gen_complete(opt.n);
  else if (f == "path") g = gen_path(opt.n);
  else if (f == "random") g = gen_random_graph(opt.n, opt.p, opt.seed);
  else if (f == "split") g = gen_random_split(opt.clique, opt.independent, opt.min_degree, opt.max_degree, opt.seed).first;
  else throw InvalidInput("unknown family '" + f + "'");
  emit(opt.output, write_graph(g), out);
  return kExitOk;
}

// --- scan -----------------------------------------------------------------

const std::vector<std::string>& scan_claim_names() {
  static const std::vector<std::string> names{
      "packing-check", "duality",        "neighborhood-graph", "bound",   "tightness",
      "tightness-gr",  "tightness-hr",   "constructions",      "solvers", "matching",
      "all"};
  return names;
}

int cmd_scan(const ScanOptions& opt, std::ostream& out, std::ostream&) {
  std::string claim = opt.claim;
  std::transform(claim.begin(), claim.end(), claim.begin(), [](unsigned char ch) { return std::tolower(ch); });
  const auto& names = scan_claim_names();
  if (std::find(names.begin(), names.end(), claim) == names.end()) {
    throw InvalidInput("unknown claim '" + opt.claim + "'");
  }
  auto range_or = [](const std::optional<std::string>& text, Range fallback) {
    return text ? parse_range(*text) : fallback;
  };
  auto runs = [&](const char* name) { return claim == name || claim == "all"; };

  Tally tally;
  if (runs("packing-check")) scan_packing_check(tally, range_or(opt.n, {1, 6}));
  if (runs("duality")) {
    Range random = range_or(opt.random_n, {1, 0});
    scan_duality(tally, range_or(opt.n, {1, 6}), random, opt.samples.value_or(200), opt.seed);
  }
  if (runs("neighborhood-graph")) scan_neighborhood_graph(tally, range_or(opt.n, {1, 6}));
  if (runs("bound")) {
    std::vector<std::size_t> t = opt.t.empty() ? std::vector<std::size_t>{2, 3, 4} : opt.t;
    scan_bounds(tally, t, range_or(opt.r, {1, 2}), opt.samples.value_or(500), opt.seed);
  }
  if (runs("tightness")) scan_tightness(tally, range_or(opt.r, {1, 5}), range_or(opt.r, {3, 7}));
  if (claim == "tightness-gr") scan_tightness(tally, range_or(opt.r, {1, 5}), {1, 0});
  if (claim == "tightness-hr") scan_tightness(tally, {1, 0}, range_or(opt.r, {3, 7}));
  if (runs("constructions")) {
    ConstructionScale scale;
    scale.seed = opt.seed;
    if (opt.n) scale.exhaustive_n = parse_range(*opt.n).hi;
    if (opt.samples) {
      scale.random_graphs = scale.hitting_sets = scale.rdm_instances = *opt.samples;
      scale.split_graphs = 2 * *opt.samples;
    }
    scan_constructions(tally, scale, opt.constructions);
  }
  if (runs("solvers")) {
    SolverScale scale;
    scale.seed = opt.seed;
    if (opt.samples) scale.samples = *opt.samples;
    scan_solvers(tally, scale);
  }
  if (runs("matching")) {
    scan_matching(tally, range_or(opt.n, {2, 6}).hi, 8, opt.samples.value_or(500), opt.seed);
  }

  bool ok = true;
  for (const auto& report : tally.reports()) {
    bool shown = claim.rfind("tightness-", 0) != 0 || report.claim == claim ||
                 report.claim == kPackingShapeClaim;
    if (!shown) continue;
    ok = ok && report.passed();
    out << report.to_json().dump() << '\n';
  }
  return ok ? kExitOk : kExitRejected;
}

}  // namespace openpack::cli
