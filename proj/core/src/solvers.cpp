#include "openpack/solvers.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "openpack/certify.hpp"
#include "openpack/errors.hpp"
#include "openpack/reductions.hpp"

namespace openpack {
namespace {

std::string format_set(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

std::string pattern_name(std::size_t t, std::size_t r) {
  std::string name = "P_" + std::to_string(t);
  if (r > 0) name += " ∪ " + std::to_string(r) + "K_1";
  return name;
}

SolveReport single(Problem problem, VertexSet answer, std::string method, std::string evidence) {
  SolveReport report;
  report.problem = problem;
  std::sort(answer.begin(), answer.end());
  report.answer = std::move(answer);
  report.method = std::move(method);
  report.evidence = std::move(evidence);
  return report;
}

void ensure_valid(const Graph& g, Problem problem, const VertexSet& answer) {
  bool ok = problem == Problem::open_packing ? static_cast<bool>(is_open_packing_fast(g, answer))
                                             : static_cast<bool>(is_total_dominating(g, answer));
  if (!ok) throw std::logic_error("solver produced an invalid certificate");
}

void require_split(const Graph& g, const SplitPartition& part) {
  if (!is_valid_split_partition(g, part)) throw PreconditionFailed("not a valid split partition");
  if (!is_connected(g)) throw PreconditionFailed("graph is not connected");
}

// rho° of a complete graph: {v} for K_1, both vertices of K_2, any single
// vertex of a larger clique.
VertexSet complete_graph_packing(const VertexSet& clique) {
  if (clique.size() <= 2) return clique;
  return {clique.front()};
}

// Runs `solve` on every component and stitches the answers together.
SolveReport per_component(const Graph& g, Problem problem,
                          const std::function<ComponentSolve(const Graph&)>& solve) {
  SolveReport report;
  report.problem = problem;
  std::vector<std::string> methods;
  for (const auto& comp : components(g)) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    ComponentSolve part = solve(sub.graph);
    for (Vertex& v : part.answer) v = sub.origin[v];
    std::sort(part.answer.begin(), part.answer.end());
    part.vertices = sub.origin;
    report.answer.insert(report.answer.end(), part.answer.begin(), part.answer.end());
    if (std::find(methods.begin(), methods.end(), part.method) == methods.end()) {
      methods.push_back(part.method);
    }
    report.components.push_back(std::move(part));
  }
  std::sort(report.answer.begin(), report.answer.end());
  for (std::size_t i = 0; i < methods.size(); ++i) report.method += (i ? "+" : "") + methods[i];
  if (report.components.size() == 1) report.evidence = report.components.front().evidence;
  else report.evidence = std::to_string(report.components.size()) + " components";
  return report;
}

ComponentSolve bounded_component(const Graph& h, Problem problem, std::size_t bound) {
  ComponentSolve out;
  out.method = "bounded";
  out.evidence = "optimum at most " + std::to_string(bound);
  if (problem == Problem::total_domination) {
    auto best = min_tds_bounded(h, bound);
    if (!best) throw BoundExceeded("total domination number exceeds " + std::to_string(bound));
    out.answer = std::move(*best);
    return out;
  }
  auto packings = enumerate_open_packings_upto(h, bound);
  VertexSet best = packings.back();  // sorted by size, so the last is largest
  for (const auto& s : packings) {
    if (s.size() == best.size()) {
      best = s;  // lexicographically least among the largest
      break;
    }
  }
  if (best.size() == bound) {
    // A larger packing would contain a packing of exactly `bound` members.
    auto conflicts_with = [&](Vertex v, const VertexSet& s) {
      return std::find(s.begin(), s.end(), v) != s.end() ||
             std::any_of(s.begin(), s.end(),
                         [&](Vertex w) { return !common_neighbors(h, v, w).empty(); });
    };
    for (const auto& s : packings) {
      if (s.size() != bound) continue;
      for (Vertex v = 0; v < h.order(); ++v) {
        if (!conflicts_with(v, s)) {
          throw BoundExceeded("open packing number exceeds " + std::to_string(bound));
        }
      }
    }
  }
  out.answer = std::move(best);
  return out;
}

// Tightest (P_t ∪ rK_1)-free class with r <= cap containing h, if any.
std::optional<BoundEntry> tightest_class(const Graph& h, Problem problem, std::size_t cap) {
  std::optional<BoundEntry> best;
  for (std::size_t t = 1; t <= 4; ++t) {
    for (std::size_t r = 0; r <= cap; ++r) {
      BoundEntry entry;
      try {
        entry = bound_table(problem, t, r);
      } catch (const InvalidInput&) {
        continue;
      }
      if (t + r > kMaxPatternOrder) break;
      if (!is_pt_union_sk1_free(h, t, r)) continue;
      if (!best || entry.value < best->value) best = entry;
      break;  // membership is monotone in r
    }
  }
  return best;
}

ComponentSolve auto_component(const Graph& h, Problem problem, const AutoSolveOptions& options) {
  auto adopt = [](const SolveReport& r) {
    return ComponentSolve{{}, r.answer, r.method, r.evidence};
  };

  if (problem == Problem::open_packing && h.order() == 1) {
    return {{}, {0}, "single-vertex", "K_1"};
  }
  if (problem == Problem::total_domination) {
    if (auto part = is_Ir_split(h, 1)) return adopt(solve_tds_i1_split(h, *part));
  } else if (auto part = split_partition(h)) {
    if (is_K1r_free(h, 3)) return adopt(solve_op_k13free_split(h, *part));
    auto deg12 = find_split_partition_if(h, [&](const SplitPartition& p) {
      return std::all_of(p.independent.begin(), p.independent.end(), [&](Vertex v) {
        return h.degree(v) == 1 || h.degree(v) == 2;
      });
    });
    if (deg12) return adopt(solve_op_split_deg12(h, *deg12));
  }

  if (auto entry = tightest_class(h, problem, options.max_class_r)) {
    ComponentSolve out = bounded_component(h, problem, entry->value);
    out.evidence = "(" + pattern_name(entry->t, entry->r) + ")-free, optimum at most " +
                   std::to_string(entry->value);
    out.method = "bounded";
    return out;
  }

  if (h.order() <= options.oracle.max_order) {
    VertexSet answer = problem == Problem::open_packing
                           ? max_open_packing_bf(h, options.oracle)
                           : min_total_dominating_bf(h, options.oracle);
    return {{}, std::move(answer), "oracle", "exhaustive search"};
  }
  throw SizeGuardExceeded("no polynomial method applies to a component of order " +
                          std::to_string(h.order()) + " and the oracle guard is " +
                          std::to_string(options.oracle.max_order));
}

}  // namespace

std::string problem_tag(Problem p) {
  return p == Problem::open_packing ? "op" : "tds";
}

std::optional<Problem> parse_problem(const std::string& text) {
  if (text == "op" || text == "open-packing") return Problem::open_packing;
  if (text == "tds" || text == "td" || text == "total-domination") return Problem::total_domination;
  return std::nullopt;
}

BoundEntry bound_table_independent(Problem problem, std::size_t s) {
  if (s < 2) throw InvalidInput("sK_1-free bound needs s >= 2");
  BoundEntry e{problem, 0, s, 2, Tightness::tight};
  if (s == 2) return e;  // complete graphs
  if (problem == Problem::open_packing) {
    e.value = 2 * (s - 2);
  } else {
    e.value = 2 * s - 3;
    e.tightness = Tightness::near_optimal;
  }
  return e;
}

BoundEntry bound_table(Problem problem, std::size_t t, std::size_t r) {
  const bool op = problem == Problem::open_packing;
  BoundEntry e{problem, t, r, 2, Tightness::tight};
  switch (t) {
    case 1: {
      BoundEntry inner = bound_table_independent(problem, r + 1);
      e.value = inner.value;
      e.tightness = inner.tightness;
      return e;
    }
    case 2:
      if (r == 0) throw InvalidInput("connected K_2-free graphs are trivial; no bound");
      if (r == 1) return e;
      if (op) {
        e.value = std::max(r + 1, 2 * (r - 1));
        e.tightness = r >= 3 ? Tightness::tight : Tightness::near_optimal;
      } else {
        e.value = 2 * r;
        e.tightness = Tightness::near_optimal;
      }
      return e;
    case 3:
      if (r == 0) return e;
      e.value = op ? 2 * r : 2 * r + 1;
      if (!op && r > 1) e.tightness = Tightness::near_optimal;
      return e;
    case 4:
      if (r == 0) return e;
      e.value = op ? 2 * r + 1 : 2 * r + 2;
      if (!op && r > 1) e.tightness = Tightness::near_optimal;
      return e;
    default:
      throw InvalidInput("path order t must be in 1..4");
  }
}

SolveReport solve_bounded(const Graph& g, Problem problem, std::size_t bound) {
  if (problem == Problem::total_domination) {
    if (auto v = find_isolated_vertex(g)) {
      throw UndefinedProblem("vertex " + std::to_string(*v) + " is isolated");
    }
  }
  SolveReport report = per_component(
      g, problem, [&](const Graph& h) { return bounded_component(h, problem, bound); });
  ensure_valid(g, problem, report.answer);
  return report;
}

SolveReport solve_op_k13free_split(const Graph& g, const SplitPartition& part) {
  require_split(g, part);
  if (auto claw = is_K1r_free(g, 3); !claw) {
    throw PreconditionFailed("graph contains an induced claw centred at " +
                             std::to_string(claw.witness->embedding.front()));
  }
  const auto& C = part.clique;
  const auto& I = part.independent;
  const std::string sides = "C=" + format_set(C) + " I=" + format_set(I);

  VertexSet answer;
  std::string why;
  if (I.empty() || C.empty()) {
    answer = complete_graph_packing(I.empty() ? C : I);
    why = "complete graph";
  } else {
    std::vector<bool> independent(g.order(), false);
    for (Vertex v : I) independent[v] = true;
    bool crowded = std::any_of(C.begin(), C.end(), [&](Vertex u) {
      auto nbrs = g.neighbors(u);
      return std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return independent[w]; }) >= 2;
    });
    if (!crowded) {
      if (I.size() == 1 && g.degree(I[0]) == 1) {
        answer = {I[0], g.neighbors(I[0])[0]};
        why = "single pendant independent vertex";
      } else {
        answer = I;
        why = "independent side has pairwise disjoint neighbourhoods";
      }
    } else {
      for (std::size_t i = 0; i < I.size() && answer.empty(); ++i) {
        for (std::size_t j = i + 1; j < I.size(); ++j) {
          if (common_neighbors(g, I[i], I[j]).empty()) {
            answer = {I[i], I[j]};
            why = "independent pair with disjoint neighbourhoods";
            break;
          }
        }
      }
      if (answer.empty()) {
        auto pendant = std::find_if(I.begin(), I.end(), [&](Vertex v) { return g.degree(v) == 1; });
        if (pendant != I.end()) {
          answer = {*pendant, g.neighbors(*pendant)[0]};
          why = "closed neighbourhood of a pendant";
        } else {
          answer = {0};
          why = "every pair of vertices shares a neighbour";
        }
      }
    }
  }
  SolveReport report = single(Problem::open_packing, answer, "k13free-split", sides + "; " + why);
  ensure_valid(g, Problem::open_packing, report.answer);
  return report;
}

SolveReport solve_tds_i1_split(const Graph& g, const SplitPartition& part) {
  require_split(g, part);
  if (g.order() < 2) throw PreconditionFailed("graph needs at least two vertices");
  for (Vertex v : part.independent) {
    if (g.degree(v) != 1) {
      throw PreconditionFailed("independent vertex " + std::to_string(v) + " is not a pendant");
    }
  }
  const std::string sides = "C=" + format_set(part.clique) + " I=" + format_set(part.independent);

  VertexSet hubs;
  for (Vertex v : part.independent) hubs.push_back(g.neighbors(v)[0]);
  std::sort(hubs.begin(), hubs.end());
  hubs.erase(std::unique(hubs.begin(), hubs.end()), hubs.end());

  VertexSet answer;
  std::string why;
  if (part.independent.empty()) {
    answer = {0, g.neighbors(0)[0]};
    why = "complete graph";
  } else if (hubs.size() == 1) {
    answer = {hubs[0], part.independent[0]};
    why = "all pendants share one neighbour";
  } else {
    answer = hubs;
    why = "neighbourhood of the pendants";
  }
  SolveReport report = single(Problem::total_domination, answer, "i1-split", sides + "; " + why);
  ensure_valid(g, Problem::total_domination, report.answer);
  return report;
}

SolveReport solve_op_split_deg12(const Graph& g, const SplitPartition& part) {
  require_split(g, part);
  const std::string sides = "C=" + format_set(part.clique) + " I=" + format_set(part.independent);
  VertexSet answer;
  std::string why;
  if (part.independent.empty()) {
    answer = complete_graph_packing(part.clique);
    why = "complete graph";
  } else {
    ReductionInstance inst = construct5(g, part);  // checks the degree condition
    auto F = max_matching_poly(inst.output_multigraph());
    why = "maximum matching of size " + std::to_string(F.size());
    if (F.size() >= 2) {
      answer = map_c5_matching_to_packing(inst, F);
    } else {
      std::optional<Vertex> pendant;
      for (Vertex v = 0; v < g.order() && !pendant; ++v) {
        if (g.degree(v) == 1) pendant = v;
      }
      if (pendant) {
        answer = {*pendant, g.neighbors(*pendant)[0]};
        why += "; closed neighbourhood of a pendant";
      } else {
        answer = {0};
        why += "; no pendant, every pair shares a neighbour";
      }
    }
  }
  SolveReport report =
      single(Problem::open_packing, answer, "split-deg12-matching", sides + "; " + why);
  ensure_valid(g, Problem::open_packing, report.answer);
  return report;
}

SolveReport auto_solve(const Graph& g, Problem problem, const AutoSolveOptions& options) {
  if (problem == Problem::total_domination) {
    if (auto v = find_isolated_vertex(g)) {
      throw UndefinedProblem("vertex " + std::to_string(*v) +
                             " is isolated; no total dominating set exists");
    }
  }
  SolveReport report = per_component(
      g, problem, [&](const Graph& h) { return auto_component(h, problem, options); });
  if (report.components.empty()) report.method = "empty";
  ensure_valid(g, problem, report.answer);
  return report;
}

}  // namespace openpack
