#include "scan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "io.hpp"
#include "openpack/certify.hpp"
#include "openpack/errors.hpp"
#include "openpack/generators.hpp"
#include "openpack/matching.hpp"
#include "openpack/recognize.hpp"
#include "openpack/reductions.hpp"
#include "openpack/solvers.hpp"

namespace openpack::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Graph whose edges are the set bits of `code` over pairs (i, j), i < j, in
// lexicographic order.
Graph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  unsigned slot = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++slot) {
      if (code >> slot & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

template <typename Visit>
void for_each_graph(std::size_t n, Visit visit) {
  const std::uint64_t slots = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots); ++code) {
    visit(graph_from_code(n, code), code);
  }
}

VertexSet subset(std::uint64_t mask) {
  VertexSet out;
  for (Vertex v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.order()}, {"edges", edges}};
}

json multigraph_json(const Multigraph& mg) {
  json edges = json::array();
  for (const auto& e : mg.edges()) edges.push_back({e.u, e.v, e.label});
  return json{{"n", mg.order()}, {"edges", edges}};
}

// Random connected graph sampler with varied order and density.
Graph random_graph(SplitMix64& rng, std::size_t lo, std::size_t hi) {
  std::size_t n = rng.between(lo, hi);
  double p = 0.15 + 0.8 * rng.unit();
  return gen_random_graph(n, p, rng.next());
}

}  // namespace

json ClaimReport::to_json() const {
  json out{{"claim", claim},
           {"status", passed() ? "pass" : "fail"},
           {"checked", checked},
           {"violations", violations},
           {"seconds", std::round(seconds * 1000.0) / 1000.0}};
  if (!notes.empty()) out["notes"] = notes;
  if (!counterexample.is_null()) out["counterexample"] = counterexample;
  return out;
}

ClaimReport& Tally::slot(const std::string& claim) {
  for (auto& r : reports_) {
    if (r.claim == claim) return r;
  }
  ClaimReport fresh;
  fresh.claim = claim;
  reports_.push_back(std::move(fresh));
  return reports_.back();
}

void Tally::record(const std::string& claim, bool ok, const std::function<json()>& witness) {
  ClaimReport& r = slot(claim);
  ++r.checked;
  if (ok) return;
  if (r.violations++ == 0) r.counterexample = witness ? witness() : json("no detail");
}

void Tally::note(const std::string& claim, const std::string& key, json value) {
  slot(claim).notes[key] = std::move(value);
}

void Tally::add_seconds(const std::string& claim, double seconds) { slot(claim).seconds += seconds; }

const ClaimReport* Tally::find(const std::string& claim) const {
  for (const auto& r : reports_) {
    if (r.claim == claim) return &r;
  }
  return nullptr;
}

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      std::size_t v = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    std::size_t lo = std::stoul(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    std::size_t hi = std::stoul(b, &used);
    if (used != b.size() || hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InvalidInput("bad range '" + text + "', expected a or a..b");
  }
}

void check_packing_shape(Tally& tally, const Graph& g, const VertexSet& S, const std::string& where) {
  Graph sub = induced_subgraph(g, S).graph;
  bool ok = true;
  for (Vertex v = 0; v < sub.order(); ++v) ok = ok && sub.degree(v) <= 1;
  tally.record(kPackingShapeClaim, ok, [&] {
    return json{{"suite", where}, {"graph", graph_json(g)}, {"packing", S}};
  });
}

// --- packing check, duality, neighbourhood graph ---------------------------

void scan_packing_check(Tally& tally, Range n) {
  const char* claim = "packing-check";
  auto start = Clock::now();
  std::size_t graphs = 0;
  for (std::size_t order = n.lo; order <= n.hi; ++order) {
    if (order > 7) throw InvalidInput("exhaustive packing check is limited to n <= 7");
    for_each_graph(order, [&](const Graph& g, std::uint64_t code) {
      ++graphs;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << order); ++m) {
        VertexSet S = subset(m);
        OpenPackingCounters counters;
        bool fast = is_open_packing_fast(g, S, &counters).valid;
        bool naive = is_open_packing_naive(g, S).valid;
        bool linear = counters.vertex_visits <= order + 2 * g.size() &&
                      counters.edge_visits <= 2 * g.size();
        tally.record(claim, fast == naive && linear, [&] {
          return json{{"n", order}, {"code", code}, {"set", S}, {"fast", fast}, {"naive", naive},
                      {"vertex_visits", counters.vertex_visits},
                      {"edge_visits", counters.edge_visits}};
        });
      }
    });
  }
  tally.note(claim, "graphs", graphs);
  tally.add_seconds(claim, seconds_since(start));
}

void scan_duality(Tally& tally, Range exhaustive, Range random, std::size_t samples,
                  std::uint64_t seed) {
  const char* claim = "duality";
  auto start = Clock::now();
  auto check = [&](const Graph& g) {
    auto S = max_open_packing_bf(g);
    auto D = min_total_dominating_bf(g);
    check_packing_shape(tally, g, S, claim);
    tally.record(claim, S.size() <= D.size(), [&] {
      return json{{"graph", graph_json(g)}, {"packing", S}, {"dominating", D}};
    });
  };
  for (std::size_t n = exhaustive.lo; n <= exhaustive.hi && n > 0; ++n) {
    for_each_graph(n, [&](const Graph& g, std::uint64_t) {
      if (!find_isolated_vertex(g)) check(g);
    });
  }
  SplitMix64 rng(seed);
  for (std::size_t n = random.lo; n <= random.hi && samples > 0; ++n) {
    for (std::size_t done = 0; done < samples;) {
      Graph g = gen_random_graph(n, 0.2 + 0.6 * rng.unit(), rng.next());
      if (find_isolated_vertex(g)) continue;
      check(g);
      ++done;
    }
  }
  tally.add_seconds(claim, seconds_since(start));
}

void scan_neighborhood_graph(Tally& tally, Range n) {
  const char* claim = "neighborhood-graph";
  auto start = Clock::now();
  for (std::size_t order = n.lo; order <= n.hi; ++order) {
    if (order > 7) throw InvalidInput("exhaustive neighbourhood-graph check is limited to n <= 7");
    for_each_graph(order, [&](const Graph& g, std::uint64_t code) {
      Graph ng = neighborhood_graph(g);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << order); ++m) {
        VertexSet S = subset(m);
        bool packing = is_open_packing_fast(g, S).valid;
        bool independent = is_independent_set(ng, S).valid;
        tally.record(claim, packing == independent, [&] {
          return json{{"n", order}, {"code", code}, {"set", S}, {"open_packing", packing},
                      {"independent_in_neighborhood_graph", independent}};
        });
      }
    });
  }
  tally.add_seconds(claim, seconds_since(start));
}

// --- bounds and tightness -------------------------------------------------

void scan_bounds(Tally& tally, const std::vector<std::size_t>& t_values, Range r_range,
                 std::size_t samples, std::uint64_t seed) {
  for (std::size_t t : t_values) {
    for (std::size_t r = r_range.lo; r <= r_range.hi; ++r) {
      auto start = Clock::now();
      const BoundEntry op = bound_table(Problem::open_packing, t, r);
      const BoundEntry td = bound_table(Problem::total_domination, t, r);
      std::string suffix = "-t" + std::to_string(t) + "-r" + std::to_string(r);
      std::string op_claim = "bound-op" + suffix, td_claim = "bound-tds" + suffix;
      SplitMix64 rng(seed + 1000 * t + r);
      std::size_t found = 0, attempts = 0;
      const std::size_t max_attempts = 200 * samples + 100000;
      std::size_t op_max = 0, td_max = 0;
      while (found < samples && attempts < max_attempts) {
        ++attempts;
        Graph g = random_graph(rng, 2, 11);
        if (!is_connected(g) || !is_pt_union_sk1_free(g, t, r).free) continue;
        ++found;
        auto S = max_open_packing_bf(g);
        auto D = min_total_dominating_bf(g);
        check_packing_shape(tally, g, S, op_claim);
        op_max = std::max(op_max, S.size());
        td_max = std::max(td_max, D.size());
        tally.record(op_claim, S.size() <= op.value, [&] {
          return json{{"graph", graph_json(g)}, {"packing", S}, {"bound", op.value}};
        });
        tally.record(td_claim, D.size() <= td.value, [&] {
          return json{{"graph", graph_json(g)}, {"dominating", D}, {"bound", td.value}};
        });
      }
      if (found < samples) {
        for (const auto& claim : {op_claim, td_claim}) {
          tally.record(claim, false, [&] {
            return json{{"error", "sampler found only " + std::to_string(found) + " class members"}};
          });
        }
      }
      tally.note(op_claim, "bound", op.value);
      tally.note(op_claim, "max_seen", op_max);
      tally.note(td_claim, "bound", td.value);
      tally.note(td_claim, "max_seen", td_max);
      tally.note(op_claim, "attempts", attempts);
      double elapsed = seconds_since(start);
      tally.add_seconds(op_claim, elapsed / 2);
      tally.add_seconds(td_claim, elapsed / 2);
    }
  }
}

void scan_tightness(Tally& tally, Range gr_r, Range hr_r) {
  auto start = Clock::now();
  OracleLimits limits{40};
  json gr_values = json::array();
  for (std::size_t r = std::max<std::size_t>(gr_r.lo, 1); r <= gr_r.hi; ++r) {
    Graph g = gen_Gr(r);
    auto S = max_open_packing_bf(g, limits);
    auto D = min_total_dominating_bf(g, limits);
    auto bounded = solve_bounded(g, Problem::open_packing, bound_table(Problem::open_packing, 4, r).value);
    check_packing_shape(tally, g, S, "tightness-gr");
    bool in_class = is_pt_union_sk1_free(g, 4, r).free;
    gr_values.push_back({{"r", r}, {"rho", S.size()}, {"gamma_t", D.size()}});
    tally.record("tightness-gr",
                 in_class && S.size() == 2 * r + 1 && D.size() == 2 * r + 1 &&
                     bounded.optimum() == 2 * r + 1,
                 [&] {
                   return json{{"r", r}, {"rho", S.size()}, {"gamma_t", D.size()},
                               {"bounded", bounded.optimum()}, {"in_class", in_class}};
                 });
  }
  tally.note("tightness-gr", "values", gr_values);

  json hr_values = json::array();
  for (std::size_t r = std::max<std::size_t>(hr_r.lo, 3); r <= hr_r.hi; ++r) {
    Graph h = gen_Hr(r);
    auto S = max_open_packing_bf(h, limits);
    check_packing_shape(tally, h, S, "tightness-hr");
    bool in_class = is_pt_union_sk1_free(h, 1, r - 1).free;
    hr_values.push_back({{"r", r}, {"rho", S.size()}});
    tally.record("tightness-hr", in_class && S.size() == 2 * (r - 2), [&] {
      return json{{"r", r}, {"rho", S.size()}, {"in_class", in_class}};
    });
  }
  tally.note("tightness-hr", "values", hr_values);

  auto small = [&](const std::string& name, const Graph& g, std::size_t expected) {
    auto D = min_total_dominating_bf(g);
    tally.record("tightness-small", D.size() == expected, [&] {
      return json{{"graph", name}, {"gamma_t", D.size()}, {"expected", expected}};
    });
  };
  small("C_6", gen_cycle(6), 4);
  small("C_5", gen_cycle(5), 3);
  for (std::size_t n = 2; n <= 8; ++n) small("K_" + std::to_string(n), gen_complete(n), 2);

  // Clique blowups keep class and optimum.
  SplitMix64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> c6(6), c5(5);
    for (auto& s : c6) s = rng.between(1, 3);
    for (auto& s : c5) s = rng.between(1, 3);
    Graph b6 = blowup(gen_cycle(6), c6);
    Graph b5 = blowup(gen_cycle(5), c5);
    bool ok6 = is_pt_union_sk1_free(b6, 4, 1).free && min_total_dominating_bf(b6).size() == 4;
    bool ok5 = is_pt_union_sk1_free(b5, 3, 1).free && min_total_dominating_bf(b5).size() == 3;
    tally.record("tightness-blowup", ok6, [&] { return json{{"base", "C_6"}, {"sizes", c6}}; });
    tally.record("tightness-blowup", ok5, [&] { return json{{"base", "C_5"}, {"sizes", c5}}; });
  }
  for (std::size_t r = 1; r <= 3; ++r) {
    std::vector<std::size_t> sizes(3 * r + 2, 1);
    sizes[3 * r] = rng.between(2, 3);
    Graph g = blowup(gen_Gr(r), sizes);
    auto S = max_open_packing_bf(g, limits);
    tally.record("tightness-blowup", is_pt_union_sk1_free(g, 4, r).free && S.size() == 2 * r + 1,
                 [&] { return json{{"base", "G_" + std::to_string(r)}, {"rho", S.size()}}; });
  }
  tally.add_seconds("tightness-gr", seconds_since(start));
}

// --- constructions --------------------------------------------------------

namespace {

void check_construction12(Tally& tally, const Graph& g, bool want1, bool want2) {
  OracleLimits limits{kOracleHardLimit};
  const std::size_t alpha = max_independent_set_bf(g).size();
  if (want1) {
    auto inst = construct1(g);
    const Graph& gp = inst.output_graph();
    auto all = all_maximum_open_packings_bf(gp, limits);
    std::size_t rho = all.front().size();
    tally.record("construction1", rho == alpha, [&] {
      return json{{"source", graph_json(g)}, {"alpha", alpha}, {"rho", rho}};
    });
    // Independent sets of g are exactly the open packings of G' inside V(g).
    if (g.order() <= 6) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
        VertexSet S = subset(m);
        bool same = is_independent_set(g, S).valid == is_open_packing_fast(gp, S).valid;
        tally.record("construction1", same, [&] {
          return json{{"source", graph_json(g)}, {"set", S}};
        });
      }
    }
    tally.record("structure-c1", is_K1r_free(gp, 3).free, [&] { return graph_json(g); });
    for (const auto& S : all) {
      check_packing_shape(tally, gp, S, "construction1");
      bool ok = false;
      json detail;
      try {
        auto trace = normalize_op_c1(inst, S);
        ok = trace.result.size() == S.size() && trace.steps.size() <= S.size() &&
             is_independent_set(g, trace.result).valid;
        for (const auto& step : trace.steps) ok = ok && is_open_packing_fast(gp, step).valid;
        detail = trace.result;
      } catch (const std::exception& e) {
        detail = e.what();
      }
      tally.record("normalizer", ok, [&] {
        return json{{"source", graph_json(g)}, {"packing", S}, {"result", detail}};
      });
    }
  }
  if (want2) {
    auto inst = construct2(g);
    const Graph& gp = inst.output_graph();
    auto S = max_open_packing_bf(gp, limits);
    check_packing_shape(tally, gp, S, "construction2");
    tally.record("construction2", S.size() == alpha + 1, [&] {
      return json{{"source", graph_json(g)}, {"alpha", alpha}, {"rho", S.size()}};
    });
    bool split = inst.partition && is_valid_split_partition(gp, *inst.partition) &&
                 split_partition(gp).has_value();
    tally.record("structure-c2", split && is_K1r_free(gp, 4).free, [&] { return graph_json(g); });
  }
}

}  // namespace

void scan_constructions(Tally& tally, const ConstructionScale& scale, const std::vector<int>& which) {
  auto wants = [&](int c) { return which.empty() || std::find(which.begin(), which.end(), c) != which.end(); };
  SplitMix64 rng(scale.seed);

  if (wants(1) || wants(2)) {
    auto start = Clock::now();
    for (std::size_t n = 1; n <= scale.exhaustive_n; ++n) {
      for_each_graph(n, [&](const Graph& g, std::uint64_t) { check_construction12(tally, g, wants(1), wants(2)); });
    }
    std::size_t lo = scale.exhaustive_n + 1;
    for (std::size_t i = 0; i < scale.random_graphs && lo <= scale.random_max_n; ++i) {
      Graph g = random_graph(rng, lo, scale.random_max_n);
      check_construction12(tally, g, wants(1), wants(2));
    }
    tally.add_seconds(wants(1) ? "construction1" : "construction2", seconds_since(start));
  }

  if (wants(3)) {
    auto start = Clock::now();
    for (std::size_t i = 0; i < scale.hitting_sets; ++i) {
      std::size_t universe = rng.between(3, 6);
      std::size_t r = rng.between(2, 3);
      std::size_t cap = r == 2 ? universe * (universe - 1) / 2 : universe * (universe - 1) * (universe - 2) / 6;
      std::size_t sets = rng.between(1, std::min<std::size_t>(5, cap));
      auto hs = gen_random_hitting_set(universe, sets, r, rng.next());
      auto inst = construct3(hs);
      const Graph& gp = inst.output_graph();
      std::size_t k = min_hitting_set_bf(hs).size();
      auto D = min_total_dominating_bf(gp);
      bool mapped = map_tds_c3(inst, D).size() <= k && map_hs_c3(inst, min_hitting_set_bf(hs)).size() == k + 1;
      tally.record("construction3", D.size() == k + 1 && mapped, [&] {
        return json{{"instance", hitting_set_json(hs)}, {"hitting_set", k}, {"gamma_t", D.size()}};
      });
      tally.record("structure-c3", is_Ir_split(gp, r).has_value(), [&] { return hitting_set_json(hs); });
    }
    tally.add_seconds("construction3", seconds_since(start));
  }

  if (wants(4)) {
    auto start = Clock::now();
    std::size_t yes = 0;
    for (std::size_t i = 0; i < scale.rdm_instances; ++i) {
      std::size_t q = rng.between(1, 3);
      std::size_t space = q * q * q;
      std::size_t count = rng.between(1, std::min<std::size_t>(space, 12));
      auto rdm = gen_random_rdm(q, 3, count, rng.next());
      auto inst = construct4(rdm);
      const Graph& gp = inst.output_graph();
      bool is_yes = max_rdm_bf(rdm).size() == q;
      yes += is_yes;
      auto S = max_open_packing_bf(gp);
      check_packing_shape(tally, gp, S, "construction4");
      bool mapped = true;
      if (S.size() >= q) {
        VertexSet first(S.begin(), S.begin() + static_cast<std::ptrdiff_t>(q));
        mapped = is_r_dimensional_matching(rdm, map_op_c4(inst, first)).valid;
      }
      tally.record("construction4", is_yes == (S.size() >= q) && mapped, [&] {
        return json{{"instance", rdm_json(rdm)}, {"yes", is_yes}, {"rho", S.size()}};
      });
      tally.record("structure-c4", is_Ir_split(gp, 3).has_value(), [&] { return rdm_json(rdm); });
    }
    tally.note("construction4", "yes_instances", yes);
    tally.add_seconds("construction4", seconds_since(start));
  }

  if (wants(5)) {
    auto start = Clock::now();
    for (std::size_t i = 0; i < scale.split_graphs; ++i) {
      std::size_t c = rng.between(1, 6);
      std::size_t ind = rng.between(0, 6);
      auto [g, part] = gen_random_split(c, ind, 1, std::min<std::size_t>(2, c), rng.next());
      auto inst = construct5(g, part);
      auto F = max_matching_poly(inst.output_multigraph());
      auto best = max_open_packing_within_bf(g, part.independent);
      auto S = map_c5_matching_to_packing(inst, F);
      bool round_trip = map_c5_packing_to_matching(inst, S) == F;
      tally.record("construction5", F.size() == best.size() && round_trip, [&] {
        return json{{"graph", graph_json(g)}, {"matching", F.size()}, {"packing", best.size()}};
      });
    }
    tally.add_seconds("construction5", seconds_since(start));
  }
}

// --- solvers --------------------------------------------------------------

namespace {

struct SplitInstance {
  Graph g;
  SplitPartition part;
};

// Connected split graphs from gen_random_split accepted by `keep`.
template <typename Keep>
std::vector<SplitInstance> split_instances(SplitMix64& rng, std::size_t wanted, std::size_t max_c,
                                           std::size_t max_i, std::size_t min_order,
                                           std::size_t max_deg, Keep keep) {
  std::vector<SplitInstance> out;
  for (std::size_t attempt = 0; out.size() < wanted && attempt < 1000 * wanted; ++attempt) {
    std::size_t c = rng.between(1, max_c);
    std::size_t i = rng.between(0, max_i);
    if (c + i < min_order || c + i > std::max(min_order, max_c + max_i)) continue;
    std::size_t hi = std::min(max_deg, c);
    std::size_t lo = rng.between(1, hi);
    auto [g, part] = gen_random_split(c, i, lo, hi, rng.next());
    if (!is_connected(g) || !keep(g, part)) continue;
    out.push_back({std::move(g), std::move(part)});
  }
  return out;
}

template <typename Solve>
double time_ms(Solve solve) {
  auto start = Clock::now();
  solve();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

void scan_solvers(Tally& tally, const SolverScale& scale) {
  SplitMix64 rng(scale.seed);
  double worst_ms = 0;
  std::size_t timed = 0, largest = 0;

  auto timing = [&](const std::string& solver, const Graph& g, double ms) {
    worst_ms = std::max(worst_ms, ms);
    largest = std::max(largest, g.order());
    ++timed;
    tally.record("solver-timing", ms < scale.time_limit_ms, [&] {
      return json{{"solver", solver}, {"order", g.order()}, {"ms", ms}};
    });
  };

  auto k13 = [](const Graph& g, const SplitPartition&) { return is_K1r_free(g, 3).free; };
  auto any = [](const Graph& g, const SplitPartition&) { return g.order() >= 2; };
  const std::size_t half = scale.timing_max_order / 2;

  struct Spec {
    std::string claim;
    std::size_t max_deg;
    bool claw_free;
  };
  for (const Spec& spec : {Spec{"solver-k13free-split", 6, true}, Spec{"solver-i1-split", 1, false},
                           Spec{"solver-split-deg12", 2, false}}) {
    auto start = Clock::now();
    auto run = [&](const SplitInstance& inst, bool check_oracle) {
      SolveReport report;
      double ms = time_ms([&] {
        if (spec.claim == "solver-k13free-split") report = solve_op_k13free_split(inst.g, inst.part);
        else if (spec.claim == "solver-i1-split") report = solve_tds_i1_split(inst.g, inst.part);
        else report = solve_op_split_deg12(inst.g, inst.part);
      });
      timing(spec.claim, inst.g, ms);
      if (!check_oracle) return;
      bool op = spec.claim != "solver-i1-split";
      std::size_t exact = op ? max_open_packing_bf(inst.g).size() : min_total_dominating_bf(inst.g).size();
      if (op) check_packing_shape(tally, inst.g, report.answer, spec.claim);
      tally.record(spec.claim, report.optimum() == exact, [&] {
        return json{{"graph", graph_json(inst.g)}, {"partition", {inst.part.clique, inst.part.independent}},
                    {"solver", report.optimum()}, {"oracle", exact}, {"method", report.method}};
      });
    };
    auto keep = [&](const Graph& g, const SplitPartition& p) {
      return spec.claw_free ? k13(g, p) : any(g, p);
    };
    for (const auto& inst : split_instances(rng, scale.samples, 7, 7, 2, spec.max_deg, keep)) {
      run(inst, true);
    }
    // Larger instances, up to timing_max_order vertices, timed only. Claw-free
    // split graphs give each clique vertex at most two independent neighbours,
    // so those use pendant-heavy independent sides.
    std::size_t deg = spec.claw_free ? 1 : spec.max_deg;
    auto large = split_instances(rng, scale.timing_samples, half, half, half, deg, keep);
    for (const auto& inst : large) run(inst, false);
    tally.note(spec.claim, "timed_large_instances", large.size());
    tally.add_seconds(spec.claim, seconds_since(start));
  }
  tally.note("solver-timing", "instances", timed);
  tally.note("solver-timing", "largest_order", largest);
  tally.note("solver-timing", "worst_ms", worst_ms);
  tally.note("solver-timing", "limit_ms", scale.time_limit_ms);
}

// --- matching -------------------------------------------------------------

void scan_matching(Tally& tally, std::size_t max_vertices, std::size_t max_edges, std::size_t samples,
                   std::uint64_t seed) {
  const char* claim = "matching";
  auto start = Clock::now();
  auto check = [&](const Multigraph& mg) {
    auto F = max_matching_poly(mg);
    auto exact = max_matching_bf(mg);
    tally.record(claim, is_matching(mg, F).valid && F.size() == exact.size(), [&] {
      return json{{"multigraph", multigraph_json(mg)}, {"poly", F}, {"oracle", exact}};
    });
  };

  std::size_t exhaustive = 0;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    std::vector<Edge> pairs;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    // Every multiset of at most max_edges pairs, as a nondecreasing index list.
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
      std::vector<MultiEdge> edges;
      for (std::uint32_t k = 0; k < chosen.size(); ++k) {
        edges.push_back({pairs[chosen[k]].first, pairs[chosen[k]].second, k});
      }
      check(Multigraph(n, std::move(edges)));
      ++exhaustive;
      if (chosen.size() == max_edges) return;
      for (std::size_t p = from; p < pairs.size(); ++p) {
        chosen.push_back(p);
        extend(p);
        chosen.pop_back();
      }
    };
    extend(0);
  }
  tally.note(claim, "exhaustive_multigraphs", exhaustive);

  // Odd cycles, the Petersen graph and a blossom with a stem.
  auto as_multi = [](const Graph& g) {
    std::vector<MultiEdge> edges;
    std::uint32_t label = 0;
    for (auto [u, v] : g.edges()) edges.push_back({u, v, label++});
    return Multigraph(g.order(), std::move(edges));
  };
  for (std::size_t n = 3; n <= 13; n += 2) check(as_multi(gen_cycle(n)));
  std::vector<Edge> petersen;
  for (Vertex i = 0; i < 5; ++i) {
    petersen.emplace_back(i, (i + 1) % 5);
    petersen.emplace_back(i, i + 5);
    petersen.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  check(as_multi(Graph(10, petersen)));
  check(as_multi(Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {4, 6}, {6, 7}})));

  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    std::size_t n = rng.between(2, 12);
    std::size_t m = rng.between(0, 20);
    std::vector<MultiEdge> edges;
    for (std::uint32_t label = 0; label < m; ++label) {
      auto u = static_cast<Vertex>(rng.uniform(n));
      auto v = static_cast<Vertex>(rng.uniform(n - 1));
      if (v >= u) ++v;
      edges.push_back({u, v, label});
    }
    check(Multigraph(n, std::move(edges)));
  }
  tally.add_seconds(claim, seconds_since(start));
}

}  // namespace openpack::cli
