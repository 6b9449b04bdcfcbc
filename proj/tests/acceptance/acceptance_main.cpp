// Runs every verification suite at full scale and prints one PASS/FAIL line
// per acceptance criterion. Exits 1 when any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "scan.hpp"

using namespace openpack::cli;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> claims;
  double time_limit_s = 0;  // 0 for no limit
};

std::vector<std::string> bound_claims() {
  std::vector<std::string> out;
  for (const char* p : {"op", "tds"}) {
    for (int t = 2; t <= 4; ++t) {
      for (int r = 1; r <= 2; ++r) {
        out.push_back(std::string("bound-") + p + "-t" + std::to_string(t) + "-r" + std::to_string(r));
      }
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "--verbose";
  Tally tally;
  auto timed = [](auto suite) {
    auto start = std::chrono::steady_clock::now();
    suite();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  const double packing_seconds = timed([&] { scan_packing_check(tally, {1, 6}); });
  scan_duality(tally, {1, 6}, {7, 10}, 200, 7);
  scan_neighborhood_graph(tally, {1, 6});
  scan_bounds(tally, {2, 3, 4}, {1, 2}, 500, 11);
  scan_tightness(tally, {1, 5}, {3, 7});
  scan_constructions(tally, ConstructionScale{});
  scan_solvers(tally, SolverScale{});
  scan_matching(tally, 6, 8, 500, 9);

  const std::vector<Criterion> criteria{
      {1, "fast and pairwise open packing tests agree, n <= 6", {"packing-check"}, 300},
      {2, "rho <= gamma_t on isolated-free graphs", {"duality"}},
      {3, "open packings are neighbourhood-graph independent sets", {"neighborhood-graph"}},
      {4, "bound table holds on 500 class members per cell", bound_claims()},
      {5, "tightness equalities and blowup closure",
       {"tightness-gr", "tightness-hr", "tightness-small", "tightness-blowup"}},
      {6, "construction guarantees",
       {"construction1", "construction2", "construction3", "construction4", "construction5"}},
      {7, "construction output classes", {"structure-c1", "structure-c2", "structure-c3", "structure-c4"}},
      {8, "split-graph solvers match the oracle within 10 ms",
       {"solver-k13free-split", "solver-i1-split", "solver-split-deg12", "solver-timing"}},
      {9, "polynomial matching matches exhaustive matching", {"matching"}},
      {10, "optimal open packings induce K_1s and K_2s", {kPackingShapeClaim}},
      {11, "normalizer keeps size and validity on every maximum packing", {"normalizer"}},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    bool ok = true;
    std::size_t checked = 0, violations = 0;
    std::string detail;
    for (const auto& name : c.claims) {
      const ClaimReport* r = tally.find(name);
      if (!r) {
        ok = false;
        detail += " missing:" + name;
        continue;
      }
      checked += r->checked;
      violations += r->violations;
      if (!r->passed()) {
        ok = false;
        detail += " failed:" + name + " " + r->counterexample.dump();
      }
    }
    if (c.time_limit_s > 0 && packing_seconds >= c.time_limit_s) {
      ok = false;
      detail += " too slow";
    }
    failures += !ok;
    std::printf("%s %2d %s (checked %zu, violations %zu)%s\n", ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), checked, violations, detail.c_str());
  }
  if (verbose) {
    for (const auto& r : tally.reports()) std::cout << r.to_json().dump() << '\n';
  }
  return failures == 0 ? 0 : 1;
}
