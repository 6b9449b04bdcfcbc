#pragma once

// Verification campaigns over generated instances. Each suite records one
// pass/fail tally per claim; the CLI prints them as JSON lines and the
// acceptance binary maps them onto its criteria.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "openpack/graph.hpp"
#include "openpack/oracle.hpp"

namespace openpack::cli {

using nlohmann::json;

struct ClaimReport {
  std::string claim;
  std::size_t checked = 0;
  std::size_t violations = 0;
  json counterexample;  // first violation, null when there is none
  json notes = json::object();
  double seconds = 0;

  bool passed() const noexcept { return checked > 0 && violations == 0; }
  json to_json() const;
};

class Tally {
 public:
  /// Counts one check of `claim`; `witness` is only evaluated for the first
  /// violation.
  void record(const std::string& claim, bool ok, const std::function<json()>& witness = {});
  void note(const std::string& claim, const std::string& key, json value);
  void add_seconds(const std::string& claim, double seconds);

  const ClaimReport* find(const std::string& claim) const;
  const std::vector<ClaimReport>& reports() const noexcept { return reports_; }

 private:
  ClaimReport& slot(const std::string& claim);
  std::vector<ClaimReport> reports_;
};

/// Inclusive integer range, parsed from "a..b" or "a".
struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};
Range parse_range(const std::string& text);

inline constexpr const char* kPackingShapeClaim = "optimal-packing-shape";

/// Records that an optimal open packing induces only K_1s and K_2s.
void check_packing_shape(Tally& tally, const Graph& g, const VertexSet& S, const std::string& where);

// --- suites ---------------------------------------------------------------

/// "packing-check": mark-array and pairwise open packing tests agree on every
/// labelled graph and every subset, n in `n`.
void scan_packing_check(Tally& tally, Range n);

/// "duality": rho <= gamma_t on isolated-free graphs, exhaustively for
/// `exhaustive` and on `samples` random isolated-free graphs per n in `random`.
void scan_duality(Tally& tally, Range exhaustive, Range random, std::size_t samples,
                  std::uint64_t seed);

/// "neighborhood-graph": open packings of g are the independent sets of its
/// neighbourhood graph, exhaustively.
void scan_neighborhood_graph(Tally& tally, Range n);

/// "bound-<op|tds>-t<t>-r<r>": oracle optima of `samples` random connected
/// (P_t ∪ rK_1)-free graphs never exceed the bound table.
void scan_bounds(Tally& tally, const std::vector<std::size_t>& t_values, Range r,
                 std::size_t samples, std::uint64_t seed);

/// "tightness-gr", "tightness-hr", "tightness-small", "tightness-blowup".
void scan_tightness(Tally& tally, Range gr_r, Range hr_r);

struct ConstructionScale {
  std::size_t exhaustive_n = 5;    // constructions 1-2 on every graph up to this order
  std::size_t random_max_n = 8;    // plus random graphs of order exhaustive_n+1..random_max_n
  std::size_t random_graphs = 100;
  std::size_t hitting_sets = 100;
  std::size_t rdm_instances = 100;
  std::size_t split_graphs = 200;
  std::uint64_t seed = 1;
};

/// "construction1".."construction5" (guarantees), "structure-c1".."structure-c4"
/// and "normalizer". `which` selects constructions 1..5; empty means all.
void scan_constructions(Tally& tally, const ConstructionScale& scale,
                        const std::vector<int>& which = {});

struct SolverScale {
  std::size_t samples = 300;        // oracle-checked instances per solver
  std::size_t timing_samples = 50;  // larger instances per solver, timed only
  std::size_t timing_max_order = 40;
  double time_limit_ms = 10.0;
  std::uint64_t seed = 1;
};

/// "solver-k13free-split", "solver-i1-split", "solver-split-deg12" against
/// the oracle, and "solver-timing".
void scan_solvers(Tally& tally, const SolverScale& scale);

/// "matching": polynomial matching against the exhaustive one on every
/// multigraph with at most `max_edges` edges over at most `max_vertices`
/// vertices, named blossom cases, and `samples` random multigraphs.
void scan_matching(Tally& tally, std::size_t max_vertices, std::size_t max_edges,
                   std::size_t samples, std::uint64_t seed);

}  // namespace openpack::cli
