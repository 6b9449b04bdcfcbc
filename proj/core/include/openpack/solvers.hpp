#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "openpack/graph.hpp"
#include "openpack/matching.hpp"
#include "openpack/oracle.hpp"
#include "openpack/recognize.hpp"

namespace openpack {

enum class Problem { open_packing, total_domination };

/// "op" or "tds".
std::string problem_tag(Problem p);
/// Accepts "op"/"open-packing" and "tds"/"td"/"total-domination".
std::optional<Problem> parse_problem(const std::string& text);

// ---------------------------------------------------------------------------
// Bounds for connected (P_t ∪ rK_1)-free graphs.

enum class Tightness { tight, near_optimal };

struct BoundEntry {
  Problem problem = Problem::open_packing;
  std::size_t t = 0;  // path order; 0 for the sK_1-free rows
  std::size_t r = 0;  // isolated vertices in the forbidden pattern
  std::size_t value = 0;
  Tightness tightness = Tightness::tight;
};

/// Upper bound on the optimum over connected (P_t ∪ rK_1)-free graphs,
/// t in 1..4. P_1 ∪ rK_1 is (r+1)K_1 and defers to bound_table_independent.
/// Throws InvalidInput outside the ranges where a bound holds.
BoundEntry bound_table(Problem problem, std::size_t t, std::size_t r);

/// Upper bound over connected sK_1-free graphs, s >= 2.
BoundEntry bound_table_independent(Problem problem, std::size_t s);

// ---------------------------------------------------------------------------

struct ComponentSolve {
  VertexSet vertices;  // the component, in host indices
  VertexSet answer;    // host indices
  std::string method;
  std::string evidence;
};

struct SolveReport {
  Problem problem = Problem::open_packing;
  VertexSet answer;
  /// Single method tag, or the distinct component methods joined by '+'.
  std::string method;
  std::string evidence;
  std::vector<ComponentSolve> components;

  std::size_t optimum() const noexcept { return answer.size(); }
};

/// Exact optimum when every component's optimum is at most `bound`: open
/// packings by enumerating all packings of size <= bound, total domination by
/// scanning vertex sets of size <= bound. Open packing sums over components.
/// Throws BoundExceeded if some component beats the bound and
/// UndefinedProblem for total domination with an isolated vertex.
SolveReport solve_bounded(const Graph& g, Problem problem, std::size_t bound);

/// Maximum open packing of a connected K_{1,3}-free split graph, read off the
/// structure of the independent side. Throws PreconditionFailed otherwise.
SolveReport solve_op_k13free_split(const Graph& g, const SplitPartition& part);

/// Minimum total dominating set of a connected split graph on >= 2 vertices
/// whose independent vertices are all pendants: N(I), or a pair when
/// |N(I)| <= 1.
SolveReport solve_tds_i1_split(const Graph& g, const SplitPartition& part);

/// Maximum open packing of a connected split graph with independent-side
/// degrees in {1,2}, via a maximum matching of the construction-5 multigraph.
SolveReport solve_op_split_deg12(const Graph& g, const SplitPartition& part);

struct AutoSolveOptions {
  /// Largest r tried when searching for a (P_t ∪ rK_1)-free class.
  std::size_t max_class_r = 4;
  OracleLimits oracle{};
};

/// Per component, the first applicable method in this order: total
/// domination on pendant-only split graphs; open packing on K_{1,3}-free
/// split graphs; open packing on split graphs with independent degrees in
/// {1,2}; the bounded solver for the tightest (P_t ∪ rK_1)-free class found
/// with r <= max_class_r; the exhaustive oracle. Throws SizeGuardExceeded if
/// nothing applies.
SolveReport auto_solve(const Graph& g, Problem problem, const AutoSolveOptions& options = {});

}  // namespace openpack
