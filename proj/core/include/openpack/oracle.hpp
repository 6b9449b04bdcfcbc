#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "openpack/graph.hpp"
#include "openpack/instances.hpp"

namespace openpack {

// Exact exponential-time solvers. They serve as ground truth for the
// polynomial algorithms and as the engines behind the bounded solvers.
//
// Every argmax/argmin is the lexicographically least optimum (members
// compared as sorted sequences), so results are stable across runs.

inline constexpr std::size_t kOracleDefaultLimit = 26;
inline constexpr std::size_t kOracleHardLimit = 64;

/// Size guard for the exhaustive routines. The relevant size is the vertex
/// count, or the edge/tuple count for matching-type searches. Values above
/// kOracleHardLimit are rejected with InvalidInput.
struct OracleLimits {
  std::size_t max_order = kOracleDefaultLimit;
};

VertexSet max_open_packing_bf(const Graph& g, OracleLimits limits = {});

/// Largest open packing of g whose members all lie in `allowed`.
VertexSet max_open_packing_within_bf(const Graph& g, std::span<const Vertex> allowed,
                                     OracleLimits limits = {});

/// Every open packing of maximum size, in lexicographic order.
std::vector<VertexSet> all_maximum_open_packings_bf(const Graph& g, OracleLimits limits = {});

/// Throws UndefinedProblem if g has an isolated vertex.
VertexSet min_total_dominating_bf(const Graph& g, OracleLimits limits = {});

VertexSet max_independent_set_bf(const Graph& g, OracleLimits limits = {});

/// Maximum matching as sorted edge labels. The guard applies to the edge count.
std::vector<std::uint32_t> max_matching_bf(const Multigraph& mg, OracleLimits limits = {});

/// All open packings of size at most k, ordered by size and then
/// lexicographically. Requires order() <= 64.
std::vector<VertexSet> enumerate_open_packings_upto(const Graph& g, std::size_t k);

/// Minimum total dominating set if gamma_t(g) <= l, else nullopt. Scans
/// vertex sets of size 1..l in lexicographic order and returns the first one
/// that dominates. Throws UndefinedProblem on an isolated vertex.
std::optional<VertexSet> min_tds_bounded(const Graph& g, std::size_t l);

/// The guard applies to the universe size.
ElementSet min_hitting_set_bf(const HittingSetInstance& inst, OracleLimits limits = {});

/// Largest coordinate-disjoint subfamily of M. The instance is a yes-instance
/// iff the result has q members. The guard applies to |M|.
std::vector<TupleIndex> max_rdm_bf(const RdmInstance& inst, OracleLimits limits = {});

}  // namespace openpack
