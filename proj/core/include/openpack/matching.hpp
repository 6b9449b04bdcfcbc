#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "openpack/graph.hpp"

namespace openpack {

/// Maximum matching of a simple graph by Edmonds' blossom algorithm, O(n^3).
/// mate[v] is v's partner, or nullopt when v is exposed.
std::vector<std::optional<Vertex>> maximum_matching(const Graph& g);

/// Maximum matching of a multigraph, reported as sorted edge labels. Parallel
/// edges collapse to their lowest label during the search.
std::vector<std::uint32_t> max_matching_poly(const Multigraph& mg);

}  // namespace openpack
