#pragma once

// Small worked instances, plus graph helpers.

#include <cstdint>
#include <vector>

#include "openpack/graph.hpp"
#include "openpack/instances.hpp"
#include "openpack/recognize.hpp"

namespace openpack::testing {

// Six-vertex source graph with edges u1u2, u2u3, u3u5, u3u4, u4u5, u5u1,
// u4u6 (0-based here).
inline Graph c1_sample_source() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 4}, {2, 3}, {3, 4}, {4, 0}, {3, 5}});
}

// Six vertices, seven edges: u1u2, u2u3, u3u4, u4u5, u5u2, u5u6, u6u3.
inline Graph c2_sample_source() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {4, 5}, {5, 2}});
}

// 3-hitting set over U = {u1..u6}: W1={u1,u2,u5}, W2={u3,u5,u6},
// W3={u1,u3,u6}, W4={u2,u4,u5}.
inline HittingSetInstance sample_hitting_set() {
  return {6, 3, {{0, 1, 4}, {2, 4, 5}, {0, 2, 5}, {1, 3, 4}}};
}

// 4-dimensional matching, q = 3, coordinate codes x=0, u=1, v=2.
inline RdmInstance sample_rdm() {
  return {4, 3, {{0, 1, 2, 2}, {0, 0, 2, 2}, {1, 1, 1, 1}, {2, 2, 2, 0}, {2, 2, 0, 0}}};
}

// Split graph with clique {x1,x2,x3,x4} = 0..3 and independent vertices
// u=4 -> {x1,x2}, v=5 -> {x1,x2}, w=6 -> {x2,x3}, y=7 -> {x3}, z=8 -> {x4}.
inline constexpr Vertex kSplitU = 4, kSplitV = 5, kSplitW = 6, kSplitY = 7, kSplitZ = 8;

inline Graph sample_split_graph() {
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (auto [v, c] : std::vector<Edge>{{4, 0}, {4, 1}, {5, 0}, {5, 1}, {6, 1}, {6, 2}, {7, 2}, {8, 3}}) {
    edges.emplace_back(c, v);
  }
  return Graph(9, edges, {"x1", "x2", "x3", "x4", "u", "v", "w", "y", "z"});
}

inline SplitPartition sample_split_partition() { return {{0, 1, 2, 3}, {4, 5, 6, 7, 8}}; }

// Labelled graph on n vertices whose edge set is the bit pattern `code` over
// the pairs (i, j), i < j, in lexicographic order.
inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  unsigned slot = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++slot) {
      if (code >> slot & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline std::uint64_t pair_slots(std::size_t n) { return n * (n - 1) / 2; }

inline VertexSet subset_from_mask(std::uint64_t mask) {
  VertexSet out;
  for (Vertex v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

}  // namespace openpack::testing
