#pragma once

// 64-bit vertex-set helpers shared by the exhaustive searches.

#include <bit>
#include <cstdint>
#include <vector>

#include "openpack/graph.hpp"

namespace openpack::detail {

using Mask = std::uint64_t;

inline constexpr Mask bit(unsigned i) { return Mask{1} << i; }

inline Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(static_cast<unsigned>(n)) - 1; }

inline unsigned lowest(Mask m) { return static_cast<unsigned>(std::countr_zero(m)); }

inline int count(Mask m) { return std::popcount(m); }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

inline Mask to_mask(std::span<const Vertex> vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

inline VertexSet to_set(Mask m) {
  VertexSet out;
  for_each_bit(m, [&](unsigned v) { out.push_back(v); });
  return out;
}

// Open neighbourhoods as masks. Caller guarantees order() <= 64.
inline std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> out(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) out[v] = to_mask(g.neighbors(v));
  return out;
}

// conflict[v]: vertices other than v sharing a neighbour with v.
inline std::vector<Mask> shared_neighbor_masks(const Graph& g) {
  const auto nbr = neighbor_masks(g);
  std::vector<Mask> out(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) out[v] |= nbr[w];
    out[v] &= ~bit(v);
  }
  return out;
}

}  // namespace openpack::detail
