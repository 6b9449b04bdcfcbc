#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "openpack/graph.hpp"
#include "openpack/instances.hpp"
#include "openpack/recognize.hpp"

namespace openpack {

/// SplitMix64 (Steele, Lea, Flood 2014). The stream is fixed so that a seed
/// reproduces the same instance on every platform:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// uniform(k) draws next() and rejects values in the top partial bucket, so
/// it is exact. unit() is (next() >> 11) * 2^-53, in [0, 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, k). Requires k > 0.
  std::uint64_t uniform(std::uint64_t k);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + uniform(hi - lo + 1); }
  double unit();

 private:
  std::uint64_t state_;
};

// Extremal families.

/// x_i - y_i - z_i - u for i = 1..r, plus the edge uv. 3r+2 vertices, in the
/// order x_1,y_1,z_1,...,x_r,y_r,z_r,u,v. Requires r >= 1.
Graph gen_Gr(std::size_t r);

/// Paths x_i - y_i - z_i for i = 1..r-2 with the z_i forming a clique.
/// 3(r-2) vertices ordered x_1,y_1,z_1,... Requires r >= 3.
Graph gen_Hr(std::size_t r);

/// Requires n >= 3.
Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);
Graph gen_path(std::size_t n);

/// Replaces vertex v by a clique of sizes[v] vertices; cliques of adjacent
/// vertices are fully joined. Copies of v are numbered consecutively in
/// vertex order. Requires every size >= 1.
Graph blowup(const Graph& g, std::span<const std::size_t> sizes);

// Seeded random instances.

/// Each pair (i, j), i < j, visited in lexicographic order, becomes an edge
/// when unit() < p.
Graph gen_random_graph(std::size_t n, double p, std::uint64_t seed);

/// A clique on vertices 0..c-1 and independent vertices c..c+i-1. Each
/// independent vertex draws a degree uniformly in [min_degree, max_degree]
/// and that many distinct clique neighbours.
std::pair<Graph, SplitPartition> gen_random_split(std::size_t clique_size,
                                                  std::size_t independent_size,
                                                  std::size_t min_degree, std::size_t max_degree,
                                                  std::uint64_t seed);

/// `set_count` distinct r-subsets of a universe of `universe_size` elements.
HittingSetInstance gen_random_hitting_set(std::size_t universe_size, std::size_t set_count,
                                          std::size_t r, std::uint64_t seed);

/// `tuple_count` distinct r-tuples over {0..q-1}.
RdmInstance gen_random_rdm(std::size_t q, std::size_t r, std::size_t tuple_count,
                           std::uint64_t seed);

}  // namespace openpack
