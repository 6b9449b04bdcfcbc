#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "openpack/graph.hpp"

namespace openpack {

/// V = clique ∪ independent, clique pairwise adjacent, independent pairwise
/// non-adjacent.
struct SplitPartition {
  VertexSet clique;
  VertexSet independent;

  bool operator==(const SplitPartition&) const = default;
};

bool is_valid_split_partition(const Graph& g, const SplitPartition& part);

/// Degree-sequence split recognition. C is the prefix of the vertices sorted
/// by degree (descending, ties by index) up to the largest i with d_i >= i-1;
/// the result is re-verified before it is returned.
std::optional<SplitPartition> split_partition(const Graph& g);

/// All split partitions of g. Any two differ by at most one vertex on each
/// side, so they are the canonical one plus single moves and swaps from it.
/// The canonical partition comes first.
std::vector<SplitPartition> all_split_partitions(const Graph& g);

/// First split partition (in all_split_partitions order) accepted by `accept`.
std::optional<SplitPartition> find_split_partition_if(
    const Graph& g, const std::function<bool(const SplitPartition&)>& accept);

/// An induced copy of a named pattern: embedding[i] is the host vertex
/// playing pattern vertex i.
struct PatternWitness {
  std::string pattern;
  std::vector<Vertex> embedding;
};

/// Checks that `embedding` is injective and preserves adjacency and
/// non-adjacency.
bool is_induced_embedding(const Graph& g, const Graph& pattern,
                          std::span<const Vertex> embedding);

inline constexpr std::size_t kMaxPatternOrder = 12;

/// Backtracking search for an induced copy of `pattern`. Pattern vertices are
/// placed in index order onto ascending host vertices; isolated pattern
/// vertices are placed in increasing host order. Throws InvalidInput for
/// patterns above kMaxPatternOrder vertices.
std::optional<PatternWitness> find_induced(const Graph& g, const Graph& pattern,
                                           const std::string& name = "pattern");

/// Outcome of an H-freeness test; `witness` holds an induced copy when the
/// graph is not H-free.
struct FreenessResult {
  bool free = true;
  std::optional<PatternWitness> witness;

  explicit operator bool() const noexcept { return free; }
};

// Pattern factories. Vertex 0 of a star is its centre; a path P_t ∪ sK_1 has
// path vertices 0..t-1 followed by the isolated ones.
Graph star_pattern(std::size_t r);
Graph path_union_isolated_pattern(std::size_t t, std::size_t s);

/// K_{1,r}-freeness via an r-independent set inside some neighbourhood.
/// Requires r >= 2.
FreenessResult is_K1r_free(const Graph& g, std::size_t r);

/// A split partition with every independent-side vertex of degree exactly r,
/// if one exists. Requires r >= 1.
std::optional<SplitPartition> is_Ir_split(const Graph& g, std::size_t r);

/// (P_t ∪ sK_1)-freeness. Requires 1 <= t <= 4.
FreenessResult is_pt_union_sk1_free(const Graph& g, std::size_t t, std::size_t s);

/// Either H is one of pK_1, K_2 ∪ (p-2)K_1, P_3 ∪ (p-3)K_1, P_4 ∪ (p-4)K_1,
/// or H contains an induced K_3, 2K_2, C_4, K_{1,3} or C_5.
struct DichotomyResult {
  bool tractable = false;
  std::optional<PatternWitness> obstruction;
};

/// Requires |V(H)| >= 4.
DichotomyResult classify_H_dichotomy(const Graph& H);

/// Graph on V(g) joining x != y iff N(x) ∩ N(y) is non-empty. Open packings
/// of g are exactly the independent sets of this graph.
Graph neighborhood_graph(const Graph& g);

}  // namespace openpack
