#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "openpack/graph.hpp"
#include "openpack/instances.hpp"

namespace openpack {

// Refutation witnesses. Each one is re-checkable against the input alone.

/// Two members of S that share the neighbour `shared`.
struct CommonNeighborWitness {
  Vertex first = 0;
  Vertex second = 0;
  Vertex shared = 0;
};

/// A vertex with no neighbour in the candidate dominating set.
struct UndominatedWitness {
  Vertex vertex = 0;
};

/// Two adjacent members of a would-be independent set.
struct AdjacentPairWitness {
  Vertex first = 0;
  Vertex second = 0;
};

/// Two selected edges meeting at `endpoint`.
struct SharedEndpointWitness {
  std::uint32_t first_label = 0;
  std::uint32_t second_label = 0;
  Vertex endpoint = 0;
};

/// Index of a member set that X misses.
struct UnhitSetWitness {
  std::size_t set_index = 0;
};

/// Two selected tuples agreeing in `coordinate` (0-based).
struct CoordinateClashWitness {
  TupleIndex first = 0;
  TupleIndex second = 0;
  std::size_t coordinate = 0;
};

struct CardinalityWitness {
  std::size_t expected = 0;
  std::size_t actual = 0;
};

using Witness = std::variant<CommonNeighborWitness, UndominatedWitness, AdjacentPairWitness,
                             SharedEndpointWitness, UnhitSetWitness, CoordinateClashWitness,
                             CardinalityWitness>;

std::string describe(const Witness& w);

struct CertifyResult {
  bool valid = true;
  std::optional<Witness> witness;  // present iff !valid

  static CertifyResult ok() { return {}; }
  static CertifyResult refuted(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const noexcept { return valid; }
};

/// Work done by the mark-array open packing test, in the units used to bound
/// it: every vertex picked by either loop, and every adjacency entry read.
struct OpenPackingCounters {
  std::size_t vertex_visits = 0;
  std::size_t edge_visits = 0;
};

/// Mark-array open packing test. Walks S in the given order, marks the
/// neighbours of each member and stops at the first vertex that is already
/// marked. Visits at most 2n+1 vertices and n+1 adjacency entries.
/// Duplicates or out-of-range members throw InvalidInput.
CertifyResult is_open_packing_fast(const Graph& g, std::span<const Vertex> S,
                                   OpenPackingCounters* counters = nullptr);

/// All-pairs common-neighbour test; same contract as the fast variant.
CertifyResult is_open_packing_naive(const Graph& g, std::span<const Vertex> S);

/// Every vertex of g (members of D included) has a neighbour in D. O(n+m).
CertifyResult is_total_dominating(const Graph& g, std::span<const Vertex> D);

CertifyResult is_independent_set(const Graph& g, std::span<const Vertex> S);

/// Selected edges (by label) pairwise share no endpoint.
CertifyResult is_matching(const Multigraph& mg, std::span<const std::uint32_t> F);

CertifyResult is_hitting_set(const HittingSetInstance& inst, std::span<const Element> X);

/// Selected tuples are pairwise distinct in every coordinate. No size check.
CertifyResult is_coordinate_disjoint(const RdmInstance& inst, std::span<const TupleIndex> L);

/// Coordinate-disjoint and |L| = q.
CertifyResult is_r_dimensional_matching(const RdmInstance& inst,
                                        std::span<const TupleIndex> L);

}  // namespace openpack
