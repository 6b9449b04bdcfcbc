#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "openpack/graph.hpp"
#include "openpack/instances.hpp"
#include "openpack/recognize.hpp"

namespace openpack {

// Executable forms of the five hardness constructions, with certificate
// mappers in both directions. Output vertices carry a Role saying where they
// came from; mappers read roles instead of re-deriving provenance.

enum class RoleKind {
  source_vertex,  // a = source vertex
  source_edge,    // a < b = endpoints of the source edge
  pendant,        // a = degree-1 source vertex it completes
  hub_x,
  hub_y,
  hub_z,
  element,     // a = universe element
  set_vertex,  // a = index of the member set
  selector_x,  // a = i (0-based)
  selector_y,
  coordinate,  // a = value, b = coordinate (0-based)
  tuple,       // a = index into M
};

struct Role {
  RoleKind kind = RoleKind::source_vertex;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  bool operator==(const Role&) const = default;
};

/// Stable lowercase tag, e.g. "source_edge".
std::string role_name(RoleKind kind);

struct ReductionInstance {
  int construction = 0;
  /// Graph for constructions 1-4, Multigraph for construction 5.
  std::variant<Graph, Multigraph> graph;
  /// roles[v] for every output vertex.
  std::vector<Role> roles;
  /// Clique/independent partition of the output (constructions 2-4).
  std::optional<SplitPartition> partition;

  /// The input the construction was applied to.
  std::variant<Graph, HittingSetInstance, RdmInstance> source;
  /// Partition of the source split graph (construction 5).
  std::optional<SplitPartition> source_partition;

  const Graph& output_graph() const;
  const Multigraph& output_multigraph() const;
  /// Output vertex carrying `role`, if any.
  std::optional<Vertex> vertex_with_role(const Role& role) const;
};

// --- Construction 1: independent set -> open packing on K_{1,3}-free graphs.
// Layout: source vertices, then one vertex per source edge (in edges()
// order), then one pendant-completion vertex per degree-1 source vertex.

ReductionInstance construct1(const Graph& g);

struct NormalizeTrace {
  VertexSet result;                // independent set of the source graph
  std::vector<VertexSet> steps;    // output-graph set after each swap
};

/// Turns an open packing of the construction-1 output into an independent set
/// of the source of the same size. Pendant vertices are swapped for their
/// source vertex first, then edge vertices for their smaller endpoint. Each
/// intermediate set is re-certified. Throws PreconditionFailed if S is not an
/// open packing.
NormalizeTrace normalize_op_c1(const ReductionInstance& inst, std::span<const Vertex> S);

// --- Construction 2: independent set -> open packing on K_{1,4}-free split
// graphs. Layout: source vertices, edge vertices, then x, y, z.

ReductionInstance construct2(const Graph& g);

/// Source vertices of an open packing S, as source indices.
VertexSet normalize_op_c2(const ReductionInstance& inst, std::span<const Vertex> S);

// --- Construction 3: r-hitting set -> total domination on I_r-split graphs.
// Layout: elements, x_1..x_r, one z_W per member set, then y.

/// Requires r >= 2.
ReductionInstance construct3(const HittingSetInstance& inst);

/// D ∩ U for a total dominating set D.
ElementSet map_tds_c3(const ReductionInstance& inst, std::span<const Vertex> D);

/// X ∪ {x_1} for a hitting set X.
VertexSet map_hs_c3(const ReductionInstance& inst, std::span<const Element> X);

// --- Construction 4: r-dimensional matching -> open packing on I_r-split
// graphs. Coordinate vertex (value x, coordinate i) has index i*q + x; tuple
// vertex t has index r*q + t.

/// Requires r >= 3.
ReductionInstance construct4(const RdmInstance& inst);

/// Tuple set of an open packing of size q.
std::vector<TupleIndex> map_op_c4(const ReductionInstance& inst, std::span<const Vertex> S);

// --- Construction 5: open packing on split graphs with I-degrees in {1,2}
// -> matching. Output vertices are the clique vertices in increasing order,
// then the degree-1 independent vertices. Edge e_v carries label v.

ReductionInstance construct5(const Graph& g, const SplitPartition& part);

/// S_F = {v in I : e_v in F} for a matching F.
VertexSet map_c5_matching_to_packing(const ReductionInstance& inst,
                                     std::span<const std::uint32_t> F);

/// F_S = {e_v : v in S} for an open packing S contained in I.
std::vector<std::uint32_t> map_c5_packing_to_matching(const ReductionInstance& inst,
                                                      std::span<const Vertex> S);

}  // namespace openpack
