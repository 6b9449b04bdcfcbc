#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace openpack {

// Vertices are dense indices 0..n-1. Provenance lives in labels only.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free sequence of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Sorts `members` and checks them against a host of order `n`.
/// Throws InvalidInput on a duplicate or an out-of-range member.
VertexSet make_vertex_set(std::span<const Vertex> members, std::size_t n);

/// Simple undirected graph in sorted adjacency-list form. Immutable once
/// built; duplicate input edges collapse, self-loops are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, const std::vector<Edge>& edges,
        std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adj_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Label of `v`, or its decimal index when the graph carries no labels.
  std::string label(Vertex v) const;

  /// Same graph with the given labels (size must match order()).
  Graph with_labels(std::vector<std::string> labels) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Factory mirroring the constructor; kept for call sites that read better
/// as a function.
Graph build_graph(std::size_t n, const std::vector<Edge>& edges);

/// Connected components, each sorted, ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

/// First vertex of degree zero, if any.
std::optional<Vertex> find_isolated_vertex(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // origin[i] is the host vertex that became vertex i.
  std::vector<Vertex> origin;
};

/// G[U]. Members of U are taken in sorted order; vertex labels carry over.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members);

/// N(u) ∩ N(v) by sorted-list intersection. Requires u != v.
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);

// ---------------------------------------------------------------------------

struct MultiEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t label = 0;

  bool operator==(const MultiEdge&) const = default;
};

/// Undirected multigraph with uniquely labelled, possibly parallel edges.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t n, std::vector<MultiEdge> edges,
             std::vector<std::string> vertex_labels = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const MultiEdge> edges() const noexcept { return edges_; }

  /// Index into edges() of the edge carrying `label`.
  std::optional<std::size_t> find(std::uint32_t label) const;
  const MultiEdge& edge(std::uint32_t label) const;

  const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }
  std::string vertex_label(Vertex v) const;

 private:
  std::size_t n_ = 0;
  std::vector<MultiEdge> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::uint32_t, std::size_t> by_label_;
};

}  // namespace openpack
