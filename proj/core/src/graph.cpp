#include "openpack/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "openpack/errors.hpp"

namespace openpack {

VertexSet make_vertex_set(std::span<const Vertex> members, std::size_t n) {
  VertexSet out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] >= n) {
      throw InvalidInput("vertex " + std::to_string(out[i]) +
                         " out of range for graph of order " + std::to_string(n));
    }
    if (i > 0 && out[i] == out[i - 1]) {
      throw InvalidInput("duplicate vertex " + std::to_string(out[i]) + " in set");
    }
  }
  return out;
}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges,
             std::vector<std::string> labels)
    : adj_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n) {
    throw InvalidInput("label count does not match vertex count");
  }
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for graph of order " + std::to_string(n));
    }
    if (u == v) {
      throw InvalidInput("self-loop at vertex " + std::to_string(u));
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adj_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (v >= order()) throw InvalidInput("vertex out of range");
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order()) {
    throw InvalidInput("label count does not match vertex count");
  }
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

Graph build_graph(std::size_t n, const std::vector<Edge>& edges) {
  return Graph(n, edges);
}

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return components(g).size() <= 1;
}

std::optional<Vertex> find_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return v;
  }
  return std::nullopt;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
  InducedSubgraph out;
  out.origin = make_vertex_set(members, g.order());
  std::vector<Vertex> index(g.order(), static_cast<Vertex>(-1));
  for (Vertex i = 0; i < out.origin.size(); ++i) index[out.origin[i]] = i;

  std::vector<Edge> edges;
  for (Vertex i = 0; i < out.origin.size(); ++i) {
    for (Vertex w : g.neighbors(out.origin[i])) {
      Vertex j = index[w];
      if (j != static_cast<Vertex>(-1) && i < j) edges.emplace_back(i, j);
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Vertex v : out.origin) labels.push_back(g.labels()[v]);
  }
  out.graph = Graph(out.origin.size(), edges, std::move(labels));
  return out;
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) throw InvalidInput("vertex out of range");
  if (u == v) throw InvalidInput("common_neighbors needs two distinct vertices");
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------

Multigraph::Multigraph(std::size_t n, std::vector<MultiEdge> edges,
                       std::vector<std::string> vertex_labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(vertex_labels)) {
  if (!labels_.empty() && labels_.size() != n_) {
    throw InvalidInput("label count does not match vertex count");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u >= n_ || e.v >= n_) throw InvalidInput("multigraph edge endpoint out of range");
    if (e.u == e.v) throw InvalidInput("multigraph edges may not be loops");
    if (!by_label_.emplace(e.label, i).second) {
      throw InvalidInput("duplicate edge label " + std::to_string(e.label));
    }
  }
}

std::optional<std::size_t> Multigraph::find(std::uint32_t label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

const MultiEdge& Multigraph::edge(std::uint32_t label) const {
  auto idx = find(label);
  if (!idx) throw InvalidInput("unknown edge label " + std::to_string(label));
  return edges_[*idx];
}

std::string Multigraph::vertex_label(Vertex v) const {
  if (v >= n_) throw InvalidInput("vertex out of range");
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

}  // namespace openpack
