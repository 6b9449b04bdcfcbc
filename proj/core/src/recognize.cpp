#include "openpack/recognize.hpp"

#include <algorithm>
#include <numeric>

#include "openpack/errors.hpp"

namespace openpack {
namespace {

VertexSet sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

VertexSet without(const VertexSet& s, Vertex v) {
  VertexSet out;
  for (Vertex x : s) {
    if (x != v) out.push_back(x);
  }
  return out;
}

VertexSet with(const VertexSet& s, Vertex v) {
  VertexSet out = s;
  out.push_back(v);
  return sorted(std::move(out));
}

class InducedSearch {
 public:
  InducedSearch(const Graph& g, const Graph& pattern) : g_(g), p_(pattern) {
    map_.resize(p_.order());
    used_.assign(g_.order(), false);
  }

  bool run(std::size_t i) {
    if (i == p_.order()) return true;
    Vertex start = 0;
    // Interchangeable isolated vertices are placed in increasing order.
    if (p_.degree(static_cast<Vertex>(i)) == 0) {
      for (std::size_t j = 0; j < i; ++j) {
        if (p_.degree(static_cast<Vertex>(j)) == 0) start = std::max<Vertex>(start, map_[j] + 1);
      }
    }
    for (Vertex h = start; h < g_.order(); ++h) {
      if (used_[h] || !consistent(i, h)) continue;
      map_[i] = h;
      used_[h] = true;
      if (run(i + 1)) return true;
      used_[h] = false;
    }
    return false;
  }

  const std::vector<Vertex>& embedding() const { return map_; }

 private:
  bool consistent(std::size_t i, Vertex h) const {
    for (std::size_t j = 0; j < i; ++j) {
      bool want = p_.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j));
      if (g_.adjacent(h, map_[j]) != want) return false;
    }
    return true;
  }

  const Graph& g_;
  const Graph& p_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

// r pairwise non-adjacent members of `pool`, if they exist.
bool independent_subset(const Graph& g, std::span<const Vertex> pool, std::size_t r,
                        std::size_t start, std::vector<Vertex>& picked) {
  if (picked.size() == r) return true;
  for (std::size_t i = start; i + (r - picked.size()) <= pool.size(); ++i) {
    Vertex v = pool[i];
    bool ok = std::none_of(picked.begin(), picked.end(), [&](Vertex w) { return g.adjacent(v, w); });
    if (!ok) continue;
    picked.push_back(v);
    if (independent_subset(g, pool, r, i + 1, picked)) return true;
    picked.pop_back();
  }
  return false;
}

std::string path_union_name(std::size_t t, std::size_t s) {
  std::string name = "P_" + std::to_string(t);
  if (s == 1) name += " ∪ K_1";
  if (s > 1) name += " ∪ " + std::to_string(s) + "K_1";
  return name;
}

}  // namespace

bool is_valid_split_partition(const Graph& g, const SplitPartition& part) {
  std::vector<int> side(g.order(), -1);
  for (Vertex v : part.clique) {
    if (v >= g.order() || side[v] != -1) return false;
    side[v] = 0;
  }
  for (Vertex v : part.independent) {
    if (v >= g.order() || side[v] != -1) return false;
    side[v] = 1;
  }
  if (std::find(side.begin(), side.end(), -1) != side.end()) return false;
  for (Vertex v : part.independent) {
    for (Vertex w : g.neighbors(v)) {
      if (side[w] == 1) return false;
    }
  }
  // A clique on k vertices: each member has k-1 clique neighbours.
  for (Vertex v : part.clique) {
    std::size_t inside = 0;
    for (Vertex w : g.neighbors(v)) inside += side[w] == 0;
    if (inside + 1 != part.clique.size()) return false;
  }
  return true;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::size_t m = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (g.degree(order[i - 1]) + 1 >= i) m = i;
  }
  std::size_t head = 0;
  std::size_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != m * (m == 0 ? 0 : m - 1) + tail) return std::nullopt;

  SplitPartition part;
  part.clique = sorted(VertexSet(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m)));
  part.independent = sorted(VertexSet(order.begin() + static_cast<std::ptrdiff_t>(m), order.end()));
  if (!is_valid_split_partition(g, part)) return std::nullopt;
  return part;
}

std::vector<SplitPartition> all_split_partitions(const Graph& g) {
  auto base = split_partition(g);
  if (!base) return {};
  const auto& C = base->clique;
  const auto& I = base->independent;

  std::vector<bool> in_clique(g.order(), false);
  for (Vertex c : C) in_clique[c] = true;
  // Neighbours on the opposite side.
  std::vector<std::size_t> across(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) across[v] += in_clique[v] != in_clique[w];
  }

  std::vector<SplitPartition> out{*base};
  for (Vertex v : I) {
    if (across[v] == C.size()) out.push_back({with(C, v), without(I, v)});
  }
  for (Vertex c : C) {
    if (across[c] == 0) out.push_back({without(C, c), with(I, c)});
  }
  for (Vertex v : I) {
    for (Vertex c : C) {
      std::size_t vc = g.adjacent(v, c) ? 1 : 0;
      if (across[v] - vc + 1 == C.size() && across[c] == vc) {
        out.push_back({with(without(C, c), v), with(without(I, v), c)});
      }
    }
  }
  return out;
}

std::optional<SplitPartition> find_split_partition_if(
    const Graph& g, const std::function<bool(const SplitPartition&)>& accept) {
  for (auto& part : all_split_partitions(g)) {
    if (accept(part)) return part;
  }
  return std::nullopt;
}

bool is_induced_embedding(const Graph& g, const Graph& pattern,
                          std::span<const Vertex> embedding) {
  if (embedding.size() != pattern.order()) return false;
  std::vector<Vertex> seen(embedding.begin(), embedding.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  if (!seen.empty() && seen.back() >= g.order()) return false;
  for (Vertex i = 0; i < pattern.order(); ++i) {
    for (Vertex j = i + 1; j < pattern.order(); ++j) {
      if (pattern.adjacent(i, j) != g.adjacent(embedding[i], embedding[j])) return false;
    }
  }
  return true;
}

std::optional<PatternWitness> find_induced(const Graph& g, const Graph& pattern,
                                           const std::string& name) {
  if (pattern.order() > kMaxPatternOrder) {
    throw InvalidInput("pattern on " + std::to_string(pattern.order()) +
                       " vertices exceeds the limit of " + std::to_string(kMaxPatternOrder));
  }
  if (pattern.order() > g.order()) return std::nullopt;
  InducedSearch search(g, pattern);
  if (!search.run(0)) return std::nullopt;
  return PatternWitness{name, search.embedding()};
}

Graph star_pattern(std::size_t r) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= r; ++i) edges.emplace_back(0, i);
  return Graph(r + 1, edges);
}

Graph path_union_isolated_pattern(std::size_t t, std::size_t s) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < t; ++i) edges.emplace_back(i, i + 1);
  return Graph(t + s, edges);
}

FreenessResult is_K1r_free(const Graph& g, std::size_t r) {
  if (r < 2) throw InvalidInput("K_{1,r} test needs r >= 2");
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nbrs = g.neighbors(v);
    if (nbrs.size() < r) continue;
    std::vector<Vertex> picked;
    if (independent_subset(g, nbrs, r, 0, picked)) {
      PatternWitness w{"K_{1," + std::to_string(r) + "}", {v}};
      w.embedding.insert(w.embedding.end(), picked.begin(), picked.end());
      return {false, std::move(w)};
    }
  }
  return {};
}

std::optional<SplitPartition> is_Ir_split(const Graph& g, std::size_t r) {
  if (r < 1) throw InvalidInput("I_r-split test needs r >= 1");
  return find_split_partition_if(g, [&](const SplitPartition& part) {
    return std::all_of(part.independent.begin(), part.independent.end(),
                       [&](Vertex v) { return g.degree(v) == r; });
  });
}

FreenessResult is_pt_union_sk1_free(const Graph& g, std::size_t t, std::size_t s) {
  if (t < 1 || t > 4) throw InvalidInput("path length t must be in 1..4");
  auto found = find_induced(g, path_union_isolated_pattern(t, s), path_union_name(t, s));
  if (found) return {false, std::move(found)};
  return {};
}

DichotomyResult classify_H_dichotomy(const Graph& H) {
  if (H.order() < 4) throw InvalidInput("dichotomy classifier needs at least 4 vertices");

  // Tractable iff the non-isolated vertices induce a path on 0, 2, 3 or 4
  // vertices.
  std::size_t touched = 0;
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < H.order(); ++v) {
    touched += H.degree(v) > 0;
    max_degree = std::max(max_degree, H.degree(v));
  }
  std::size_t nontrivial_components = 0;
  for (const auto& comp : components(H)) nontrivial_components += comp.size() > 1;
  bool is_path = touched == 0 || (nontrivial_components == 1 && H.size() + 1 == touched &&
                                  max_degree <= 2 && touched <= 4);
  if (is_path) return {true, std::nullopt};

  const std::vector<std::pair<std::string, Graph>> obstructions = {
      {"K_3", Graph(3, {{0, 1}, {1, 2}, {0, 2}})},
      {"2K_2", Graph(4, {{0, 1}, {2, 3}})},
      {"C_4", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})},
      {"K_{1,3}", star_pattern(3)},
      {"C_5", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})},
  };
  for (const auto& [name, pattern] : obstructions) {
    if (auto w = find_induced(H, pattern, name)) return {false, std::move(w)};
  }
  throw std::logic_error("graph is neither in the tractable family nor contains an obstruction");
}

Graph neighborhood_graph(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex w = 0; w < g.order(); ++w) {
    auto nbrs = g.neighbors(w);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) edges.emplace_back(nbrs[i], nbrs[j]);
    }
  }
  return Graph(g.order(), edges, g.labels());
}

}  // namespace openpack
