#include "openpack/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "openpack/errors.hpp"

namespace openpack {
namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

// k distinct values from {0..n-1} by a partial Fisher-Yates shuffle, sorted.
std::vector<std::uint32_t> sample_distinct(SplitMix64& rng, std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + rng.uniform(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Number of r-subsets of an n-set, saturated at `cap`.
std::size_t binomial_capped(std::size_t n, std::size_t r, std::size_t cap) {
  if (r > n) return 0;
  long double value = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    value = value * static_cast<long double>(n - r + i) / static_cast<long double>(i);
    if (value > static_cast<long double>(cap)) return cap;
  }
  return static_cast<std::size_t>(value + 0.5L);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t k) {
  if (k == 0) throw InvalidInput("uniform draw over an empty range");
  // Largest multiple of k representable; values at or above it are redrawn.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % k);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % k;
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Graph gen_Gr(std::size_t r) {
  if (r < 1) throw InvalidInput("G_r needs r >= 1");
  const auto u = static_cast<Vertex>(3 * r);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex i = 0; i < r; ++i) {
    Vertex x = 3 * i;
    edges.emplace_back(x, x + 1);
    edges.emplace_back(x + 1, x + 2);
    edges.emplace_back(x + 2, u);
    for (const char* name : {"x_", "y_", "z_"}) labels.push_back(name + idx(i));
  }
  edges.emplace_back(u, u + 1);
  labels.insert(labels.end(), {"u", "v"});
  return Graph(3 * r + 2, edges, std::move(labels));
}

Graph gen_Hr(std::size_t r) {
  if (r < 3) throw InvalidInput("H_r needs r >= 3");
  const std::size_t k = r - 2;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex i = 0; i < k; ++i) {
    Vertex x = 3 * i;
    edges.emplace_back(x, x + 1);
    edges.emplace_back(x + 1, x + 2);
    for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(x + 2, 3 * j + 2);
    for (const char* name : {"x_", "y_", "z_"}) labels.push_back(name + idx(i));
  }
  return Graph(3 * k, edges, std::move(labels));
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, edges);
}

Graph gen_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph gen_path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph blowup(const Graph& g, std::span<const std::size_t> sizes) {
  if (sizes.size() != g.order()) throw InvalidInput("one size per vertex is required");
  std::vector<Vertex> first(g.order() + 1, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (sizes[v] == 0) throw InvalidInput("blowup sizes must be positive");
    first[v + 1] = first[v] + static_cast<Vertex>(sizes[v]);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex a = first[v]; a < first[v + 1]; ++a) {
      labels.push_back(sizes[v] == 1 ? g.label(v) : g.label(v) + "." + idx(a - first[v]));
      for (Vertex b = a + 1; b < first[v + 1]; ++b) edges.emplace_back(a, b);
    }
  }
  for (auto [u, v] : g.edges()) {
    for (Vertex a = first[u]; a < first[u + 1]; ++a) {
      for (Vertex b = first[v]; b < first[v + 1]; ++b) edges.emplace_back(a, b);
    }
  }
  return Graph(first.back(), edges, g.has_labels() ? std::move(labels) : std::vector<std::string>{});
}

Graph gen_random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.unit() < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::pair<Graph, SplitPartition> gen_random_split(std::size_t clique_size,
                                                  std::size_t independent_size,
                                                  std::size_t min_degree, std::size_t max_degree,
                                                  std::uint64_t seed) {
  if (min_degree > max_degree || max_degree > clique_size) {
    throw InvalidInput("degree range must satisfy min <= max <= clique size");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  SplitPartition part;
  for (Vertex a = 0; a < clique_size; ++a) {
    part.clique.push_back(a);
    for (Vertex b = a + 1; b < clique_size; ++b) edges.emplace_back(a, b);
  }
  for (std::size_t i = 0; i < independent_size; ++i) {
    auto v = static_cast<Vertex>(clique_size + i);
    part.independent.push_back(v);
    std::size_t degree = rng.between(min_degree, max_degree);
    for (Vertex c : sample_distinct(rng, clique_size, degree)) edges.emplace_back(c, v);
  }
  return {Graph(clique_size + independent_size, edges), std::move(part)};
}

HittingSetInstance gen_random_hitting_set(std::size_t universe_size, std::size_t set_count,
                                          std::size_t r, std::uint64_t seed) {
  if (r == 0 || r > universe_size) throw InvalidInput("need 1 <= r <= universe size");
  if (binomial_capped(universe_size, r, set_count) < set_count) {
    throw InvalidInput("not enough distinct r-subsets for the requested set count");
  }
  SplitMix64 rng(seed);
  std::set<ElementSet> seen;
  HittingSetInstance inst{universe_size, r, {}};
  while (inst.sets.size() < set_count) {
    ElementSet W = sample_distinct(rng, universe_size, r);
    if (seen.insert(W).second) inst.sets.push_back(std::move(W));
  }
  return inst;
}

RdmInstance gen_random_rdm(std::size_t q, std::size_t r, std::size_t tuple_count,
                           std::uint64_t seed) {
  if (q == 0 || r == 0 || tuple_count == 0) throw InvalidInput("q, r and tuple count must be positive");
  long double space = 1;
  for (std::size_t i = 0; i < r; ++i) space *= static_cast<long double>(q);
  if (space < static_cast<long double>(tuple_count)) {
    throw InvalidInput("not enough distinct tuples for the requested count");
  }
  SplitMix64 rng(seed);
  std::set<Tuple> seen;
  RdmInstance inst{r, q, {}};
  while (inst.tuples.size() < tuple_count) {
    Tuple t(r);
    for (auto& value : t) value = static_cast<std::uint32_t>(rng.uniform(q));
    if (seen.insert(t).second) inst.tuples.push_back(std::move(t));
  }
  return inst;
}

}  // namespace openpack
