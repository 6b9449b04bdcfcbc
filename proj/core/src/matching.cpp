#include "openpack/matching.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace openpack {
namespace {

constexpr int kNone = -1;

// Augmenting-path search with blossom contraction. Vertices keep their
// original indices; base[v] names the blossom v currently belongs to.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(static_cast<int>(g.order())), mate_(n_, kNone), parent_(n_), base_(n_),
        used_(n_), in_blossom_(n_) {}

  std::vector<int> solve() {
    // Greedy start shortens the augmenting phase.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != kNone) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (mate_[w] == kNone) {
          mate_[v] = static_cast<int>(w);
          mate_[w] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != kNone) continue;
      int end = find_path(v);
      while (end != kNone) {
        int pv = parent_[end];
        int next = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = next;
      }
    }
    return mate_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (Vertex wv : g_.neighbors(v)) {
        int to = static_cast<int>(wv);
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          used_[mate_[to]] = true;
          q.push(mate_[to]);
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

std::vector<std::optional<Vertex>> maximum_matching(const Graph& g) {
  auto mate = Blossom(g).solve();
  std::vector<std::optional<Vertex>> out(g.order());
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] != kNone) out[v] = static_cast<Vertex>(mate[v]);
  }
  return out;
}

std::vector<std::uint32_t> max_matching_poly(const Multigraph& mg) {
  std::map<Edge, std::uint32_t> representative;
  for (const auto& e : mg.edges()) {
    Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
    auto [it, fresh] = representative.emplace(key, e.label);
    if (!fresh) it->second = std::min(it->second, e.label);
  }
  std::vector<Edge> simple;
  simple.reserve(representative.size());
  for (const auto& [key, label] : representative) simple.push_back(key);

  auto mate = maximum_matching(Graph(mg.order(), simple));
  std::vector<std::uint32_t> labels;
  for (Vertex v = 0; v < mate.size(); ++v) {
    if (mate[v] && v < *mate[v]) labels.push_back(representative.at({v, *mate[v]}));
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace openpack
