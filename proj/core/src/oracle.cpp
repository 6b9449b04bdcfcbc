#include "openpack/oracle.hpp"

#include <algorithm>
#include <string>

#include "bits.hpp"
#include "openpack/errors.hpp"

namespace openpack {
namespace {

using detail::bit;
using detail::count;
using detail::for_each_bit;
using detail::lowest;
using detail::Mask;

void check_limit(std::size_t size, OracleLimits limits, const char* what) {
  if (limits.max_order > kOracleHardLimit) {
    throw InvalidInput("oracle limit " + std::to_string(limits.max_order) + " exceeds " +
                       std::to_string(kOracleHardLimit));
  }
  if (size > limits.max_order) {
    throw SizeGuardExceeded(std::string(what) + " count " + std::to_string(size) +
                            " exceeds oracle guard " + std::to_string(limits.max_order));
  }
}

void require_no_isolated(const Graph& g) {
  if (auto v = find_isolated_vertex(g)) {
    throw UndefinedProblem("vertex " + std::to_string(*v) +
                           " is isolated; no total dominating set exists");
  }
}

// Maximum independent set in a conflict graph given as masks. Include-first
// branching on the lowest undecided vertex visits equal-size sets in
// lexicographic order, so keeping only strict improvements yields the
// lexicographically least maximum.
class IndependentSearch {
 public:
  explicit IndependentSearch(const std::vector<Mask>& conflict) : conflict_(conflict) {}

  Mask maximum(Mask candidates) {
    best_size_ = -1;
    best_ = 0;
    collect_ = false;
    run(0, 0, candidates);
    return best_;
  }

  std::vector<Mask> all_of_size(Mask candidates, int size) {
    found_.clear();
    best_size_ = size;
    collect_ = true;
    run(0, 0, candidates);
    return found_;
  }

 private:
  // Greedy clique partition of `cand`; bounds any independent subset.
  int cover_bound(Mask cand) const {
    int cliques = 0;
    while (cand) {
      unsigned v = lowest(cand);
      Mask members = bit(v);
      Mask common = cand & conflict_[v] & ~bit(v);
      while (common) {
        unsigned w = lowest(common);
        members |= bit(w);
        common &= conflict_[w];
      }
      cand &= ~members;
      ++cliques;
    }
    return cliques;
  }

  void run(Mask chosen, int size, Mask cand) {
    int bound = size + cover_bound(cand);
    if (collect_ ? bound < best_size_ : bound <= best_size_) return;
    if (cand == 0) {
      if (collect_) {
        found_.push_back(chosen);
      } else {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    unsigned v = lowest(cand);
    run(chosen | bit(v), size + 1, cand & ~conflict_[v] & ~bit(v));
    run(chosen, size, cand & ~bit(v));
  }

  const std::vector<Mask>& conflict_;
  Mask best_ = 0;
  int best_size_ = -1;
  bool collect_ = false;
  std::vector<Mask> found_;
};

// Minimum cover: pick items so that every requirement is covered by one of
// them. Total domination covers vertices by neighbours; hitting set covers
// member sets by elements.
struct CoverProblem {
  std::vector<Mask> covers;        // per item: requirements it covers
  std::vector<Mask> coverable_by;  // per requirement: items covering it
  Mask all_requirements = 0;
};

bool coverable(const CoverProblem& p, Mask covered, Mask allowed, int budget) {
  Mask remaining = p.all_requirements & ~covered;
  if (remaining == 0) return true;
  if (budget == 0) return false;

  int best_choice = -1;
  int fewest = 65;
  for_each_bit(remaining, [&](unsigned r) {
    int c = count(p.coverable_by[r] & allowed);
    if (c < fewest) {
      fewest = c;
      best_choice = static_cast<int>(r);
    }
  });
  if (fewest == 0) return false;

  int widest = 0;
  for_each_bit(allowed, [&](unsigned w) { widest = std::max(widest, count(p.covers[w] & remaining)); });
  if (count(remaining) > budget * widest) return false;

  Mask options = p.coverable_by[best_choice] & allowed;
  Mask pool = allowed;
  while (options) {
    unsigned w = lowest(options);
    options &= options - 1;
    pool &= ~bit(w);
    if (coverable(p, covered | p.covers[w], pool, budget - 1)) return true;
  }
  return false;
}

// Lexicographically least cover of minimum size, or nullopt if none exists.
std::optional<Mask> min_cover(const CoverProblem& p, std::size_t item_count) {
  const Mask all_items = detail::low_bits(item_count);
  for (Mask pending = p.all_requirements; pending; pending &= pending - 1) {
    if ((p.coverable_by[lowest(pending)] & all_items) == 0) return std::nullopt;
  }
  int k = 0;
  while (!coverable(p, 0, all_items, k)) ++k;

  Mask chosen = 0;
  Mask covered = 0;
  unsigned next = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (unsigned v = next; v < item_count; ++v) {
      Mask later = all_items & ~detail::low_bits(v + 1);
      if (coverable(p, covered | p.covers[v], later, k - pos - 1)) {
        chosen |= bit(v);
        covered |= p.covers[v];
        next = v + 1;
        break;
      }
    }
  }
  return chosen;
}

CoverProblem domination_problem(const Graph& g) {
  CoverProblem p;
  p.covers = detail::neighbor_masks(g);
  p.coverable_by = p.covers;  // N is symmetric
  p.all_requirements = detail::low_bits(g.order());
  return p;
}

std::vector<Mask> adjacency_conflicts(const Graph& g) { return detail::neighbor_masks(g); }

}  // namespace

VertexSet max_open_packing_bf(const Graph& g, OracleLimits limits) {
  check_limit(g.order(), limits, "vertex");
  auto conflict = detail::shared_neighbor_masks(g);
  return detail::to_set(IndependentSearch(conflict).maximum(detail::low_bits(g.order())));
}

VertexSet max_open_packing_within_bf(const Graph& g, std::span<const Vertex> allowed,
                                     OracleLimits limits) {
  check_limit(g.order(), limits, "vertex");
  VertexSet members = make_vertex_set(allowed, g.order());
  auto conflict = detail::shared_neighbor_masks(g);
  return detail::to_set(IndependentSearch(conflict).maximum(detail::to_mask(members)));
}

std::vector<VertexSet> all_maximum_open_packings_bf(const Graph& g, OracleLimits limits) {
  check_limit(g.order(), limits, "vertex");
  auto conflict = detail::shared_neighbor_masks(g);
  IndependentSearch search(conflict);
  const Mask all = detail::low_bits(g.order());
  int size = count(search.maximum(all));
  std::vector<VertexSet> out;
  for (Mask m : search.all_of_size(all, size)) out.push_back(detail::to_set(m));
  return out;
}

VertexSet min_total_dominating_bf(const Graph& g, OracleLimits limits) {
  check_limit(g.order(), limits, "vertex");
  require_no_isolated(g);
  auto best = min_cover(domination_problem(g), g.order());
  return detail::to_set(best.value_or(0));
}

VertexSet max_independent_set_bf(const Graph& g, OracleLimits limits) {
  check_limit(g.order(), limits, "vertex");
  auto conflict = adjacency_conflicts(g);
  return detail::to_set(IndependentSearch(conflict).maximum(detail::low_bits(g.order())));
}

std::vector<std::uint32_t> max_matching_bf(const Multigraph& mg, OracleLimits limits) {
  check_limit(mg.size(), limits, "edge");
  auto edges = mg.edges();
  std::vector<Mask> conflict(edges.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i == j) continue;
      const auto& a = edges[i];
      const auto& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) conflict[i] |= bit(j);
    }
  }
  Mask best = IndependentSearch(conflict).maximum(detail::low_bits(edges.size()));
  std::vector<std::uint32_t> labels;
  for_each_bit(best, [&](unsigned i) { labels.push_back(edges[i].label); });
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<VertexSet> enumerate_open_packings_upto(const Graph& g, std::size_t k) {
  check_limit(g.order(), {kOracleHardLimit}, "vertex");
  auto conflict = detail::shared_neighbor_masks(g);
  const unsigned n = static_cast<unsigned>(g.order());
  std::vector<VertexSet> out;
  VertexSet current;

  // Extends `current` with vertices >= start that conflict with no member.
  auto extend = [&](auto&& self, unsigned start, Mask blocked) -> void {
    out.push_back(current);
    if (current.size() == k) return;
    for (unsigned v = start; v < n; ++v) {
      if (blocked & bit(v)) continue;
      current.push_back(v);
      self(self, v + 1, blocked | conflict[v]);
      current.pop_back();
    }
  };
  extend(extend, 0, 0);

  std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::optional<VertexSet> min_tds_bounded(const Graph& g, std::size_t l) {
  check_limit(g.order(), {kOracleHardLimit}, "vertex");
  require_no_isolated(g);
  const auto nbr = detail::neighbor_masks(g);
  const unsigned n = static_cast<unsigned>(g.order());
  const Mask all = detail::low_bits(n);
  if (n == 0) return VertexSet{};

  // reach[i]: vertices with a neighbour among {i..n-1}.
  std::vector<Mask> reach(n + 1, 0);
  for (unsigned i = n; i-- > 0;) reach[i] = reach[i + 1] | nbr[i];

  Mask found = 0;
  auto scan = [&](auto&& self, unsigned start, std::size_t left, Mask chosen, Mask dominated) -> bool {
    if (left == 0) {
      if (dominated == all) {
        found = chosen;
        return true;
      }
      return false;
    }
    for (unsigned v = start; v + left <= n; ++v) {
      // Skip branches that can no longer dominate everything.
      if ((dominated | reach[v]) != all) return false;
      if (self(self, v + 1, left - 1, chosen | bit(v), dominated | nbr[v])) return true;
    }
    return false;
  };
  for (std::size_t size = 1; size <= std::min<std::size_t>(l, n); ++size) {
    if (scan(scan, 0, size, 0, 0)) return detail::to_set(found);
  }
  return std::nullopt;
}

ElementSet min_hitting_set_bf(const HittingSetInstance& inst, OracleLimits limits) {
  check_limit(inst.universe_size, limits, "universe element");
  check_limit(inst.sets.size(), {kOracleHardLimit}, "member set");
  for (const auto& W : inst.sets) {
    for (Element e : W) {
      if (e >= inst.universe_size) throw InvalidInput("element outside the universe");
    }
  }
  CoverProblem p;
  p.covers.assign(inst.universe_size, 0);
  p.coverable_by.assign(inst.sets.size(), 0);
  for (std::size_t j = 0; j < inst.sets.size(); ++j) {
    for (Element e : inst.sets[j]) {
      p.covers[e] |= bit(static_cast<unsigned>(j));
      p.coverable_by[j] |= bit(e);
    }
  }
  p.all_requirements = detail::low_bits(inst.sets.size());
  auto best = min_cover(p, inst.universe_size);
  if (!best) throw InvalidInput("an empty member set cannot be hit");
  ElementSet out;
  for_each_bit(*best, [&](unsigned e) { out.push_back(e); });
  return out;
}

std::vector<TupleIndex> max_rdm_bf(const RdmInstance& inst, OracleLimits limits) {
  inst.validate();
  check_limit(inst.tuples.size(), limits, "tuple");
  const std::size_t m = inst.tuples.size();
  std::vector<Mask> conflict(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (std::size_t c = 0; c < inst.r; ++c) {
        if (inst.tuples[i][c] == inst.tuples[j][c]) {
          conflict[i] |= bit(static_cast<unsigned>(j));
          break;
        }
      }
    }
  }
  Mask best = IndependentSearch(conflict).maximum(detail::low_bits(m));
  std::vector<TupleIndex> out;
  for_each_bit(best, [&](unsigned t) { out.push_back(t); });
  return out;
}

}  // namespace openpack
