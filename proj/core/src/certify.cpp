#include "openpack/certify.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "openpack/errors.hpp"

namespace openpack {
namespace {

template <typename T>
void reject_duplicates(std::span<const T> items, std::size_t bound, const char* what) {
  std::vector<bool> seen(bound, false);
  for (T x : items) {
    if (x >= bound) {
      throw InvalidInput(std::string(what) + " " + std::to_string(x) + " out of range");
    }
    if (seen[x]) {
      throw InvalidInput(std::string("duplicate ") + what + " " + std::to_string(x));
    }
    seen[x] = true;
  }
}

constexpr Vertex kNoOwner = static_cast<Vertex>(-1);

}  // namespace

std::string describe(const Witness& w) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CommonNeighborWitness>) {
          os << "vertices " << v.first << " and " << v.second << " share neighbour " << v.shared;
        } else if constexpr (std::is_same_v<T, UndominatedWitness>) {
          os << "vertex " << v.vertex << " has no neighbour in the set";
        } else if constexpr (std::is_same_v<T, AdjacentPairWitness>) {
          os << "vertices " << v.first << " and " << v.second << " are adjacent";
        } else if constexpr (std::is_same_v<T, SharedEndpointWitness>) {
          os << "edges " << v.first_label << " and " << v.second_label << " meet at vertex "
             << v.endpoint;
        } else if constexpr (std::is_same_v<T, UnhitSetWitness>) {
          os << "set " << v.set_index << " is not hit";
        } else if constexpr (std::is_same_v<T, CoordinateClashWitness>) {
          os << "tuples " << v.first << " and " << v.second << " agree in coordinate "
             << v.coordinate;
        } else {
          os << "expected " << v.expected << " members, got " << v.actual;
        }
      },
      w);
  return os.str();
}

CertifyResult is_open_packing_fast(const Graph& g, std::span<const Vertex> S,
                                   OpenPackingCounters* counters) {
  reject_duplicates(S, g.order(), "vertex");
  OpenPackingCounters local;
  OpenPackingCounters& c = counters ? *counters : local;
  c = {};

  // owner[v] is the member of S whose neighbourhood marked v.
  std::vector<Vertex> owner(g.order(), kNoOwner);
  for (Vertex u : S) {
    ++c.vertex_visits;
    for (Vertex v : g.neighbors(u)) {
      ++c.edge_visits;
      ++c.vertex_visits;
      if (owner[v] != kNoOwner) {
        return CertifyResult::refuted(CommonNeighborWitness{owner[v], u, v});
      }
      owner[v] = u;
    }
  }
  return CertifyResult::ok();
}

CertifyResult is_open_packing_naive(const Graph& g, std::span<const Vertex> S) {
  reject_duplicates(S, g.order(), "vertex");
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      VertexSet shared = common_neighbors(g, S[i], S[j]);
      if (!shared.empty()) {
        return CertifyResult::refuted(CommonNeighborWitness{S[i], S[j], shared.front()});
      }
    }
  }
  return CertifyResult::ok();
}

CertifyResult is_total_dominating(const Graph& g, std::span<const Vertex> D) {
  reject_duplicates(D, g.order(), "vertex");
  std::vector<bool> dominated(g.order(), false);
  for (Vertex d : D) {
    for (Vertex v : g.neighbors(d)) dominated[v] = true;
  }
  auto it = std::find(dominated.begin(), dominated.end(), false);
  if (it != dominated.end()) {
    return CertifyResult::refuted(
        UndominatedWitness{static_cast<Vertex>(it - dominated.begin())});
  }
  return CertifyResult::ok();
}

CertifyResult is_independent_set(const Graph& g, std::span<const Vertex> S) {
  reject_duplicates(S, g.order(), "vertex");
  std::vector<bool> in_set(g.order(), false);
  for (Vertex s : S) in_set[s] = true;
  for (Vertex s : S) {
    for (Vertex v : g.neighbors(s)) {
      if (in_set[v]) return CertifyResult::refuted(AdjacentPairWitness{std::min(s, v), std::max(s, v)});
    }
  }
  return CertifyResult::ok();
}

CertifyResult is_matching(const Multigraph& mg, std::span<const std::uint32_t> F) {
  std::unordered_set<std::uint32_t> seen;
  for (auto label : F) {
    if (!mg.find(label)) throw InvalidInput("unknown edge label " + std::to_string(label));
    if (!seen.insert(label).second) {
      throw InvalidInput("duplicate edge label " + std::to_string(label));
    }
  }
  constexpr std::uint32_t kFree = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> used_by(mg.order(), kFree);
  std::vector<bool> used(mg.order(), false);
  for (auto label : F) {
    const MultiEdge& e = mg.edge(label);
    for (Vertex x : {e.u, e.v}) {
      if (used[x]) return CertifyResult::refuted(SharedEndpointWitness{used_by[x], label, x});
    }
    used[e.u] = used[e.v] = true;
    used_by[e.u] = used_by[e.v] = label;
  }
  return CertifyResult::ok();
}

CertifyResult is_hitting_set(const HittingSetInstance& inst, std::span<const Element> X) {
  reject_duplicates(X, inst.universe_size, "element");
  std::vector<bool> chosen(inst.universe_size, false);
  for (Element x : X) chosen[x] = true;
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    const auto& W = inst.sets[i];
    bool hit = std::any_of(W.begin(), W.end(), [&](Element e) { return chosen[e]; });
    if (!hit) return CertifyResult::refuted(UnhitSetWitness{i});
  }
  return CertifyResult::ok();
}

CertifyResult is_coordinate_disjoint(const RdmInstance& inst, std::span<const TupleIndex> L) {
  reject_duplicates(L, inst.tuples.size(), "tuple index");
  for (std::size_t coord = 0; coord < inst.r; ++coord) {
    std::vector<TupleIndex> holder(inst.q, static_cast<TupleIndex>(-1));
    for (TupleIndex t : L) {
      auto value = inst.tuples[t].at(coord);
      if (holder.at(value) != static_cast<TupleIndex>(-1)) {
        return CertifyResult::refuted(CoordinateClashWitness{holder[value], t, coord});
      }
      holder[value] = t;
    }
  }
  return CertifyResult::ok();
}

CertifyResult is_r_dimensional_matching(const RdmInstance& inst,
                                        std::span<const TupleIndex> L) {
  auto disjoint = is_coordinate_disjoint(inst, L);
  if (!disjoint) return disjoint;
  if (L.size() != inst.q) return CertifyResult::refuted(CardinalityWitness{inst.q, L.size()});
  return CertifyResult::ok();
}

}  // namespace openpack
