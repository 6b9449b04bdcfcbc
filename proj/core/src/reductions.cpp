#include "openpack/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "openpack/certify.hpp"
#include "openpack/errors.hpp"

namespace openpack {
namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

void require_open_packing(const Graph& g, std::span<const Vertex> S) {
  auto verdict = is_open_packing_fast(g, S);
  if (!verdict) {
    throw PreconditionFailed("not an open packing: " + describe(*verdict.witness));
  }
}

// Internal consistency check on a mapper's output; a failure is a bug.
void ensure(bool condition, const char* what) {
  if (!condition) throw std::logic_error(what);
}

void require_construction(const ReductionInstance& inst, int which) {
  if (inst.construction != which) {
    throw InvalidInput("instance was built by construction " + std::to_string(inst.construction) +
                       ", expected " + std::to_string(which));
  }
}

// Shared Step 1 of constructions 1 and 2: source vertices, then one vertex
// per source edge joined to both endpoints.
struct Subdivision {
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::vector<Role> roles;
  std::vector<Edge> source_edges;
};

Subdivision subdivide(const Graph& g) {
  Subdivision s;
  const auto n = static_cast<Vertex>(g.order());
  s.source_edges = g.edges();
  for (Vertex u = 0; u < n; ++u) {
    s.labels.push_back("u_" + idx(u));
    s.roles.push_back({RoleKind::source_vertex, u, 0});
  }
  for (std::size_t i = 0; i < s.source_edges.size(); ++i) {
    auto [u, v] = s.source_edges[i];
    Vertex e = n + static_cast<Vertex>(i);
    s.labels.push_back("e_{" + idx(u) + "," + idx(v) + "}");
    s.roles.push_back({RoleKind::source_edge, u, v});
    s.edges.emplace_back(u, e);
    s.edges.emplace_back(v, e);
  }
  return s;
}

}  // namespace

std::string role_name(RoleKind kind) {
  switch (kind) {
    case RoleKind::source_vertex: return "source_vertex";
    case RoleKind::source_edge: return "source_edge";
    case RoleKind::pendant: return "pendant";
    case RoleKind::hub_x: return "hub_x";
    case RoleKind::hub_y: return "hub_y";
    case RoleKind::hub_z: return "hub_z";
    case RoleKind::element: return "element";
    case RoleKind::set_vertex: return "set_vertex";
    case RoleKind::selector_x: return "selector_x";
    case RoleKind::selector_y: return "selector_y";
    case RoleKind::coordinate: return "coordinate";
    case RoleKind::tuple: return "tuple";
  }
  return "unknown";
}

const Graph& ReductionInstance::output_graph() const {
  if (auto* g = std::get_if<Graph>(&graph)) return *g;
  throw InvalidInput("construction " + std::to_string(construction) + " produces a multigraph");
}

const Multigraph& ReductionInstance::output_multigraph() const {
  if (auto* g = std::get_if<Multigraph>(&graph)) return *g;
  throw InvalidInput("construction " + std::to_string(construction) + " produces a simple graph");
}

std::optional<Vertex> ReductionInstance::vertex_with_role(const Role& role) const {
  auto it = std::find(roles.begin(), roles.end(), role);
  if (it == roles.end()) return std::nullopt;
  return static_cast<Vertex>(it - roles.begin());
}

// --- Construction 1 ---------------------------------------------------------

ReductionInstance construct1(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  Subdivision s = subdivide(g);
  const auto m = static_cast<Vertex>(s.source_edges.size());

  // incident[u]: edge vertices at u.
  std::vector<std::vector<Vertex>> incident(n);
  for (Vertex i = 0; i < m; ++i) {
    incident[s.source_edges[i].first].push_back(n + i);
    incident[s.source_edges[i].second].push_back(n + i);
  }
  for (const auto& at : incident) {
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = i + 1; j < at.size(); ++j) s.edges.emplace_back(at[i], at[j]);
    }
  }
  Vertex next = n + m;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != 1) continue;
    s.labels.push_back("v_" + idx(u));
    s.roles.push_back({RoleKind::pendant, u, 0});
    s.edges.emplace_back(next, u);
    s.edges.emplace_back(next, incident[u].front());
    ++next;
  }

  ReductionInstance out;
  out.construction = 1;
  out.graph = Graph(next, s.edges, std::move(s.labels));
  out.roles = std::move(s.roles);
  out.source = g;
  return out;
}

NormalizeTrace normalize_op_c1(const ReductionInstance& inst, std::span<const Vertex> S) {
  require_construction(inst, 1);
  const Graph& gp = inst.output_graph();
  require_open_packing(gp, S);

  NormalizeTrace trace;
  VertexSet current = make_vertex_set(S, gp.order());

  auto swap_in = [&](Vertex from, Vertex to) {
    ensure(std::find(current.begin(), current.end(), to) == current.end(),
           "replacement vertex already in the packing");
    std::replace(current.begin(), current.end(), from, to);
    std::sort(current.begin(), current.end());
    ensure(static_cast<bool>(is_open_packing_fast(gp, current)),
           "swap produced a set that is not an open packing");
    trace.steps.push_back(current);
  };

  // Pendant completions first, then edge vertices.
  for (Vertex v : VertexSet(current)) {
    const Role& role = inst.roles[v];
    if (role.kind == RoleKind::pendant) swap_in(v, role.a);
  }
  for (Vertex v : VertexSet(current)) {
    const Role& role = inst.roles[v];
    if (role.kind == RoleKind::source_edge) swap_in(v, std::min(role.a, role.b));
  }

  for (Vertex v : current) {
    ensure(inst.roles[v].kind == RoleKind::source_vertex, "normalised set left the source side");
    trace.result.push_back(inst.roles[v].a);
  }
  ensure(trace.result.size() == S.size(), "normalisation changed the size");
  ensure(static_cast<bool>(is_independent_set(std::get<Graph>(inst.source), trace.result)),
         "normalised set is not independent in the source");
  return trace;
}

// --- Construction 2 ---------------------------------------------------------

ReductionInstance construct2(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  Subdivision s = subdivide(g);
  const auto m = static_cast<Vertex>(s.source_edges.size());
  const Vertex x = n + m;
  const Vertex y = x + 1;
  const Vertex z = x + 2;
  s.labels.insert(s.labels.end(), {"x", "y", "z"});
  s.roles.push_back({RoleKind::hub_x, 0, 0});
  s.roles.push_back({RoleKind::hub_y, 0, 0});
  s.roles.push_back({RoleKind::hub_z, 0, 0});
  s.edges.emplace_back(x, y);
  s.edges.emplace_back(x, z);

  SplitPartition part;
  for (Vertex e = n; e < n + m; ++e) part.clique.push_back(e);
  part.clique.insert(part.clique.end(), {y, z});
  for (std::size_t i = 0; i < part.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < part.clique.size(); ++j) {
      s.edges.emplace_back(part.clique[i], part.clique[j]);
    }
  }
  for (Vertex u = 0; u < n; ++u) part.independent.push_back(u);
  part.independent.push_back(x);

  ReductionInstance out;
  out.construction = 2;
  out.graph = Graph(z + 1, s.edges, std::move(s.labels));
  out.roles = std::move(s.roles);
  out.partition = std::move(part);
  out.source = g;
  return out;
}

VertexSet normalize_op_c2(const ReductionInstance& inst, std::span<const Vertex> S) {
  require_construction(inst, 2);
  require_open_packing(inst.output_graph(), S);
  VertexSet out;
  for (Vertex v : S) {
    if (inst.roles[v].kind == RoleKind::source_vertex) out.push_back(inst.roles[v].a);
  }
  std::sort(out.begin(), out.end());
  ensure(out.size() + 1 >= S.size(), "more than one packing member outside the source side");
  ensure(static_cast<bool>(is_independent_set(std::get<Graph>(inst.source), out)),
         "source-side set is not independent");
  return out;
}

// --- Construction 3 ---------------------------------------------------------

ReductionInstance construct3(const HittingSetInstance& source) {
  HittingSetInstance inst = source;
  inst.validate();
  if (inst.r < 2) throw PreconditionFailed("construction 3 needs r >= 2");

  const auto u = static_cast<Vertex>(inst.universe_size);
  const auto r = static_cast<Vertex>(inst.r);
  const auto w = static_cast<Vertex>(inst.sets.size());
  const Vertex y = u + r + w;

  std::vector<std::string> labels;
  std::vector<Role> roles;
  std::vector<Edge> edges;
  SplitPartition part;
  for (Vertex e = 0; e < u; ++e) {
    labels.push_back("u_" + idx(e));
    roles.push_back({RoleKind::element, e, 0});
  }
  for (Vertex i = 0; i < r; ++i) {
    labels.push_back("x_" + idx(i));
    roles.push_back({RoleKind::selector_x, i, 0});
    edges.emplace_back(u + i, y);
  }
  for (Vertex a = 0; a < u + r; ++a) {
    part.clique.push_back(a);
    for (Vertex b = a + 1; b < u + r; ++b) edges.emplace_back(a, b);
  }
  for (Vertex j = 0; j < w; ++j) {
    Vertex zw = u + r + j;
    labels.push_back("z_{W" + idx(j) + "}");
    roles.push_back({RoleKind::set_vertex, j, 0});
    part.independent.push_back(zw);
    for (Element e : inst.sets[j]) edges.emplace_back(e, zw);
  }
  labels.push_back("y");
  roles.push_back({RoleKind::selector_y, 0, 0});
  part.independent.push_back(y);

  ReductionInstance out;
  out.construction = 3;
  out.graph = Graph(y + 1, edges, std::move(labels));
  out.roles = std::move(roles);
  out.partition = std::move(part);
  out.source = std::move(inst);
  return out;
}

ElementSet map_tds_c3(const ReductionInstance& inst, std::span<const Vertex> D) {
  require_construction(inst, 3);
  auto verdict = is_total_dominating(inst.output_graph(), D);
  if (!verdict) {
    throw PreconditionFailed("not a total dominating set: " + describe(*verdict.witness));
  }
  ElementSet X;
  for (Vertex v : D) {
    if (inst.roles[v].kind == RoleKind::element) X.push_back(inst.roles[v].a);
  }
  std::sort(X.begin(), X.end());
  const auto& source = std::get<HittingSetInstance>(inst.source);
  ensure(static_cast<bool>(is_hitting_set(source, X)), "D ∩ U does not hit every set");
  ensure(X.size() < D.size(), "D ∩ U is not smaller than D");
  return X;
}

VertexSet map_hs_c3(const ReductionInstance& inst, std::span<const Element> X) {
  require_construction(inst, 3);
  const auto& source = std::get<HittingSetInstance>(inst.source);
  auto verdict = is_hitting_set(source, X);
  if (!verdict) throw PreconditionFailed("not a hitting set: " + describe(*verdict.witness));
  VertexSet D(X.begin(), X.end());
  D.push_back(*inst.vertex_with_role({RoleKind::selector_x, 0, 0}));
  std::sort(D.begin(), D.end());
  ensure(static_cast<bool>(is_total_dominating(inst.output_graph(), D)),
         "X ∪ {x_1} is not total dominating");
  return D;
}

// --- Construction 4 ---------------------------------------------------------

ReductionInstance construct4(const RdmInstance& inst) {
  inst.validate();
  if (inst.r < 3) throw PreconditionFailed("construction 4 needs r >= 3");
  const auto r = static_cast<Vertex>(inst.r);
  const auto q = static_cast<Vertex>(inst.q);
  const Vertex clique_size = r * q;

  std::vector<std::string> labels;
  std::vector<Role> roles;
  std::vector<Edge> edges;
  SplitPartition part;
  for (Vertex i = 0; i < r; ++i) {
    for (Vertex x = 0; x < q; ++x) {
      labels.push_back("z_(" + idx(x) + "," + idx(i) + ")");
      roles.push_back({RoleKind::coordinate, x, i});
    }
  }
  for (Vertex a = 0; a < clique_size; ++a) {
    part.clique.push_back(a);
    for (Vertex b = a + 1; b < clique_size; ++b) edges.emplace_back(a, b);
  }
  for (Vertex t = 0; t < inst.tuples.size(); ++t) {
    Vertex yw = clique_size + t;
    labels.push_back("y_w" + idx(t));
    roles.push_back({RoleKind::tuple, t, 0});
    part.independent.push_back(yw);
    for (Vertex i = 0; i < r; ++i) edges.emplace_back(i * q + inst.tuples[t][i], yw);
  }

  ReductionInstance out;
  out.construction = 4;
  out.graph = Graph(clique_size + inst.tuples.size(), edges, std::move(labels));
  out.roles = std::move(roles);
  out.partition = std::move(part);
  out.source = inst;
  return out;
}

std::vector<TupleIndex> map_op_c4(const ReductionInstance& inst, std::span<const Vertex> S) {
  require_construction(inst, 4);
  require_open_packing(inst.output_graph(), S);
  const auto& source = std::get<RdmInstance>(inst.source);
  if (S.size() != source.q) {
    throw PreconditionFailed("open packing has " + std::to_string(S.size()) +
                             " members, expected q = " + std::to_string(source.q));
  }
  bool touches_clique = std::any_of(S.begin(), S.end(), [&](Vertex v) {
    return inst.roles[v].kind == RoleKind::coordinate;
  });
  std::vector<TupleIndex> L;
  if (touches_clique) {
    // A clique member forces |S| = 1, hence q = 1 and M is the single
    // all-zero tuple.
    ensure(S.size() == 1 && source.tuples.size() == 1, "clique member in a packing of size > 1");
    L.push_back(0);
  } else {
    for (Vertex v : S) L.push_back(inst.roles[v].a);
    std::sort(L.begin(), L.end());
  }
  ensure(static_cast<bool>(is_r_dimensional_matching(source, L)),
         "mapped tuples do not form a matching");
  return L;
}

// --- Construction 5 ---------------------------------------------------------

ReductionInstance construct5(const Graph& g, const SplitPartition& part) {
  if (!is_valid_split_partition(g, part)) throw PreconditionFailed("invalid split partition");
  for (Vertex v : part.independent) {
    if (g.degree(v) < 1 || g.degree(v) > 2) {
      throw PreconditionFailed("independent vertex " + std::to_string(v) + " has degree " +
                               std::to_string(g.degree(v)) + ", expected 1 or 2");
    }
  }

  std::vector<Vertex> index(g.order(), 0);
  std::vector<std::string> labels;
  std::vector<Role> roles;
  Vertex next = 0;
  auto add = [&](Vertex v) {
    index[v] = next++;
    labels.push_back(g.label(v));
    roles.push_back({RoleKind::source_vertex, v, 0});
  };
  for (Vertex c : part.clique) add(c);
  for (Vertex v : part.independent) {
    if (g.degree(v) == 1) add(v);
  }

  std::vector<MultiEdge> edges;
  for (Vertex v : part.independent) {
    auto nbrs = g.neighbors(v);
    Vertex a = index[nbrs[0]];
    Vertex b = nbrs.size() == 2 ? index[nbrs[1]] : index[v];
    edges.push_back({a, b, v});
  }

  ReductionInstance out;
  out.construction = 5;
  out.graph = Multigraph(next, std::move(edges), std::move(labels));
  out.roles = std::move(roles);
  out.source = g;
  out.source_partition = part;
  return out;
}

VertexSet map_c5_matching_to_packing(const ReductionInstance& inst,
                                     std::span<const std::uint32_t> F) {
  require_construction(inst, 5);
  auto verdict = is_matching(inst.output_multigraph(), F);
  if (!verdict) throw PreconditionFailed("not a matching: " + describe(*verdict.witness));
  VertexSet S(F.begin(), F.end());
  std::sort(S.begin(), S.end());
  ensure(static_cast<bool>(is_open_packing_fast(std::get<Graph>(inst.source), S)),
         "S_F is not an open packing");
  return S;
}

std::vector<std::uint32_t> map_c5_packing_to_matching(const ReductionInstance& inst,
                                                      std::span<const Vertex> S) {
  require_construction(inst, 5);
  const Graph& g = std::get<Graph>(inst.source);
  require_open_packing(g, S);
  const auto& I = inst.source_partition->independent;
  for (Vertex v : S) {
    if (!std::binary_search(I.begin(), I.end(), v)) {
      throw PreconditionFailed("vertex " + std::to_string(v) + " is not on the independent side");
    }
  }
  std::vector<std::uint32_t> F(S.begin(), S.end());
  std::sort(F.begin(), F.end());
  ensure(static_cast<bool>(is_matching(inst.output_multigraph(), F)), "F_S is not a matching");
  return F;
}

}  // namespace openpack
