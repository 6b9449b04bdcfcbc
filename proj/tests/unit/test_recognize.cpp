#include <gtest/gtest.h>

#include <chrono>
#include <functional>
#include <map>

#include "fixtures.hpp"
#include "naive.hpp"
#include "openpack/certify.hpp"
#include "openpack/errors.hpp"
#include "openpack/generators.hpp"
#include "openpack/recognize.hpp"
#include "openpack/reductions.hpp"

namespace openpack {
namespace {

using testing::graph_from_code;
using testing::pair_slots;
using testing::subset_from_mask;

void expect_sound(const Graph& g, const Graph& pattern, const std::optional<PatternWitness>& w) {
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_induced_embedding(g, pattern, w->embedding));
}

TEST(SplitPartition, Examples) {
  auto hs_sample = construct3(testing::sample_hitting_set()).output_graph();
  auto part = split_partition(hs_sample);
  ASSERT_TRUE(part);
  EXPECT_EQ(part->clique, (VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(part->independent, (VertexSet{9, 10, 11, 12, 13}));

  EXPECT_FALSE(split_partition(gen_cycle(5)));
  EXPECT_EQ(split_partition(gen_complete(3)), (SplitPartition{{0, 1, 2}, {}}));
  EXPECT_EQ(split_partition(Graph()), (SplitPartition{{}, {}}));
}

TEST(SplitPartition, AgreesWithBruteForceOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_slots(n)); ++code) {
      Graph g = graph_from_code(n, code);
      std::vector<SplitPartition> expected;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        SplitPartition p{subset_from_mask(m), {}};
        for (Vertex v = 0; v < n; ++v) {
          if (!(m >> v & 1)) p.independent.push_back(v);
        }
        if (is_valid_split_partition(g, p)) expected.push_back(p);
      }
      auto canonical = split_partition(g);
      ASSERT_EQ(canonical.has_value(), !expected.empty()) << "n=" << n << " code=" << code;
      auto all = all_split_partitions(g);
      EXPECT_EQ(all.size(), expected.size());
      if (canonical) {
        EXPECT_TRUE(is_valid_split_partition(g, *canonical));
        EXPECT_EQ(all.front(), *canonical);
      }
      for (const auto& p : all) {
        EXPECT_TRUE(is_valid_split_partition(g, p));
        EXPECT_NE(std::find(expected.begin(), expected.end(), p), expected.end());
      }
    }
  }
}

TEST(SplitPartition, RejectsInvalidPartitions) {
  Graph p3 = gen_path(3);
  EXPECT_TRUE(is_valid_split_partition(p3, {{1}, {0, 2}}));
  EXPECT_FALSE(is_valid_split_partition(p3, {{0, 2}, {1}}));
  EXPECT_FALSE(is_valid_split_partition(p3, {{0, 1}, {1, 2}}));
  EXPECT_FALSE(is_valid_split_partition(p3, {{0}, {2}}));
}

TEST(FindInduced, Examples) {
  Graph p4 = gen_path(4);
  auto w = find_induced(gen_cycle(6), p4, "P_4");
  expect_sound(gen_cycle(6), p4, w);
  EXPECT_EQ(w->pattern, "P_4");

  EXPECT_FALSE(find_induced(gen_complete(4), path_union_isolated_pattern(0, 2)));
  EXPECT_FALSE(find_induced(gen_Gr(3), path_union_isolated_pattern(4, 3)));
  EXPECT_FALSE(find_induced(gen_path(2), gen_path(3)));
  EXPECT_THROW(find_induced(gen_path(20), gen_path(13)), InvalidInput);
}

TEST(FindInduced, SoundAndCompleteOnSmallGraphs) {
  const std::vector<std::pair<std::string, Graph>> patterns = {
      {"P_3", gen_path(3)}, {"K_3", gen_complete(3)}, {"2K_2", build_graph(4, {{0, 1}, {2, 3}})},
      {"K_{1,3}", star_pattern(3)}, {"P_2 ∪ K_1", path_union_isolated_pattern(2, 1)}};
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_slots(5)); ++code) {
    Graph g = graph_from_code(5, code);
    for (const auto& [name, pattern] : patterns) {
      auto w = find_induced(g, pattern, name);
      bool exists = false;
      // Brute force: every injective map from pattern vertices to host vertices.
      std::vector<Vertex> map(pattern.order());
      std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t used) {
        if (exists) return;
        if (i == pattern.order()) {
          exists = is_induced_embedding(g, pattern, map);
          return;
        }
        for (Vertex v = 0; v < g.order(); ++v) {
          if (used >> v & 1) continue;
          map[i] = v;
          rec(i + 1, used | std::uint64_t{1} << v);
        }
      };
      rec(0, 0);
      EXPECT_EQ(w.has_value(), exists) << name << " code=" << code;
      if (w) EXPECT_TRUE(is_induced_embedding(g, pattern, w->embedding));
    }
  }
}

TEST(StarFreeness, Examples) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph src = gen_random_graph(7, 0.4, seed);
    EXPECT_TRUE(is_K1r_free(construct1(src).output_graph(), 3).free);
    EXPECT_TRUE(is_K1r_free(construct2(src).output_graph(), 4).free);
  }
  EXPECT_TRUE(is_K1r_free(construct1(testing::c1_sample_source()).output_graph(), 3).free);
  EXPECT_TRUE(is_K1r_free(construct2(testing::c2_sample_source()).output_graph(), 4).free);

  auto star = is_K1r_free(star_pattern(3), 3);
  EXPECT_FALSE(star.free);
  ASSERT_TRUE(star.witness);
  EXPECT_EQ(star.witness->embedding, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_THROW(is_K1r_free(gen_path(3), 1), InvalidInput);
}

TEST(StarFreeness, SplitCliqueVerticesHaveFewIndependentNeighbours) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto [g, part] = gen_random_split(4 + seed % 4, 3 + seed % 5, 1, 3, seed);
    for (std::size_t r = 2; r <= 4; ++r) {
      auto result = is_K1r_free(g, r);
      if (result.witness) expect_sound(g, star_pattern(r), result.witness);
      if (!result.free) continue;
      for (Vertex c : part.clique) {
        std::size_t in_i = 0;
        for (Vertex w : g.neighbors(c)) {
          in_i += std::binary_search(part.independent.begin(), part.independent.end(), w);
        }
        EXPECT_LE(in_i, r - 1);
      }
    }
  }
}

TEST(IrSplit, Examples) {
  auto hs_sample = construct3(testing::sample_hitting_set()).output_graph();
  auto p6 = is_Ir_split(hs_sample, 3);
  ASSERT_TRUE(p6);
  EXPECT_TRUE(is_valid_split_partition(hs_sample, *p6));

  auto rdm_sample = construct4(testing::sample_rdm()).output_graph();
  auto p7 = is_Ir_split(rdm_sample, 4);
  ASSERT_TRUE(p7);
  for (Vertex v : p7->independent) EXPECT_EQ(rdm_sample.degree(v), 4u);

  EXPECT_FALSE(is_Ir_split(gen_cycle(4), 2));
  EXPECT_THROW(is_Ir_split(gen_path(2), 0), InvalidInput);
}

TEST(IrSplit, DegreeConditionOnTheIndependentSide) {
  // P_3 has I = {0, 2} of degree 1 and no partition with degree-2 I-vertices.
  EXPECT_TRUE(is_Ir_split(gen_path(3), 1));
  EXPECT_FALSE(is_Ir_split(gen_path(3), 2));
  // A complete graph qualifies for every r through an empty independent side.
  auto k4 = is_Ir_split(gen_complete(4), 2);
  ASSERT_TRUE(k4);
  EXPECT_TRUE(k4->independent.empty());
}

TEST(IrSplit, AgreesWithBruteForceOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_slots(n)); ++code) {
      Graph g = graph_from_code(n, code);
      for (std::size_t r = 1; r <= 3; ++r) {
        bool exists = false;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n) && !exists; ++m) {
          SplitPartition p{subset_from_mask(m), {}};
          for (Vertex v = 0; v < n; ++v) {
            if (!(m >> v & 1)) p.independent.push_back(v);
          }
          bool degrees = std::all_of(p.independent.begin(), p.independent.end(),
                                     [&](Vertex v) { return g.degree(v) == r; });
          exists = degrees && is_valid_split_partition(g, p);
        }
        auto found = is_Ir_split(g, r);
        ASSERT_EQ(found.has_value(), exists) << "n=" << n << " code=" << code << " r=" << r;
        if (found) {
          EXPECT_TRUE(is_valid_split_partition(g, *found));
          for (Vertex v : found->independent) EXPECT_EQ(g.degree(v), r);
        }
      }
    }
  }
}

TEST(PathUnionFreeness, Examples) {
  EXPECT_TRUE(is_pt_union_sk1_free(gen_cycle(6), 4, 1).free);
  EXPECT_TRUE(is_pt_union_sk1_free(gen_cycle(5), 3, 1).free);
  auto p6 = is_pt_union_sk1_free(gen_path(6), 4, 1);
  EXPECT_FALSE(p6.free);
  expect_sound(gen_path(6), path_union_isolated_pattern(4, 1), p6.witness);
  EXPECT_EQ(p6.witness->pattern, "P_4 ∪ K_1");
  EXPECT_TRUE(is_pt_union_sk1_free(gen_Gr(3), 4, 3).free);
  EXPECT_FALSE(is_pt_union_sk1_free(gen_Gr(3), 4, 2).free);
  EXPECT_THROW(is_pt_union_sk1_free(gen_path(3), 5, 0), InvalidInput);
  EXPECT_THROW(is_pt_union_sk1_free(gen_path(3), 0, 1), InvalidInput);
}

TEST(PathUnionFreeness, PatternShapes) {
  Graph p = path_union_isolated_pattern(3, 2);
  EXPECT_EQ(p.order(), 5u);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_TRUE(p.adjacent(0, 1));
  EXPECT_TRUE(p.adjacent(1, 2));
  EXPECT_EQ(p.degree(3) + p.degree(4), 0u);
  Graph s = star_pattern(4);
  EXPECT_EQ(s.degree(0), 4u);
  EXPECT_EQ(s.size(), 4u);
}

TEST(Dichotomy, Examples) {
  auto family = classify_H_dichotomy(path_union_isolated_pattern(4, 2));
  EXPECT_TRUE(family.tractable);
  EXPECT_FALSE(family.obstruction);

  auto c5 = classify_H_dichotomy(gen_cycle(5));
  EXPECT_FALSE(c5.tractable);
  ASSERT_TRUE(c5.obstruction);
  EXPECT_EQ(c5.obstruction->pattern, "C_5");

  Graph claw_plus = build_graph(5, {{0, 1}, {0, 2}, {0, 3}});
  auto claw = classify_H_dichotomy(claw_plus);
  ASSERT_TRUE(claw.obstruction);
  EXPECT_EQ(claw.obstruction->pattern, "K_{1,3}");
  expect_sound(claw_plus, star_pattern(3), claw.obstruction);

  EXPECT_THROW(classify_H_dichotomy(gen_path(3)), InvalidInput);
}

bool in_family(const Graph& h) {
  std::vector<Vertex> touched;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) > 0) touched.push_back(v);
  }
  if (touched.empty()) return true;
  if (touched.size() > 4) return false;
  Graph sub = induced_subgraph(h, touched).graph;
  // A path: connected, |E| = |V| - 1, max degree <= 2.
  if (!is_connected(sub) || sub.size() + 1 != sub.order()) return false;
  for (Vertex v = 0; v < sub.order(); ++v) {
    if (sub.degree(v) > 2) return false;
  }
  return true;
}

TEST(Dichotomy, ExhaustiveAndExclusiveUpToSevenVertices) {
  const std::map<std::string, Graph> obstructions = {
      {"K_3", gen_complete(3)}, {"2K_2", build_graph(4, {{0, 1}, {2, 3}})},
      {"C_4", gen_cycle(4)},    {"K_{1,3}", star_pattern(3)},
      {"C_5", gen_cycle(5)}};
  auto start = std::chrono::steady_clock::now();
  std::size_t tractable = 0;
  for (std::size_t p = 4; p <= 7; ++p) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_slots(p)); ++code) {
      Graph h = graph_from_code(p, code);
      auto result = classify_H_dichotomy(h);
      ASSERT_EQ(result.tractable, in_family(h)) << "p=" << p << " code=" << code;
      ASSERT_NE(result.tractable, result.obstruction.has_value());
      if (result.obstruction) {
        const Graph& pattern = obstructions.at(result.obstruction->pattern);
        ASSERT_TRUE(is_induced_embedding(h, pattern, result.obstruction->embedding));
      }
      tractable += result.tractable;
    }
  }
  // Labelled family members on p vertices: 1 + C(p,2) + 3 C(p,3) + 12 C(p,4).
  std::size_t expected = 0;
  for (std::size_t p = 4; p <= 7; ++p) {
    std::size_t c2 = p * (p - 1) / 2, c3 = c2 * (p - 2) / 3, c4 = c3 * (p - 3) / 4;
    expected += 1 + c2 + 3 * c3 + 12 * c4;
  }
  EXPECT_EQ(tractable, expected);
  auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  RecordProperty("seconds", std::to_string(seconds));
}

TEST(NeighborhoodGraph, Examples) {
  EXPECT_EQ(neighborhood_graph(gen_path(3)).edges(), (std::vector<Edge>{{0, 2}}));
  EXPECT_EQ(neighborhood_graph(gen_complete(3)), gen_complete(3));
  EXPECT_EQ(neighborhood_graph(build_graph(4, {{0, 1}, {2, 3}})).size(), 0u);
}

TEST(NeighborhoodGraph, PackingsAreIndependentSetsExhaustively) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_slots(n)); ++code) {
      Graph g = graph_from_code(n, code);
      Graph ng = neighborhood_graph(g);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        ASSERT_EQ(testing::naive::open_packing(g, m), testing::naive::independent(ng, m));
      }
    }
  }
}

}  // namespace
}  // namespace openpack
