#include <gtest/gtest.h>

#include "openpack/certify.hpp"
#include "openpack/errors.hpp"
#include "openpack/generators.hpp"
#include "openpack/oracle.hpp"
#include "openpack/recognize.hpp"

namespace openpack {
namespace {

TEST(SplitMix64, ReferenceStream) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, RangesAreRespected) {
  SplitMix64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(rng.uniform(7), 7u);
    auto b = rng.between(3, 5);
    EXPECT_GE(b, 3u);
    EXPECT_LE(b, 5u);
    double u = rng.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_THROW(rng.uniform(0), InvalidInput);
}

TEST(ExtremalFamilies, Gr) {
  Graph g3 = gen_Gr(3);
  EXPECT_EQ(g3.order(), 11u);
  EXPECT_EQ(g3.size(), 10u);
  EXPECT_EQ(g3.label(0), "x_1");
  EXPECT_EQ(g3.label(9), "u");
  EXPECT_EQ(g3.label(10), "v");
  EXPECT_EQ(g3.degree(9), 4u);
  EXPECT_EQ(gen_Gr(1).edges(), gen_path(5).edges());
  EXPECT_THROW(gen_Gr(0), InvalidInput);
  for (std::size_t r = 1; r <= 5; ++r) {
    EXPECT_TRUE(is_pt_union_sk1_free(gen_Gr(r), 4, r).free);
    EXPECT_FALSE(is_pt_union_sk1_free(gen_Gr(r), 4, r - 1).free);
  }
}

TEST(ExtremalFamilies, Hr) {
  Graph h7 = gen_Hr(7);
  EXPECT_EQ(h7.order(), 15u);
  EXPECT_EQ(h7.size(), 10u + 10u);
  EXPECT_EQ(gen_Hr(3).edges(), gen_path(3).edges());
  EXPECT_THROW(gen_Hr(2), InvalidInput);
  for (std::size_t r = 3; r <= 7; ++r) {
    Graph h = gen_Hr(r);
    EXPECT_TRUE(is_pt_union_sk1_free(h, 1, r - 1).free);
    VertexSet S;
    for (Vertex i = 0; i < r - 2; ++i) S.insert(S.end(), {3 * i, 3 * i + 1});
    EXPECT_TRUE(is_open_packing_fast(h, S).valid);
    EXPECT_TRUE(is_total_dominating(h, S).valid);
    EXPECT_EQ(max_open_packing_bf(h).size(), 2 * (r - 2));
  }
}

TEST(BasicFamilies, Shapes) {
  EXPECT_EQ(gen_cycle(6).size(), 6u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(gen_cycle(6).degree(v), 2u);
  EXPECT_THROW(gen_cycle(2), InvalidInput);
  EXPECT_EQ(gen_complete(1).order(), 1u);
  EXPECT_EQ(gen_complete(1).size(), 0u);
  EXPECT_EQ(gen_complete(5).size(), 10u);
  EXPECT_EQ(gen_path(4).edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(Blowup, Examples) {
  std::vector<std::size_t> ones(6, 1), twos(6, 2);
  EXPECT_EQ(blowup(gen_cycle(6), ones), gen_cycle(6));
  Graph b = blowup(gen_cycle(6), twos);
  EXPECT_EQ(b.order(), 12u);
  EXPECT_TRUE(is_pt_union_sk1_free(b, 4, 1).free);
  EXPECT_EQ(min_total_dominating_bf(b).size(), 4u);
  std::vector<std::size_t> k2{2, 3};
  EXPECT_EQ(blowup(gen_complete(2), k2), gen_complete(5));
  std::vector<std::size_t> zero{1, 0};
  EXPECT_THROW(blowup(gen_complete(2), zero), InvalidInput);
  std::vector<std::size_t> short_sizes{1};
  EXPECT_THROW(blowup(gen_complete(2), short_sizes), InvalidInput);
}

TEST(Blowup, LabelsCopies) {
  std::vector<std::size_t> sizes{1, 1, 1, 1, 2};
  Graph g = blowup(gen_Gr(1), sizes);
  EXPECT_EQ(g.label(0), "x_1");
  EXPECT_EQ(g.label(4), "v.1");
  EXPECT_EQ(g.label(5), "v.2");
  EXPECT_TRUE(g.adjacent(4, 5));
  EXPECT_TRUE(g.adjacent(3, 5));
}

TEST(RandomGraph, ExtremesAndPinnedSample) {
  EXPECT_EQ(gen_random_graph(5, 0.0, 3).size(), 0u);
  EXPECT_EQ(gen_random_graph(5, 1.0, 3), gen_complete(5));
  Graph pinned = gen_random_graph(8, 0.4, 42);
  EXPECT_EQ(pinned.size(), 13u);
  EXPECT_EQ(pinned.edges().front(), (Edge{0, 2}));
  EXPECT_EQ(pinned.edges().back(), (Edge{5, 6}));
  EXPECT_THROW(gen_random_graph(5, 1.5, 3), InvalidInput);
}

TEST(RandomGraph, SeedDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(gen_random_graph(12, 0.3, seed), gen_random_graph(12, 0.3, seed));
    auto a = gen_random_split(4, 5, 1, 2, seed);
    auto b = gen_random_split(4, 5, 1, 2, seed);
    EXPECT_EQ(a.first, b.first);
    EXPECT_EQ(gen_random_hitting_set(6, 4, 3, seed).sets, gen_random_hitting_set(6, 4, 3, seed).sets);
    EXPECT_EQ(gen_random_rdm(3, 4, 5, seed).tuples, gen_random_rdm(3, 4, 5, seed).tuples);
  }
  EXPECT_NE(gen_random_graph(12, 0.5, 1), gen_random_graph(12, 0.5, 2));
}

TEST(RandomSplit, Shapes) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto [g, part] = gen_random_split(4, 5, 1, 2, seed);
    EXPECT_TRUE(is_valid_split_partition(g, part));
    for (Vertex v : part.independent) {
      EXPECT_GE(g.degree(v), 1u);
      EXPECT_LE(g.degree(v), 2u);
    }
    auto [h, hp] = gen_random_split(3, 4, 1, 1, seed);
    EXPECT_TRUE(is_Ir_split(h, 1));
  }
  auto [k, kp] = gen_random_split(5, 0, 0, 0, 1);
  EXPECT_EQ(k, gen_complete(5));
  EXPECT_THROW(gen_random_split(3, 2, 1, 4, 0), InvalidInput);
  EXPECT_THROW(gen_random_split(3, 2, 2, 1, 0), InvalidInput);
}

TEST(RandomInstances, Shapes) {
  auto hs = gen_random_hitting_set(6, 4, 3, 9);
  EXPECT_NO_THROW(hs.validate());
  EXPECT_EQ(hs.sets.size(), 4u);
  auto rdm = gen_random_rdm(3, 4, 5, 9);
  EXPECT_NO_THROW(rdm.validate());
  EXPECT_EQ(rdm.tuples.size(), 5u);
  EXPECT_THROW(gen_random_hitting_set(3, 1, 4, 0), InvalidInput);
  EXPECT_THROW(gen_random_hitting_set(4, 7, 2, 0), InvalidInput);
  EXPECT_THROW(gen_random_rdm(2, 3, 9, 0), InvalidInput);
}

}  // namespace
}  // namespace openpack
