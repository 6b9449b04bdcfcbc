#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "naive.hpp"
#include "openpack/certify.hpp"
#include "openpack/errors.hpp"
#include "openpack/generators.hpp"
#include "openpack/oracle.hpp"
#include "openpack/recognize.hpp"

namespace openpack {
namespace {

namespace naive = testing::naive;

// Members of a maximum open packing induce disjoint K_1s and K_2s.
void expect_k1_k2_union(const Graph& g, const VertexSet& S) {
  auto sub = induced_subgraph(g, S).graph;
  for (Vertex v = 0; v < sub.order(); ++v) EXPECT_LE(sub.degree(v), 1u);
}

TEST(OracleOpenPacking, SmallExamples) {
  EXPECT_EQ(max_open_packing_bf(gen_cycle(4)), (VertexSet{0, 1}));
  EXPECT_EQ(max_open_packing_bf(gen_cycle(6)).size(), 2u);
  EXPECT_EQ(max_open_packing_bf(gen_Gr(3)).size(), 7u);
  EXPECT_TRUE(max_open_packing_bf(Graph()).empty());
}

TEST(OracleOpenPacking, LexicographicallyLeastOptimum) {
  // P_4 = 0-1-2-3: maximum packings of size 2 are {0,1}, {0,3}, {1,2}, {2,3}.
  EXPECT_EQ(max_open_packing_bf(gen_path(4)), (VertexSet{0, 1}));
  auto all = all_maximum_open_packings_bf(gen_path(4));
  EXPECT_EQ(all, (std::vector<VertexSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(OracleOpenPacking, MatchesNaiveOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = gen_random_graph(4 + seed % 9, 0.1 + 0.004 * static_cast<double>(seed), seed);
    auto S = max_open_packing_bf(g);
    ASSERT_TRUE(is_open_packing_fast(g, S));
    EXPECT_EQ(static_cast<int>(S.size()), naive::rho(g));
    expect_k1_k2_union(g, S);
  }
}

TEST(OracleOpenPacking, AdditiveOverComponents) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = gen_random_graph(14, 0.12, seed);
    std::size_t sum = 0;
    for (const auto& comp : components(g)) {
      sum += max_open_packing_bf(induced_subgraph(g, comp).graph).size();
    }
    EXPECT_EQ(max_open_packing_bf(g).size(), sum);
  }
}

TEST(OracleOpenPacking, RestrictedToAllowedVertices) {
  Graph g = testing::sample_split_graph();
  VertexSet I = testing::sample_split_partition().independent;
  auto S = max_open_packing_within_bf(g, I);
  EXPECT_EQ(S.size(), 3u);
  for (Vertex v : S) EXPECT_TRUE(std::binary_search(I.begin(), I.end(), v));
}

TEST(OracleOpenPacking, AllMaximumAreValidAndComplete) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen_random_graph(8, 0.3, seed);
    auto all = all_maximum_open_packings_bf(g);
    int rho = naive::rho(g);
    std::size_t expected = 0;
    for (std::uint64_t m = 0; m < 256; ++m) {
      expected += naive::open_packing(g, m) && std::popcount(m) == rho;
    }
    EXPECT_EQ(all.size(), expected);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    for (const auto& S : all) EXPECT_EQ(static_cast<int>(S.size()), rho);
  }
}

TEST(OracleTotalDomination, Examples) {
  EXPECT_EQ(min_total_dominating_bf(gen_cycle(6)).size(), 4u);
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_EQ(min_total_dominating_bf(gen_complete(n)).size(), 2u);
  EXPECT_EQ(min_total_dominating_bf(gen_Hr(7)).size(), 10u);
  EXPECT_THROW(min_total_dominating_bf(build_graph(3, {{0, 1}})), UndefinedProblem);
}

TEST(OracleTotalDomination, LexicographicallyLeastOptimum) {
  // {0,1,2,3} dominates C_6: 4 and 5 see 3 and 0.
  EXPECT_EQ(min_total_dominating_bf(gen_cycle(6)), (VertexSet{0, 1, 2, 3}));
}

TEST(OracleTotalDomination, MatchesNaiveAndDuality) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = gen_random_graph(4 + seed % 9, 0.25 + 0.002 * static_cast<double>(seed), seed);
    if (find_isolated_vertex(g)) continue;
    auto D = min_total_dominating_bf(g);
    ASSERT_TRUE(is_total_dominating(g, D));
    EXPECT_EQ(static_cast<int>(D.size()), *naive::gamma_t(g));
    EXPECT_LE(max_open_packing_bf(g).size(), D.size());
  }
}

TEST(OracleIndependentSet, Examples) {
  EXPECT_EQ(max_independent_set_bf(gen_cycle(5)).size(), 2u);
  EXPECT_EQ(max_independent_set_bf(gen_complete(4)).size(), 1u);
  EXPECT_EQ(max_independent_set_bf(build_graph(3, {})).size(), 3u);
}

TEST(OracleIndependentSet, NeighborhoodGraphEquivalence) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = gen_random_graph(10, 0.3, seed);
    EXPECT_EQ(max_open_packing_bf(g).size(), max_independent_set_bf(neighborhood_graph(g)).size());
    EXPECT_EQ(static_cast<int>(max_independent_set_bf(g).size()), naive::alpha(g));
  }
}

TEST(OracleMatching, Examples) {
  Multigraph split_sample(6, {{0, 1, 4}, {0, 1, 5}, {1, 2, 6}, {2, 4, 7}, {3, 5, 8}});
  EXPECT_EQ(max_matching_bf(split_sample).size(), 3u);
  EXPECT_EQ(max_matching_bf(Multigraph(2, {{0, 1, 0}, {0, 1, 1}})).size(), 1u);
  EXPECT_TRUE(max_matching_bf(Multigraph(3, {})).empty());
}

TEST(OracleEnumeration, PackingsUpToK) {
  EXPECT_EQ(enumerate_open_packings_upto(gen_path(3), 1),
            (std::vector<VertexSet>{{}, {0}, {1}, {2}}));
  auto c4 = enumerate_open_packings_upto(gen_cycle(4), 2);
  EXPECT_EQ(c4.size(), 9u);
  for (const auto& S : c4) EXPECT_TRUE(is_open_packing_fast(gen_cycle(4), S));
  EXPECT_EQ(enumerate_open_packings_upto(gen_Gr(2), 0), (std::vector<VertexSet>{{}}));
}

TEST(OracleEnumeration, CountsMatchDefinition) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = gen_random_graph(9, 0.35, seed);
    for (std::size_t k = 0; k <= 3; ++k) {
      std::size_t expected = 0;
      for (std::uint64_t m = 0; m < 512; ++m) {
        expected += naive::open_packing(g, m) && std::popcount(m) <= static_cast<int>(k);
      }
      auto found = enumerate_open_packings_upto(g, k);
      EXPECT_EQ(found.size(), expected);
      for (std::size_t i = 1; i < found.size(); ++i) {
        EXPECT_TRUE(found[i - 1].size() < found[i].size() ||
                    (found[i - 1].size() == found[i].size() && found[i - 1] < found[i]));
      }
    }
  }
}

TEST(OracleBoundedTds, Examples) {
  auto c6 = min_tds_bounded(gen_cycle(6), 4);
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->size(), 4u);
  EXPECT_FALSE(min_tds_bounded(gen_cycle(6), 3));
  EXPECT_EQ(min_tds_bounded(gen_complete(2), 2), (VertexSet{0, 1}));
}

TEST(OracleBoundedTds, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = gen_random_graph(10, 0.35, seed);
    if (find_isolated_vertex(g)) continue;
    auto exact = min_total_dominating_bf(g);
    EXPECT_EQ(min_tds_bounded(g, exact.size()), exact);
    EXPECT_FALSE(min_tds_bounded(g, exact.size() - 1));
  }
}

TEST(OracleHittingSet, Examples) {
  auto hs_sample = testing::sample_hitting_set();
  auto X = min_hitting_set_bf(hs_sample);
  EXPECT_EQ(X.size(), 2u);
  EXPECT_TRUE(is_hitting_set(hs_sample, X));
  EXPECT_EQ(X.size(), static_cast<std::size_t>(testing::naive::min_hitting_set(hs_sample)));
  EXPECT_EQ(min_hitting_set_bf({3, 3, {{0, 1, 2}}}).size(), 1u);
  EXPECT_TRUE(min_hitting_set_bf({4, 2, {}}).empty());
}

TEST(OracleHittingSet, MatchesNaiveOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto inst = gen_random_hitting_set(7, 1 + seed % 8, 2 + seed % 2, seed);
    auto X = min_hitting_set_bf(inst);
    EXPECT_TRUE(is_hitting_set(inst, X));
    EXPECT_EQ(static_cast<int>(X.size()), naive::min_hitting_set(inst));
  }
}

TEST(OracleRdm, Examples) {
  auto rdm_sample = testing::sample_rdm();
  auto L = max_rdm_bf(rdm_sample);
  EXPECT_EQ(L.size(), 3u);
  EXPECT_TRUE(is_r_dimensional_matching(rdm_sample, L));
  EXPECT_EQ(max_rdm_bf({3, 1, {{0, 0, 0}}}).size(), 1u);
  EXPECT_EQ(max_rdm_bf({3, 2, {{0, 0, 1}, {0, 1, 0}}}).size(), 1u);
}

TEST(OracleRdm, MatchesNaiveOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::size_t q = 1 + seed % 3;
    auto inst = gen_random_rdm(q, 3, 1 + seed % (q == 1 ? 1 : q == 2 ? 8 : 12), seed);
    auto L = max_rdm_bf(inst);
    EXPECT_TRUE(is_coordinate_disjoint(inst, L));
    EXPECT_EQ(static_cast<int>(L.size()), naive::max_rdm(inst));
  }
}

TEST(OracleGuard, RefusesLargeInstancesByDefault) {
  Graph big = gen_path(27);
  EXPECT_THROW(max_open_packing_bf(big), SizeGuardExceeded);
  EXPECT_THROW(min_total_dominating_bf(big), SizeGuardExceeded);
  EXPECT_EQ(max_open_packing_bf(big, {40}).size(), 14u);
  EXPECT_THROW(max_open_packing_bf(big, {65}), InvalidInput);
}

TEST(OracleTriangles, PackingMeetsEachTriangleOnce) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen_random_graph(8, 0.5, seed);
    auto packings = enumerate_open_packings_upto(g, 8);
    for (auto [a, b] : g.edges()) {
      for (Vertex c : common_neighbors(g, a, b)) {
        for (const auto& S : packings) {
          int inside = 0;
          for (Vertex v : {a, b, c}) inside += std::binary_search(S.begin(), S.end(), v);
          EXPECT_LE(inside, 1);
        }
      }
    }
  }
}

}  // namespace
}  // namespace openpack
