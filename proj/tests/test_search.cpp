#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "snc/exhaustive.hpp"
#include "snc/finders.hpp"
#include "snc/neighborhoods.hpp"
#include "snc/random_models.hpp"

namespace snc {
namespace {

// ---------------------------------------------------------------- Gray walker

TEST(GrayWalker, IncrementalDegreesMatchRecomputation) {
  auto k4 = std::make_shared<const Graph>(Graph::complete(4));
  GrayOrientationWalker walker(*k4);
  const std::size_t m = walker.edge_count();
  for (std::uint64_t j = 1; j < (std::uint64_t{1} << m); ++j) {
    walker.flip(static_cast<std::size_t>(std::countr_zero(j)));
    const auto d = walker.to_orientation(k4);
    for (Vertex u = 0; u < 4; ++u) {
      EXPECT_EQ(walker.out_degree(u), d.out_degree(u));
      EXPECT_EQ(static_cast<std::size_t>(std::popcount(walker.out_mask(u))), d.out_degree(u));
    }
    const auto first = walker.first_seymour_vertex();
    ASSERT_TRUE(first);
    EXPECT_TRUE(oracle::seymour_by_bfs(d, *first));
    for (Vertex u = 0; u < *first; ++u) EXPECT_FALSE(oracle::seymour_by_bfs(d, u));
  }
}

TEST(GrayWalker, SetDirectionsMatchesBitConvention) {
  auto g = std::make_shared<const Graph>(Graph::path(3));
  GrayOrientationWalker walker(*g);
  walker.set_directions(0b10);  // edge (0,1) low->high, edge (1,2) high->low
  EXPECT_EQ(walker.to_orientation(g).arcs(), (std::vector<Edge>{{0, 1}, {2, 1}}));
  EXPECT_EQ(walker.directions(), 0b10u);
}

TEST(GrayWalker, RejectsLargeGraphs) {
  EXPECT_THROW(GrayOrientationWalker(Graph(65)), std::invalid_argument);
  EXPECT_THROW(GrayOrientationWalker(Graph::complete(13)), std::invalid_argument);  // 78 edges
}

// ---------------------------------------------------------------- brute force

TEST(BruteForce, CountsEveryOrientation) {
  const auto k4 = brute_force_membership_in_S(Graph::complete(4));
  EXPECT_TRUE(k4.all_have_seymour);
  EXPECT_EQ(k4.orientations_checked, 64u);
  EXPECT_FALSE(k4.counterexample);
  const auto c5 = brute_force_membership_in_S(Graph::cycle(5));
  EXPECT_TRUE(c5.all_have_seymour);
  EXPECT_EQ(c5.orientations_checked, 32u);
  EXPECT_EQ(brute_force_membership_in_S(Graph(3)).orientations_checked, 1u);
}

TEST(BruteForce, EdgeBudgetEnforced) {
  EXPECT_THROW(brute_force_membership_in_S(Graph::complete(9)), std::invalid_argument);  // 36 edges
}

TEST(BruteForce, IsolatedVerticesBeyondWordSize) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  const auto r = brute_force_membership_in_S(Graph(100, edges));
  EXPECT_TRUE(r.all_have_seymour);
  EXPECT_EQ(r.orientations_checked, 8u);
}

TEST(BruteForce, ShardsPartitionTheSweep) {
  const Graph g = Graph::complete(5);
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s < 8; ++s) {
    const auto r = brute_force_shard(g, 3, s);
    EXPECT_TRUE(r.all_have_seymour);
    total += r.orientations_checked;
  }
  EXPECT_EQ(total, 1024u);
}

TEST(BruteForce, ParallelMatchesSerial) {
  const Graph g = Graph::wheel(6);
  const auto serial = brute_force_membership_in_S(g, 1);
  const auto parallel = brute_force_membership_in_S(g, 4);
  EXPECT_EQ(serial.all_have_seymour, parallel.all_have_seymour);
  EXPECT_EQ(serial.orientations_checked, parallel.orientations_checked);
  EXPECT_EQ(serial.orientations_checked, std::uint64_t{1} << 12);
}

TEST(Tournaments, SmallOrders) {
  EXPECT_EQ(sweep_tournaments(3).orientations_checked, 8u);
  const auto five = sweep_tournaments(5, 2);
  EXPECT_TRUE(five.all_have_seymour);
  EXPECT_EQ(five.orientations_checked, 1024u);
  EXPECT_THROW(sweep_tournaments(9), std::invalid_argument);
}

TEST(LabelledGraphs, EveryGraphOnFiveVertices) {
  const auto r = sweep_labelled_graphs(5, 2);
  EXPECT_EQ(r.graphs, 1024u);
  EXPECT_EQ(r.graphs_in_class, 1024u);
  EXPECT_FALSE(r.counterexample);
  // Sum over masks of 2^popcount(mask) = 3^10.
  EXPECT_EQ(r.orientations_checked, 59049u);
  EXPECT_THROW(sweep_labelled_graphs(7), std::invalid_argument);
}

TEST(LabelledGraphs, MaskConventionMatchesOracle) {
  for (std::uint64_t mask = 0; mask < 1024; ++mask)
    ASSERT_EQ(labelled_graph(5, mask), oracle::graph_from_mask(5, mask));
}

// ---------------------------------------------------------------- finders

TEST(FinderTypical, SparseCycleKeepsEveryVertex) {
  const auto d = Orientation::directed_cycle(100);
  const auto t = finder_typical(d, 0.02, 0.2);
  EXPECT_EQ(t.scalars.at("threshold"), 1.0);
  EXPECT_TRUE(t.sets.at("S").empty());
  EXPECT_EQ(t.sets.at("T").size(), 100u);
  ASSERT_TRUE(t.verdict);
  EXPECT_TRUE(*t.verdict);
  EXPECT_EQ(t.w, 0u);
}

TEST(FinderTypical, VerdictReflectsTheChosenVertexOnly) {
  // Out-star: the centre is the only vertex above the threshold and fails.
  const Orientation d(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  const auto t = finder_typical(d, 0.5, 0.2);
  EXPECT_EQ(t.w, 0u);
  ASSERT_TRUE(t.verdict);
  EXPECT_FALSE(*t.verdict);
  EXPECT_TRUE(find_seymour_vertex(d).has_value());
}

TEST(FinderTypical, EmptyTIsRegimeFailure) {
  const auto t = finder_typical(Orientation(std::make_shared<const Graph>(Graph(10))), 0.5, 0.1);
  EXPECT_TRUE(t.regime_failure);
  EXPECT_FALSE(t.verdict);
  EXPECT_THROW(finder_typical(Orientation::directed_cycle(5), 0.5, 0.25), std::invalid_argument);
  EXPECT_THROW(finder_typical(Orientation::directed_cycle(5), 1.0, 0.1), std::invalid_argument);
}

TEST(FinderTypical, TraceSetsSatisfyTheirDefinitions) {
  for (int s = 0; s < 20; ++s) {
    auto g = std::make_shared<const Graph>(sample_gnp(GnpParams(80, 0.15), Seed(s)));
    const auto d = sample_uniform_orientation(g, Seed(s + 1000));
    const auto t = finder_typical(d, 0.15, 0.05);
    ASSERT_FALSE(t.regime_failure);
    const auto threshold = static_cast<std::size_t>(t.scalars.at("threshold"));
    EXPECT_EQ(threshold, static_cast<std::size_t>(std::ceil(0.95 * 80 * 0.15 / 2)));
    const auto& sset = t.sets.at("S");
    const auto& tset = t.sets.at("T");
    for (Vertex v = 0; v < 80; ++v) {
      EXPECT_EQ(sset.contains(v), d.out_degree(v) < threshold);
      EXPECT_NE(sset.contains(v), tset.contains(v));
    }
    const Vertex w = *t.w;
    EXPECT_TRUE(tset.contains(w));
    EXPECT_EQ(t.sets.at("X"), first_neighborhood(d, w));
    EXPECT_EQ(t.sets.at("Y"), second_neighborhood(d, w));
    EXPECT_EQ(t.sets.at("N"), first_neighborhood(d, w) & tset);
    EXPECT_EQ(*t.verdict, is_seymour_vertex(d, w));
    EXPECT_TRUE(t.regime.at("averaging_bound"));
    tset.for_each([&](Vertex v) {
      EXPECT_LE((first_neighborhood(d, v) & tset).size(), t.scalars.at("deg_T(w)"));
    });
  }
}

TEST(FinderMinOutdegree, PicksLowestIndexMinimum) {
  for (int s = 0; s < 20; ++s) {
    auto g = std::make_shared<const Graph>(sample_gnp(GnpParams(40, 0.3), Seed(s)));
    const auto d = sample_uniform_orientation(g, Seed(s + 50));
    const auto t = finder_min_outdegree(d);
    Vertex best = 0;
    for (Vertex v = 1; v < 40; ++v)
      if (d.out_degree(v) < d.out_degree(best)) best = v;
    EXPECT_EQ(t.w, best);
    EXPECT_EQ(*t.verdict, is_seymour_vertex(d, best));
  }
  const auto edgeless = finder_min_outdegree(Orientation(std::make_shared<const Graph>(Graph(5))));
  EXPECT_TRUE(*edgeless.verdict);
  EXPECT_TRUE(finder_min_outdegree(Orientation()).regime_failure);
}

TEST(FinderMinOutdegree, LocallyCorneringImpliesSuccessExhaustively) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
      oracle::for_each_orientation(oracle::graph_from_mask(n, mask), [&](const Orientation& d) {
        const auto t = finder_min_outdegree(d);
        if (t.regime.at("locally_cornering")) EXPECT_TRUE(*t.verdict);
      });
}

TEST(FinderBijumbled, RotationalTournament) {
  const auto d = Orientation::rotational_tournament(101);
  const auto t = finder_bijumbled(d, 0.9, 0.001);
  EXPECT_TRUE(t.sets.at("bad1").empty());
  EXPECT_TRUE(t.sets.at("bad2").empty());
  EXPECT_EQ(t.sets.at("U").size(), 101u);
  EXPECT_EQ(t.w, 0u);
  ASSERT_TRUE(t.verdict);
  EXPECT_TRUE(*t.verdict);
  EXPECT_TRUE(t.regime.at("eps_below_1_over_225"));
}

TEST(FinderBijumbled, EdgelessIsRegimeFailure) {
  const auto t = finder_bijumbled(Orientation(std::make_shared<const Graph>(Graph(20))), 0.5, 0.01);
  EXPECT_TRUE(t.regime_failure);
  EXPECT_EQ(t.sets.at("bad1").size(), 20u);
  EXPECT_EQ(t.sets.at("bad2").size(), 20u);
  EXPECT_FALSE(t.verdict);
  EXPECT_THROW(finder_bijumbled(Orientation::directed_cycle(5), 0.5, 1.0), std::invalid_argument);
}

TEST(FinderBijumbled, TraceSetsSatisfyTheirDefinitions) {
  const double p = 0.4;
  const double eps = 0.01;
  auto g = std::make_shared<const Graph>(sample_gnp(GnpParams(120, p), Seed(8)));
  const auto d = sample_uniform_orientation(g, Seed(9));
  const auto t = finder_bijumbled(d, p, eps);
  const double cut = (1 - eps) * 120 * p * p;
  const auto bad1_cut = static_cast<std::size_t>(std::ceil(std::sqrt(eps) * 120));
  const auto bad2_cut = static_cast<std::size_t>(std::ceil(2 * std::sqrt(eps) * 120 * p));
  for (Vertex u = 0; u < 120; ++u) {
    std::size_t b = 0;
    for (Vertex v = 0; v < 120; ++v)
      if (v != u && static_cast<double>(codegree(*g, u, v)) <= cut) ++b;
    EXPECT_EQ(t.sets.at("bad1").contains(u), b >= bad1_cut);
    EXPECT_EQ(t.sets.at("bad2").contains(u), d.out_degree(u) < bad2_cut);
    EXPECT_EQ(t.sets.at("U").contains(u), b < bad1_cut && d.out_degree(u) >= bad2_cut);
  }
}

TEST(LambdaKing, SmallCases) {
  const auto c3 = Orientation::directed_cycle(3);
  EXPECT_TRUE(lambda_king_check(c3, 0, 1.0 / 3.0));
  EXPECT_FALSE(lambda_king_check(c3, 0, 0.5));
  const Orientation star(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  EXPECT_FALSE(lambda_king_check(star, 0, 0.1));
  const auto t3 = Orientation::transitive_tournament(3);
  EXPECT_FALSE(lambda_king_check(t3, 0, 0.3));
  EXPECT_TRUE(lambda_king_check(t3, 0, 0.3, KingReach::any_two_step_path));
  EXPECT_THROW(lambda_king_check(c3, 3, 0.5), std::invalid_argument);
  EXPECT_THROW(lambda_king_check(c3, 0, 0.0), std::invalid_argument);
}

TEST(Length2Cover, SmallCases) {
  EXPECT_TRUE(length2_cover_check(Orientation::directed_cycle(3)));
  EXPECT_TRUE(length2_cover_check(Orientation::rotational_tournament(5)));
  EXPECT_FALSE(length2_cover_check(Orientation(3, std::vector<Edge>{{0, 1}})));
  EXPECT_FALSE(length2_cover_check(Orientation::transitive_tournament(3)));
}

TEST(Length2Cover, MatchesBfsOracle) {
  for (std::uint64_t mask = 0; mask < 64; ++mask)
    oracle::for_each_orientation(oracle::graph_from_mask(4, mask), [](const Orientation& d) {
      bool expect = true;
      for (Vertex u = 0; u < 4; ++u)
        for (int dist : oracle::distances(d, u)) expect = expect && dist >= 0 && dist <= 2;
      EXPECT_EQ(length2_cover_check(d), expect);
    });
}

TEST(FinderKind, Parsing) {
  EXPECT_EQ(parse_finder_kind("mindeg"), FinderKind::min_outdegree);
  EXPECT_EQ(parse_finder_kind("min_outdegree"), FinderKind::min_outdegree);
  EXPECT_EQ(to_string(FinderKind::bijumbled), "bijumbled");
  EXPECT_THROW(parse_finder_kind("x"), std::invalid_argument);
}

}  // namespace
}  // namespace snc
