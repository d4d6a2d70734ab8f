#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "snc/random_models.hpp"

namespace snc {
namespace {

TEST(Seed, ParseAndFormat) {
  EXPECT_EQ(parse_seed("12345").root(), 12345u);
  EXPECT_EQ(parse_seed("0x3039").root(), 12345u);
  EXPECT_EQ(parse_seed(format_seed(Seed(0xdeadbeefULL))), Seed(0xdeadbeefULL));
  EXPECT_THROW(parse_seed(""), std::invalid_argument);
  EXPECT_THROW(parse_seed("12x"), std::invalid_argument);
  EXPECT_THROW(parse_seed("0x"), std::invalid_argument);
}

TEST(Seed, DerivationIsDeterministicAndSeparatesStreams) {
  const Seed root(99);
  EXPECT_EQ(root.derive(3, StreamTag::graph), root.derive(3, StreamTag::graph));
  EXPECT_NE(root.derive(3, StreamTag::graph), root.derive(3, StreamTag::orientation));
  EXPECT_NE(root.derive(3, StreamTag::graph), root.derive(4, StreamTag::graph));
  EXPECT_NE(Seed(1).derive(0, StreamTag::trial), Seed(2).derive(0, StreamTag::trial));
}

TEST(Gnp, ParamsValidated) {
  EXPECT_THROW(GnpParams(10, 0.0), std::invalid_argument);
  EXPECT_THROW(GnpParams(10, 1.0), std::invalid_argument);
  EXPECT_THROW(GnpParams(0, 0.5), std::invalid_argument);
  EXPECT_THROW(GnpParams(kMaxVertices + 1, 0.5), std::invalid_argument);
  EXPECT_NO_THROW(GnpParams(1, 0.5));
}

TEST(Gnp, SameSeedSameGraph) {
  const GnpParams params(80, 0.3);
  EXPECT_EQ(sample_gnp(params, Seed(5)), sample_gnp(params, Seed(5)));
  EXPECT_NE(sample_gnp(params, Seed(5)), sample_gnp(params, Seed(6)));
}

TEST(Gnp, MeanEdgeCountWithinThreeSigma) {
  const GnpParams params(100, 0.5);
  double total = 0;
  const int seeds = 1000;
  for (int s = 0; s < seeds; ++s)
    total += static_cast<double>(sample_gnp(params, Seed(1).derive(s, StreamTag::graph)).edge_count());
  const double mean = total / seeds;
  const double sigma = std::sqrt(4950 * 0.25);
  EXPECT_NEAR(mean, 2475.0, 3 * sigma);
  // The mean over 1000 draws is far tighter than one sigma of a single draw.
  EXPECT_NEAR(mean, 2475.0, 3 * sigma / std::sqrt(seeds));
}

TEST(Gnp, PairIndicatorsUncorrelated) {
  const GnpParams params(50, 0.3);
  const int seeds = 10000;
  double a = 0, b = 0, ab = 0;
  for (int s = 0; s < seeds; ++s) {
    const Graph g = sample_gnp(params, Seed(2).derive(s, StreamTag::graph));
    const double x = g.adjacent(0, 1);
    const double y = g.adjacent(0, 2);
    a += x;
    b += y;
    ab += x * y;
  }
  const double cov = ab / seeds - (a / seeds) * (b / seeds);
  EXPECT_NEAR(cov, 0.0, 0.01);
}

TEST(UniformOrientation, SingleEdgeIsFair) {
  auto g = std::make_shared<const Graph>(Graph::path(2));
  int forward = 0;
  const int seeds = 10000;
  for (int s = 0; s < seeds; ++s)
    forward += sample_uniform_orientation(g, Seed(3).derive(s, StreamTag::orientation)).has_arc(0, 1);
  EXPECT_NEAR(forward / double(seeds), 0.5, 0.02);
}

TEST(UniformOrientation, AllEightTrianglesEquallyLikely) {
  auto g = std::make_shared<const Graph>(Graph::complete(3));
  std::array<int, 8> counts{};
  const int seeds = 10000;
  for (int s = 0; s < seeds; ++s) {
    const auto d = sample_uniform_orientation(g, Seed(4).derive(s, StreamTag::orientation));
    counts[d.has_arc(0, 1) | (d.has_arc(0, 2) << 1) | (d.has_arc(1, 2) << 2)]++;
  }
  for (int c : counts) EXPECT_NEAR(c / double(seeds), 0.125, 0.02);
}

TEST(UniformOrientation, EdgelessGraph) {
  auto g = std::make_shared<const Graph>(Graph(6));
  const auto d = sample_uniform_orientation(g, Seed(1));
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(d.out_degree(v), 0u);
}

TEST(MinOutdegree, SmallCases) {
  auto cycle = std::make_shared<const Graph>(Graph::cycle(7));
  const auto d = orient_with_min_outdegree(cycle, 1, Seed(1));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->min_out_degree(), 1u);

  EXPECT_FALSE(orient_with_min_outdegree(std::make_shared<const Graph>(Graph::star(5)), 1, Seed(1)));

  const auto k5 = orient_with_min_outdegree(std::make_shared<const Graph>(Graph::complete(5)), 2, Seed(1));
  ASSERT_TRUE(k5);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(k5->out_degree(v), 2u);

  EXPECT_TRUE(orient_with_min_outdegree(std::make_shared<const Graph>(Graph(3)), 0, Seed(1)));
}

// Feasibility agrees with exhaustive search on every graph with up to 6 vertices.
TEST(MinOutdegree, AgreesWithExhaustiveFeasibility) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < graphs; mask += (n == 6 ? 7 : 1)) {
      auto g = std::make_shared<const Graph>(oracle::graph_from_mask(n, mask));
      if (g->edge_count() > 16) continue;
      for (std::size_t d = 0; d <= 3; ++d) {
        const auto got = orient_with_min_outdegree(g, d, Seed(mask * 4 + d));
        ASSERT_EQ(got.has_value(), oracle::min_outdegree_feasible_brute(*g, d)) << "n=" << n << " mask=" << mask;
        if (got) {
          EXPECT_GE(got->min_out_degree(), d);
          EXPECT_EQ(&got->base(), g.get());
        }
      }
    }
  }
}

TEST(MinOutdegree, DenseRandomGraphs) {
  for (int s = 0; s < 5; ++s) {
    auto g = std::make_shared<const Graph>(sample_gnp(GnpParams(200, 0.2), Seed(s)));
    const auto d = orient_with_min_outdegree(g, 15, Seed(s + 100));
    ASSERT_TRUE(d);
    EXPECT_GE(d->min_out_degree(), 15u);
  }
}

TEST(ReversePath, ChangesOnlyEndpointDegrees) {
  auto g = std::make_shared<const Graph>(Graph::path(4));
  OrientationBuilder b(g);  // 0 -> 1 -> 2 -> 3
  const std::vector<Vertex> path{0, 1, 2, 3};
  reverse_path(b, path);
  EXPECT_EQ(b.out_degree(0), 0u);
  EXPECT_EQ(b.out_degree(3), 1u);
  EXPECT_EQ(b.out_degree(1), 1u);
  EXPECT_TRUE(b.has_arc(3, 2));
  const std::vector<Vertex> missing{0, 1};
  EXPECT_THROW(reverse_path(b, missing), std::invalid_argument);
}

TEST(CeilCount, RoundsUp) {
  EXPECT_EQ(ceil_count(0.8), 1u);
  EXPECT_EQ(ceil_count(40.0), 40u);
  EXPECT_EQ(ceil_count(40.0001), 41u);
  EXPECT_EQ(ceil_count(-3), 0u);
}

}  // namespace
}  // namespace snc
