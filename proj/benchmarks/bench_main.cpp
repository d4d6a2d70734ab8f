#include <benchmark/benchmark.h>

#include <bit>

#include "snc/bijumbled.hpp"
#include "snc/exhaustive.hpp"
#include "snc/finders.hpp"
#include "snc/neighborhoods.hpp"
#include "snc/random_models.hpp"
#include "snc/typicality.hpp"

namespace {

using namespace snc;

std::shared_ptr<const Graph> random_graph(std::size_t n, double p) {
  return std::make_shared<const Graph>(sample_gnp(GnpParams(n, p), Seed(1)));
}

void BM_SampleGnp(benchmark::State& state) {
  const GnpParams params(static_cast<std::size_t>(state.range(0)), 0.3);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_gnp(params, Seed(i++)));
}
BENCHMARK(BM_SampleGnp)->Arg(300)->Arg(2000);

void BM_FindSeymourVertex(benchmark::State& state) {
  const auto d = sample_uniform_orientation(random_graph(static_cast<std::size_t>(state.range(0)), 0.3), Seed(2));
  for (auto _ : state) benchmark::DoNotOptimize(find_seymour_vertex(d));
}
BENCHMARK(BM_FindSeymourVertex)->Arg(300)->Arg(2000);

void BM_SecondNeighborhoodAllVertices(benchmark::State& state) {
  const auto d = sample_uniform_orientation(random_graph(static_cast<std::size_t>(state.range(0)), 0.3), Seed(3));
  for (auto _ : state)
    for (Vertex u = 0; u < d.order(); ++u) benchmark::DoNotOptimize(second_neighborhood(d, u));
}
BENCHMARK(BM_SecondNeighborhoodAllVertices)->Arg(300);

void BM_Length2Cover(benchmark::State& state) {
  const auto d = sample_uniform_orientation(random_graph(300, 0.5), Seed(4));
  for (auto _ : state) benchmark::DoNotOptimize(length2_cover_check(d));
}
BENCHMARK(BM_Length2Cover);

void BM_GrayWalkerK7(benchmark::State& state) {
  const Graph k7 = Graph::complete(7);
  GrayOrientationWalker walker(k7);
  const std::uint64_t steps = std::uint64_t{1} << walker.edge_count();
  for (auto _ : state) {
    std::uint64_t found = 0;
    for (std::uint64_t j = 1; j < steps; ++j) {
      walker.flip(static_cast<std::size_t>(std::countr_zero(j)));
      found += walker.has_seymour_vertex();
    }
    benchmark::DoNotOptimize(found);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * (steps - 1)));
}
BENCHMARK(BM_GrayWalkerK7)->Unit(benchmark::kMillisecond);

void BM_LabelledSweepFive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_labelled_graphs(5, 1));
}
BENCHMARK(BM_LabelledSweepFive)->Unit(benchmark::kMillisecond);

void BM_WheelCheck(benchmark::State& state) {
  const auto g = random_graph(200, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(contains_wheel(*g));
}
BENCHMARK(BM_WheelCheck);

void BM_MinOutdegreeOrientation(benchmark::State& state) {
  const auto g = random_graph(400, 0.5);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(orient_with_min_outdegree(g, 40, Seed(i++)));
}
BENCHMARK(BM_MinOutdegreeOrientation)->Unit(benchmark::kMillisecond);

void BM_TypicalitySampled(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.2);
  CheckOptions o;
  o.budget = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(check_typicality(*g, 0.2, o));
}
BENCHMARK(BM_TypicalitySampled)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_TypicalityExact(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5);
  CheckOptions o;
  o.mode = CheckMode::exact;
  for (auto _ : state) benchmark::DoNotOptimize(check_typicality(*g, 0.5, o));
}
BENCHMARK(BM_TypicalityExact)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_BijumbledSampled(benchmark::State& state) {
  const auto g = random_graph(2000, 0.5);
  const auto params = BijumbledParams::from_constant(2000, 0.5, default_jumbled_constant());
  CheckOptions o;
  o.budget = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(certify_weak_bijumbled(*g, params, o));
}
BENCHMARK(BM_BijumbledSampled)->Unit(benchmark::kMillisecond);

void BM_FinderBijumbled(benchmark::State& state) {
  const auto d = sample_uniform_orientation(random_graph(2000, 0.5), Seed(5));
  for (auto _ : state) benchmark::DoNotOptimize(finder_bijumbled(d, 0.5, 0.01));
}
BENCHMARK(BM_FinderBijumbled)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
