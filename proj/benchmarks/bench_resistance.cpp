#include <benchmark/benchmark.h>

#include "mgraph/admissible.hpp"
#include "support/generators.hpp"

using namespace mgraph;

namespace {

MetrizedGraph dense_graph(int vertices) {
  testing::Rng rng(777);
  while (true) {
    MetrizedGraph g =
        testing::random_connected_graph(rng, vertices, 2 * vertices);
    if (g.vertex_count() == vertices) return g;
  }
}

void bm_effective_resistance(benchmark::State& state) {
  MetrizedGraph g = dense_graph(static_cast<int>(state.range(0)));
  PointLocation x = PointLocation::at_vertex(g.vertex_id(0));
  PointLocation y = PointLocation::at_vertex(g.vertex_id(g.vertex_count() - 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(effective_resistance(g, x, y));
  }
}
BENCHMARK(bm_effective_resistance)->Arg(8)->Arg(16)->Arg(32);

void bm_all_pairs_resistance(benchmark::State& state) {
  MetrizedGraph g = dense_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    AllPairsResistance resistance(g);
    benchmark::DoNotOptimize(resistance.between(0, g.vertex_count() - 1));
  }
}
BENCHMARK(bm_all_pairs_resistance)->Arg(8)->Arg(16)->Arg(32);

void bm_canonical_measure(benchmark::State& state) {
  MetrizedGraph g = dense_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_measure(g).total_mass(g));
  }
}
BENCHMARK(bm_canonical_measure)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
