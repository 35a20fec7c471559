#include <benchmark/benchmark.h>

#include "mgraph/admissible.hpp"
#include "mgraph/wedge.hpp"
#include "support/generators.hpp"

using namespace mgraph;

namespace {

MetrizedGraph sized_graph(int vertices, int edges) {
  testing::Rng rng(12345);
  while (true) {
    MetrizedGraph g = testing::random_connected_graph(rng, vertices, edges);
    if (g.vertex_count() == vertices && g.edge_count() == edges) return g;
  }
}

void bm_green_system(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MetrizedGraph g = sized_graph(n, n + 4);
  testing::Rng rng(1);
  VertexDivisor d = testing::random_divisor(rng, g);
  for (auto _ : state) {
    GreenSystem sys = green_system(g, d);
    benchmark::DoNotOptimize(sys.c);
  }
}
BENCHMARK(bm_green_system)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_green_eval_interior(benchmark::State& state) {
  WedgeSpec spec = make_wedge({Rat(1), Rat(2), Rat(3)}, 3);
  MetrizedGraph g = wedge_graph(spec);
  VertexDivisor k = wedge_divisor(spec, g);
  PointLocation x = PointLocation::on_edge("c1", Rat(1, 3));
  PointLocation y = PointLocation::on_edge("c2", Rat(5, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(green_eval(g, k, x, y));
  }
}
BENCHMARK(bm_green_eval_interior);

void bm_wedge_closed_form(benchmark::State& state) {
  WedgeSpec spec = make_wedge({Rat(1), Rat(2), Rat(3)}, 3);
  WedgePoint x{0, Rat(1, 3)};
  WedgePoint y{1, Rat(5, 4)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge_green(spec, x, y));
  }
}
BENCHMARK(bm_wedge_closed_form);

void bm_verify_admissibility(benchmark::State& state) {
  MetrizedGraph g = sized_graph(6, 10);
  testing::Rng rng(2);
  VertexDivisor d = testing::random_divisor(rng, g);
  GreenSystem sys = green_system(g, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_admissibility(g, d, sys).all_pass());
  }
}
BENCHMARK(bm_verify_admissibility);

}  // namespace
