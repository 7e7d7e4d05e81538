#include <benchmark/benchmark.h>

#include "lincut/bench.hpp"
#include "lincut/generators.hpp"
#include "lincut/segment_insertion.hpp"
#include "lincut/triangulation.hpp"

namespace {

using lincut::Engine;
using lincut::Shape;

template <Engine E, Shape S>
void BM_Earcut(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const lincut::PocketPolygon poly = lincut::make_bench_polygon(S, n, 1);
  lincut::EarcutStats stats;
  for (auto _ : state) {
    auto tris = lincut::run_engine(E, poly, &stats);
    benchmark::DoNotOptimize(tris.data());
  }
  state.SetComplexityN(state.range(0));
  state.counters["orient_per_run"] = benchmark::Counter(
      static_cast<double>(stats.orient_calls) / static_cast<double>(state.iterations()));
}

BENCHMARK_TEMPLATE(BM_Earcut, Engine::Linear, Shape::Collinear)
    ->RangeMultiplier(2)->Range(16, 4096)->Complexity(benchmark::oN);
BENCHMARK_TEMPLATE(BM_Earcut, Engine::Linear, Shape::Random)
    ->RangeMultiplier(2)->Range(16, 4096)->Complexity(benchmark::oN);
BENCHMARK_TEMPLATE(BM_Earcut, Engine::Classic, Shape::Collinear)
    ->RangeMultiplier(2)->Range(16, 2048)->Complexity(benchmark::oNSquared);
BENCHMARK_TEMPLATE(BM_Earcut, Engine::Classic, Shape::Random)
    ->RangeMultiplier(2)->Range(16, 2048)->Complexity(benchmark::oNSquared);

void BM_BuildConstrained(benchmark::State& state) {
  const auto points = static_cast<std::size_t>(state.range(0));
  const lincut::ProblemInput input = lincut::gen_random_problem(points, points / 10, 7);
  for (auto _ : state) {
    lincut::TriMesh mesh = lincut::build_constrained(input);
    benchmark::DoNotOptimize(mesh.alive_count());
  }
}
BENCHMARK(BM_BuildConstrained)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
