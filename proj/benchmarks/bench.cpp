#include <benchmark/benchmark.h>

#include "cohlab/catalog.hpp"
#include "cohlab/extension.hpp"
#include "cohlab/solver.hpp"

using namespace cohlab;

static void BM_SolveTetrahedron(benchmark::State& state) {
  auto t = tetrahedron();
  for (auto _ : state) {
    auto r = solve_backtracking(t.poly);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SolveTetrahedron);

static void BM_CountPyramid4(benchmark::State& state) {
  auto p = pyramid(4).first;
  for (auto _ : state) {
    auto n = count_labellings(p);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_CountPyramid4);

static void BM_CountPyramid4Rotation(benchmark::State& state) {
  auto p = pyramid(4).first;
  for (auto _ : state) {
    auto n = count_by_rotation_selection(p);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_CountPyramid4Rotation);

static void BM_CubeInfeasible(benchmark::State& state) {
  auto c = cuboid();
  for (auto _ : state) {
    auto r = solve_by_rotation_selection(c);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CubeInfeasible);

static void BM_Dual(benchmark::State& state) {
  auto p = prism(8);
  for (auto _ : state) {
    auto d = dual(p);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Dual);

static void BM_PyramidalizeCuboid(benchmark::State& state) {
  auto c = cuboid();
  Labelling l(c.edge_count());
  for (int e = 0; e < c.edge_count(); ++e) l[e] = Rat(e + 1);
  for (auto _ : state) {
    auto out = pyramidalize(c, l);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_PyramidalizeCuboid);

BENCHMARK_MAIN();
