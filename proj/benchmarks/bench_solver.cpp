#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "hsp/catalog.hpp"
#include "hsp/curvature.hpp"
#include "hsp/solver.hpp"

namespace {

const std::vector<std::string> kFixtures{"product_2", "su3_t2", "wang_ziller_killing", "jordan_2"};

void BM_Solve(benchmark::State& state) {
  const hsp::HomSpaceData data = hsp::catalog_entry(kFixtures[static_cast<std::size_t>(state.range(0))]);
  state.SetLabel(data.name);
  for (auto _ : state) benchmark::DoNotOptimize(hsp::solve(data));
}
BENCHMARK(BM_Solve)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ScalarCurvature(benchmark::State& state) {
  const hsp::HomSpaceData data = hsp::catalog_entry("e8_t1_a4_a2_a1");
  for (auto _ : state) benchmark::DoNotOptimize(hsp::scalar_curvature(data));
}
BENCHMARK(BM_ScalarCurvature)->Unit(benchmark::kMicrosecond);

}  // namespace
