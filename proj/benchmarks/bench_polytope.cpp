#include <benchmark/benchmark.h>

#include "hsp/catalog.hpp"
#include "hsp/faces.hpp"
#include "hsp/infinity.hpp"

namespace {

void BM_KaehlerHull(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hsp::kaehler_b2_polytope(d));
}
BENCHMARK(BM_KaehlerHull)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_NormalizedVolume(benchmark::State& state) {
  const hsp::LatticePolytope p = hsp::kaehler_b2_polytope(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hsp::normalized_volume(p));
}
BENCHMARK(BM_NormalizedVolume)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const hsp::LatticePolytope p = hsp::kaehler_b2_polytope(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hsp::census(p));
}
BENCHMARK(BM_Census)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_FlatComplex(benchmark::State& state) {
  const hsp::HomSpaceData data = hsp::jordan_space(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hsp::flat_complex(data));
}
BENCHMARK(BM_FlatComplex)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
