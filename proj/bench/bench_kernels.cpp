#include <benchmark/benchmark.h>

#include "phylo/bench.hpp"
#include "phylo/distance.hpp"

namespace {

void BM_MatrixSerial(benchmark::State& state) {
  const auto ds = phylo::synthetic_dataset(static_cast<std::size_t>(state.range(0)), 7, 10, 1);
  for (auto _ : state) benchmark::DoNotOptimize(phylo::build_matrix_serial(ds, phylo::Metric::Hamming));
  state.SetComplexityN(state.range(0));
}

void BM_MatrixParallel(benchmark::State& state) {
  const auto ds = phylo::synthetic_dataset(static_cast<std::size_t>(state.range(0)), 7, 10, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(phylo::build_matrix(ds, phylo::Metric::Hamming, phylo::EvalMode::Eager));
  state.SetComplexityN(state.range(0));
}

void BM_MatrixSerialLongProfiles(benchmark::State& state) {
  const auto ds = phylo::synthetic_dataset(static_cast<std::size_t>(state.range(0)), 2000, 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(phylo::build_matrix_serial(ds, phylo::Metric::Hamming));
}

void BM_MatrixParallelLongProfiles(benchmark::State& state) {
  const auto ds = phylo::synthetic_dataset(static_cast<std::size_t>(state.range(0)), 2000, 4, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(phylo::build_matrix(ds, phylo::Metric::Hamming, phylo::EvalMode::Eager));
}

}  // namespace

BENCHMARK(BM_MatrixSerial)->RangeMultiplier(2)->Range(200, 1600)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_MatrixParallel)->RangeMultiplier(2)->Range(200, 1600)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_MatrixSerialLongProfiles)->Arg(200)->Arg(400);
BENCHMARK(BM_MatrixParallelLongProfiles)->Arg(200)->Arg(400);

BENCHMARK_MAIN();
