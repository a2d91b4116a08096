#include <benchmark/benchmark.h>

#include "aq/cohomology.hpp"
#include "aq/parabolic.hpp"
#include "aq/records.hpp"

namespace {

void BM_EnumerateClasses(benchmark::State& state) {
  const aq::HermitianRootData data(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aq::enumerate_classes(data));
}
BENCHMARK(BM_EnumerateClasses)->DenseRange(4, 16, 4);

void BM_FeasibleWitness(benchmark::State& state) {
  const aq::HermitianRootData data(static_cast<int>(state.range(0)));
  const auto n = data.noncompact_count();
  // I = lower half, F = top root: a mixed system with many zero rows
  aq::IndexSet ideal;
  for (std::size_t i = 0; i < n / 2; ++i) ideal.push_back(i);
  const auto poset = aq::noncompact_poset(data);
  ideal = poset.down_closure(ideal);
  const auto sys = aq::realizability_system(data, ideal, {n - 1});
  for (auto _ : state) benchmark::DoNotOptimize(aq::feasible_witness(sys));
}
BENCHMARK(BM_FeasibleWitness)->DenseRange(4, 24, 4);

void BM_BettiFullPoset(benchmark::State& state) {
  const aq::HermitianRootData data(static_cast<int>(state.range(0)));
  const auto poset = aq::noncompact_poset(data);
  for (auto _ : state) benchmark::DoNotOptimize(poset.ideal_size_counts());
}
BENCHMARK(BM_BettiFullPoset)->DenseRange(4, 24, 4);

void BM_BuildRecords(benchmark::State& state) {
  const aq::HermitianRootData data(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aq::build_records(data));
}
BENCHMARK(BM_BuildRecords)->Arg(6)->Arg(12);

}  // namespace
BENCHMARK_MAIN();
