// Serial reference vs OpenMP runner on the acceptance sweeps.
#include <benchmark/benchmark.h>

#include "support/families.hpp"

namespace {

using bub::Runner;

void check(benchmark::State& state, const bub::Tally& t) {
  if (!t.ok()) state.SkipWithError(t.first_failure.c_str());
  state.counters["trials"] = static_cast<double>(t.trials);
}

void BM_RingSoundness(benchmark::State& state) {
  const auto runner = static_cast<Runner>(state.range(0));
  for (auto _ : state) check(state, bub::testing::ring_soundness(runner, 200, 500));
}

void BM_RemarkEquivalence(benchmark::State& state) {
  const auto runner = static_cast<Runner>(state.range(0));
  for (auto _ : state) check(state, bub::testing::remark_equivalence(runner, 2000));
}

void BM_LucasVsExact(benchmark::State& state) {
  const auto runner = static_cast<Runner>(state.range(0));
  for (auto _ : state) check(state, bub::testing::lucas_vs_exact(runner, 400));
}

}  // namespace

BENCHMARK(BM_RingSoundness)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RemarkEquivalence)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LucasVsExact)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
