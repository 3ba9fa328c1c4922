#include <benchmark/benchmark.h>

#include "witt/finite_witt.hpp"
#include "witt/verify.hpp"

using namespace witt;

static Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::Parallel : Execution::Serial;
}

static void BM_Materialize(benchmark::State& state) {
  const auto S = TruncationSet::range(6);
  for (auto _ : state) benchmark::DoNotOptimize(materialize(integers_mod(3), S, 4096, mode(state)).size());
}
BENCHMARK(BM_Materialize)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_RingAxioms(benchmark::State& state) {
  const auto t = materialize(integers_mod(4), TruncationSet::validate(std::vector<std::uint64_t>{1, 2, 4}));
  for (auto _ : state) benchmark::DoNotOptimize(check_ring_axioms(t, 256, mode(state)).checks);
}
BENCHMARK(BM_RingAxioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_GhostHomSuite(benchmark::State& state) {
  SuiteOptions o;
  o.max = 8;
  o.samples = 100;
  o.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("ghost-hom", o).checks);
}
BENCHMARK(BM_GhostHomSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
