#include <benchmark/benchmark.h>

#include "edgeideal/betti.hpp"
#include "edgeideal/generator.hpp"
#include "edgeideal/groebner.hpp"
#include "edgeideal/monomial_ideal.hpp"
#include "edgeideal/stci.hpp"

using namespace edgeideal;

namespace {

// Random unmixed graph on c matched pairs, 2c variables.
SquareFreeMonomialIdeal instance(int c) { return edge_ideal(random_unmixed(c, 17)); }

void BM_BettiSerial(benchmark::State& state) {
  const auto ideal = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table_serial(ideal, Field::rationals()));
  state.counters["vars"] = ideal.variable_count();
}

void BM_BettiParallel(benchmark::State& state) {
  const auto ideal = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(ideal, Field::rationals()));
  state.counters["vars"] = ideal.variable_count();
}

void BM_BettiPrimeField(benchmark::State& state) {
  const auto ideal = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(ideal, Field::prime(kDefaultPrime)));
}

void BM_Generators(benchmark::State& state) {
  const auto mg = random_unmixed(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(arank_generators(mg));
}

void BM_Verify(benchmark::State& state) {
  const auto mg = random_unmixed(static_cast<int>(state.range(0)), 17);
  const auto gs = arank_generators(mg);
  for (auto _ : state) benchmark::DoNotOptimize(verify_arank_generators(mg, gs));
}

}  // namespace

BENCHMARK(BM_BettiSerial)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiParallel)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiPrimeField)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Generators)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Verify)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
