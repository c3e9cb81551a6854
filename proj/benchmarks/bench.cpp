#include <benchmark/benchmark.h>

#include "strata/algebra.hpp"
#include "strata/graphs.hpp"
#include "strata/hyperelliptic.hpp"
#include "strata/integrals.hpp"

using namespace strata;

// Caches are process-wide, so enumeration and correlators use fresh inputs or
// the uncached entry points.
static void BM_EnumerateGenus2(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_stable_graphs(2, n, GraphFilter::All).size());
}
BENCHMARK(BM_EnumerateGenus2)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_Correlators(benchmark::State& st) {
  for (auto _ : st) {
    clear_table();
    benchmark::DoNotOptimize(psi_integral(4, {3, 3, 3, 3, 3, 3}));
  }
}
BENCHMARK(BM_Correlators)->Unit(benchmark::kMillisecond);

static void BM_MultiplyDivisors(benchmark::State& st) {
  TautClass d = delta_total(2, 1);
  TautClass l = lambda_class(2, 1);
  for (auto _ : st) benchmark::DoNotOptimize(multiply(d, l).size());
}
BENCHMARK(BM_MultiplyDivisors)->Unit(benchmark::kMillisecond);

static void BM_CompactTypeFormula(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(hyp_ct_formula(n).size());
}
BENCHMARK(BM_CompactTypeFormula)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_PairingSweep(benchmark::State& st) {
  TautClass h = hyp_ct_formula(2);
  auto keys = generator_keys(2, 2, h.dim() - 2);
  for (auto _ : st) benchmark::DoNotOptimize(pairing_vector(h, keys, 1).size());
}
BENCHMARK(BM_PairingSweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
