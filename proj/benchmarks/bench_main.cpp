#include <benchmark/benchmark.h>

#include "pdng/canonical.hpp"
#include "pdng/generators.hpp"
#include "pdng/ng_analysis.hpp"
#include "pdng/solvers.hpp"
#include "pdng/structure.hpp"

using namespace pdng;

static void BM_GammaPNecklace(benchmark::State& state) {
  const Graph g = necklace(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_p(g));
}
BENCHMARK(BM_GammaPNecklace)->Arg(2)->Arg(3)->Arg(4);

static void BM_GammaPetersen(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(gamma(g));
}
BENCHMARK(BM_GammaPetersen);

static void BM_ZeroForcingComb(benchmark::State& state) {
  const Graph g = comb(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zero_forcing(g));
}
BENCHMARK(BM_ZeroForcingComb)->Arg(4)->Arg(6)->Arg(8);

static void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm);

static void BM_Planarity(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(g));
}
BENCHMARK(BM_Planarity);

static void BM_NGReportOrder7(benchmark::State& state) {
  const auto graphs = enumerate_all(7);
  for (auto _ : state) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(ng_report(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_NGReportOrder7)->Unit(benchmark::kMillisecond);

static void BM_EnumerateOrder7(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(7));
}
BENCHMARK(BM_EnumerateOrder7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
