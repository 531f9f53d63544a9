#include <benchmark/benchmark.h>

#include "ldal/constructive.hpp"
#include "ldal/families.hpp"
#include "ldal/labeling.hpp"
#include "ldal/oracle.hpp"
#include "ldal/rectangles.hpp"
#include "ldal/tables.hpp"

using namespace ldal;

static void BM_OracleCycle(benchmark::State& state) {
  Graph g = cycle_graph(static_cast<int>(state.range(0)));
  SearchBudget b;
  b.max_order = 14;
  b.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(chi_ld_exact(g, b));
}
BENCHMARK(BM_OracleCycle)->DenseRange(5, 11)->Unit(benchmark::kMillisecond);

static void BM_OraclePath(benchmark::State& state) {
  Graph g = path_graph(static_cast<int>(state.range(0)));
  SearchBudget b;
  b.max_order = 12;
  b.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(chi_ld_exact(g, b));
}
BENCHMARK(BM_OraclePath)->DenseRange(5, 11)->Unit(benchmark::kMillisecond);

static void BM_Weigh(benchmark::State& state) {
  Graph g = lexicographic(cycle_graph(static_cast<int>(state.range(0))), empty_graph(4));
  Labeling f = Labeling::identity(g.order());
  for (auto _ : state) benchmark::DoNotOptimize(weigh(g, f));
}
BENCHMARK(BM_Weigh)->Range(8, 512);

static void BM_CycleLexi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(label_cycle_lexi(static_cast<int>(state.range(0)), 5));
}
BENCHMARK(BM_CycleLexi)->Arg(13)->Arg(101)->Arg(1001);

static void BM_MagicRectangle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_magic_rectangle(n, n));
}
BENCHMARK(BM_MagicRectangle)->Arg(7)->Arg(51)->Arg(201);

static void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(construction_sweep(12, 6));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
