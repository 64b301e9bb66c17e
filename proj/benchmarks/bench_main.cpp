#include <benchmark/benchmark.h>

#include "scottmax/diagonal.hpp"
#include "scottmax/domain.hpp"
#include "scottmax/opens.hpp"
#include "scottmax/poset.hpp"

using namespace scottmax;

static void BM_TruncationTransitivity(benchmark::State& state) {
  const auto elems = truncation(static_cast<Nat>(state.range(0)), static_cast<Nat>(state.range(0)));
  for (auto _ : state) {
    std::size_t bad = 0;
    for (const auto& u : elems)
      for (const auto& v : elems) {
        if (!leq(u, v)) continue;
        for (const auto& w : elems) bad += leq(v, w) && !leq(u, w);
      }
    benchmark::DoNotOptimize(bad);
  }
  state.counters["elements"] = static_cast<double>(elems.size());
}
BENCHMARK(BM_TruncationTransitivity)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Diagonalize(benchmark::State& state) {
  const auto fam = IndexedFamily::canonical();
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(fam, static_cast<Nat>(state.range(0)), 10000));
}
BENCHMARK(BM_Diagonalize)->Arg(16)->Arg(64)->Arg(256);

static void BM_CoversMax(benchmark::State& state) {
  const OpenDesc o({GenFamily::x_rank_at_least(8), GenFamily::x_column(1, 2), GenFamily::x_column(3, 5),
                    GenFamily::explicit_list({LElem::sigma(Seq::finite({1, 1})), LElem::sigma(Seq::finite({2}))})});
  for (auto _ : state) benchmark::DoNotOptimize(uncovered_maximal(o));
}
BENCHMARK(BM_CoversMax);

static void BM_LabeledPosets(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(labeled_posets(static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_LabeledPosets)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_PeriodicOrder(benchmark::State& state) {
  const Seq a = Seq::periodic({3, 1, 4}, {1, 5, 9, 2});
  const Seq b = Seq::periodic({3, 1, 4, 1, 5}, {9, 2, 1, 5});
  for (auto _ : state) benchmark::DoNotOptimize(substring_leq(a, b));
}
BENCHMARK(BM_PeriodicOrder);

BENCHMARK_MAIN();
