// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "intprop/bench.hpp"
#include "intprop/parser.hpp"
#include "intprop/search.hpp"

namespace {

using namespace intprop;

void BM_IntervalAdd(benchmark::State& state) {
  OpCounters ops;
  IntInterval a = IntInterval::finite(-123456789L, 987654321L);
  IntInterval b = IntInterval::finite(17L, 4242L);
  for (auto _ : state) benchmark::DoNotOptimize(add(a, b, ops));
}
BENCHMARK(BM_IntervalAdd);

void BM_MulHull(benchmark::State& state) {
  OpCounters ops;
  IntInterval a = IntInterval::finite(-355L, 617L);
  IntInterval b = IntInterval::finite(-12L, 9L);
  for (auto _ : state) benchmark::DoNotOptimize(mul_hull(a, b, ops));
}
BENCHMARK(BM_MulHull);

void BM_DivHullRefined(benchmark::State& state) {
  OpCounters ops;
  IntInterval x = IntInterval::finite(155L, 161L);
  IntInterval y = IntInterval::finite(9L, 11L);
  for (auto _ : state) benchmark::DoNotOptimize(div_hull(x, y, ops));
}
BENCHMARK(BM_DivHullRefined);

void BM_RootEven(benchmark::State& state) {
  OpCounters ops;
  IntInterval x = IntInterval::finite(1L, 1000000007L);
  for (auto _ : state) benchmark::DoNotOptimize(root(x, 2, ops));
}
BENCHMARK(BM_RootEven);

void BM_PropagateMultExample(benchmark::State& state) {
  CspModel model = parse_model(
      "var x in [1..20]; var y in [9..11]; var z in [155..161]; x*y = z;");
  CompiledCsp csp = compile(model, Approach::A3a);
  Engine engine(csp, ScheduleMode::Cycling);
  for (auto _ : state) {
    DomainStore store = csp.initial;
    RunStats stats;
    engine.propagate(store, stats, std::nullopt);
    benchmark::DoNotOptimize(store);
  }
}
BENCHMARK(BM_PropagateMultExample);

void BM_SolveCubes1a(benchmark::State& state) {
  CspModel model = parse_model(find_benchmark("cubes")->source);
  for (auto _ : state) {
    SearchConfig config;
    benchmark::DoNotOptimize(solve(model, Approach::A1a, config));
  }
}
BENCHMARK(BM_SolveCubes1a);

}  // namespace

BENCHMARK_MAIN();
