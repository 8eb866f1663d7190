#include <benchmark/benchmark.h>

#include "twogoods/closed_forms.hpp"
#include "twogoods/lp_oracle.hpp"
#include "twogoods/mechanisms.hpp"
#include "twogoods/solutions.hpp"
#include "twogoods/verify.hpp"

namespace {

using namespace twogoods;

void BM_BuildPair(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_pair(0.05, Regime::A));
  }
}
BENCHMARK(BM_BuildPair);

void BM_FieldEvaluate(benchmark::State& state) {
  const PiecewiseField u = build_primal(0.05, Regime::A);
  const Point probes[] = {{0.2, 0.9}, {0.6, 0.6}, {0.95, 0.3}, {0.4, 0.15}};
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(u.evaluate(probes[i++ & 3]));
  }
}
BENCHMARK(BM_FieldEvaluate);

void BM_FieldValueScan(benchmark::State& state) {
  const PiecewiseField z1 = build_dual(0.05, Regime::A).first;
  const Point probes[] = {{0.2, 0.9}, {0.6, 0.6}, {0.95, 0.3}, {0.4, 0.15}};
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(z1.value(probes[i++ & 3]));
  }
}
BENCHMARK(BM_FieldValueScan);

void BM_MenuRevenuePolygonal(benchmark::State& state) {
  const Menu menu{{{1.0, 0.0, 0.69}, {0.0, 1.0, 0.69}, {1.0, 1.0, 0.88}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(menu_revenue(menu, 0.02));
  }
}
BENCHMARK(BM_MenuRevenuePolygonal);

void BM_MenuRevenueClosedForm(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(deterministic_menu_revenue(0.02, 0.69, 0.88));
  }
}
BENCHMARK(BM_MenuRevenueClosedForm);

void BM_DualObjective(benchmark::State& state) {
  const SolutionPair pair = build_pair(0.05, Regime::A);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_objective(pair.z1, pair.z2));
  }
}
BENCHMARK(BM_DualObjective);

void BM_FullVerify(benchmark::State& state) {
  const SolutionPair pair = build_pair(0.05, Regime::A);
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_verify(pair, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_FullVerify)->Arg(100)->Arg(200);

void BM_ExtractMenu(benchmark::State& state) {
  const PiecewiseField u = build_primal(0.0, Regime::A);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_menu(u));
  }
}
BENCHMARK(BM_ExtractMenu);

void BM_LpSimplex(benchmark::State& state) {
  const LpInstance lp = build_lp(0.5, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_simplex(lp));
  }
}
BENCHMARK(BM_LpSimplex)->Arg(8)->Arg(12);

void BM_LpMinCostFlow(benchmark::State& state) {
  const LpInstance lp = build_lp(0.5, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_mcf(lp));
  }
}
BENCHMARK(BM_LpMinCostFlow)->Arg(12)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
