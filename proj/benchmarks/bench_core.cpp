#include <benchmark/benchmark.h>

#include "tg/coverage.hpp"
#include "tg/rng.hpp"
#include "tg/solvers.hpp"
#include "tg/verification.hpp"

namespace {

tg::TemporalGraph make_graph(int n, int t_max, bool periodic) {
  auto rng = tg::make_stream(99, "bench-graph");
  tg::RandomGraphSpec spec;
  spec.min_n = n;
  spec.max_n = n;
  spec.max_t_max = t_max;
  spec.periodic = periodic;
  spec.min_density = 0.3;
  spec.max_density = 0.3;
  // Regenerate until the lifetime hits the requested value.
  for (;;) {
    tg::TemporalGraph g = tg::random_graph(rng, spec);
    if (g.t_max() == t_max) return g;
  }
}

void BM_SimulateStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tg::TemporalGraph g = make_graph(n, 16, true);
  tg::Simulator sim(g, 0, 3);
  tg::CounterState s = sim.initial({1});
  for (auto _ : state) {
    sim.step(s, s.time % 16 == 0);
    benchmark::DoNotOptimize(s.counters.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SimulateStep)->Arg(16)->Arg(64)->Arg(256);

void BM_GreedyCoverage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tg::TemporalGraph g = make_graph(n, 12, false);
  auto cov = tg::build_spread_coverage(g, 0, 2, 4, 0);
  for (auto _ : state) {
    auto res = tg::greedy_max_coverage(cov);
    benchmark::DoNotOptimize(res.covered);
  }
}
BENCHMARK(BM_GreedyCoverage)->Arg(32)->Arg(128);

void BM_ExactSpread(benchmark::State& state) {
  tg::ProblemInstance inst;
  inst.graph = make_graph(10, static_cast<int>(state.range(0)), false);
  inst.source = 0;
  inst.delta = 2;
  inst.budget = 3;
  inst.objective = tg::Objective::MaxSpread;
  tg::SolveOptions opts;
  opts.prune = state.range(1) != 0;
  for (auto _ : state) {
    auto res = tg::exact_solve(inst, opts);
    benchmark::DoNotOptimize(res.value.excl_source);
  }
}
BENCHMARK(BM_ExactSpread)->Args({10, 0})->Args({10, 1})->Args({14, 0})->Args({14, 1});

void BM_PeriodicFpt(benchmark::State& state) {
  tg::ProblemInstance inst;
  inst.graph = make_graph(8, static_cast<int>(state.range(0)), true);
  inst.source = 0;
  inst.delta = 2;
  inst.budget = 3;
  inst.objective = tg::Objective::MaxSpread;
  for (auto _ : state) {
    auto res = tg::periodic_fpt_maxspread(inst);
    benchmark::DoNotOptimize(res.value.excl_source);
  }
}
BENCHMARK(BM_PeriodicFpt)->Arg(8)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
