// Serial reference against the OpenMP sweep on fidelity grids.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "zenosim/sweep.hpp"

using namespace zenosim;

namespace {

RunParameters base(ModelKind kind, int steps) {
  RunParameters p;
  p.model = kind;
  p.steps = steps;
  if (kind == ModelKind::ThreeAtom) {
    p.epsilon = 0.2596;
    p.lambda_tf = 9.5;
  }
  return p;
}

// Closed-system epsilon x lambda_tf grid (fig3d shape, coarser).
void closed_grid(benchmark::State& state, bool parallel) {
  const Axis eps{"epsilon", 0.05, 0.5, 8};
  const Axis tf{"lambda_tf", 5.0, 20.0, 8};
  const PointFn f = point_evaluator(base(ModelKind::TwoAtom, 4000), eps.name, tf.name);
  for (auto _ : state) {
    SweepResult r = parallel ? sweep_parallel(eps, tf, f) : sweep_serial(eps, tf, f);
    benchmark::DoNotOptimize(r.values.data());
  }
  state.counters["points"] = eps.count * tf.count;
  state.counters["threads"] = parallel ? omp_get_max_threads() : 1;
}

// Master-equation decay grid (fig7 shape, coarser).
void open_grid(benchmark::State& state, bool parallel) {
  const Axis g{"gamma_over_lambda", 0.0, 0.1, 4};
  const Axis k{"kappa_over_lambda", 0.0, 0.1, 4};
  const PointFn f = point_evaluator(base(ModelKind::ThreeAtom, 4000), g.name, k.name);
  for (auto _ : state) {
    SweepResult r = parallel ? sweep_parallel(g, k, f) : sweep_serial(g, k, f);
    benchmark::DoNotOptimize(r.values.data());
  }
  state.counters["points"] = g.count * k.count;
  state.counters["threads"] = parallel ? omp_get_max_threads() : 1;
}

void BM_ClosedSerial(benchmark::State& s) { closed_grid(s, false); }
void BM_ClosedParallel(benchmark::State& s) { closed_grid(s, true); }
void BM_OpenSerial(benchmark::State& s) { open_grid(s, false); }
void BM_OpenParallel(benchmark::State& s) { open_grid(s, true); }

}  // namespace

BENCHMARK(BM_ClosedSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClosedParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OpenSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OpenParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
