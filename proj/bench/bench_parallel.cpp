// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "hoeckend/hoecken.hpp"
#include "hoeckend/sweep.hpp"

using namespace hoeckend;

namespace {

SweepSpec envelope_spec(int n) {
  return {{{"theta1_deg", 0, 40, n}, {"theta2_deg", 0, 60, n}}, SweepTarget::EnvelopeForces, {}};
}

SweepSpec deviation_spec(int n) {
  return {{{"lAC_ratio", 1.3, 1.7, n}, {"lBD_ratio", 5.0, 7.0, n}}, SweepTarget::Deviation, {}};
}

void BM_EnvelopeSweep(benchmark::State& state) {
  const SweepSpec spec = envelope_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, {}));
}

void BM_EnvelopeSweepSerial(benchmark::State& state) {
  const SweepSpec spec = envelope_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(spec, {}));
}

void BM_DeviationSweep(benchmark::State& state) {
  const SweepSpec spec = deviation_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, {}));
}

void BM_DeviationSweepSerial(benchmark::State& state) {
  const SweepSpec spec = deviation_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(spec, {}));
}

void BM_Trace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_path(HoeckenDims{}, 0.0, 2 * kPi, n));
}

void BM_TraceSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_path_serial(HoeckenDims{}, 0.0, 2 * kPi, n));
}

}  // namespace

BENCHMARK(BM_EnvelopeSweep)->Arg(50)->Arg(200);
BENCHMARK(BM_EnvelopeSweepSerial)->Arg(50)->Arg(200);
BENCHMARK(BM_DeviationSweep)->Arg(8);
BENCHMARK(BM_DeviationSweepSerial)->Arg(8);
BENCHMARK(BM_Trace)->Arg(3601)->Arg(100001);
BENCHMARK(BM_TraceSerial)->Arg(3601)->Arg(100001);

BENCHMARK_MAIN();
