#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "fracvoigt/fracops.hpp"
#include "fracvoigt/kernels.hpp"
#include "fracvoigt/mittag_leffler.hpp"

using namespace fracvoigt;

namespace {

std::vector<double> samples(int n) {
  std::vector<double> f(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    f[static_cast<std::size_t>(i)] = std::sin(0.01 * i);
  }
  return f;
}

void convolve(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  const fracops::ConvolutionWeights w = fracops::power_kernel_weights(n, 1.0 / n, 0.5, 1.0);
  const std::vector<double> f = samples(n);
  std::vector<double> out(f.size());
  for (auto _ : state) {
    if (parallel) {
      kernels::convolve_parallel(w, f, out);
    } else {
      kernels::convolve_serial(w, f, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(n);
  state.counters["threads"] = kernels::max_threads();
}

void BM_ConvolveSerial(benchmark::State& state) { convolve(state, false); }
void BM_ConvolveParallel(benchmark::State& state) { convolve(state, true); }

// Plan construction: n + 1 Mittag-Leffler evaluations plus the weights.
void BM_KernelPlan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const VoigtParams p(1.0, 2.0, 0.5);
  for (auto _ : state) {
    fracops::MLKernelConvolution plan(p, Grid(1.0, n));
    benchmark::DoNotOptimize(plan.weights().diagonal);
  }
}

void BM_MittagLeffler(benchmark::State& state) {
  const special::MLParams p(0.5, 0.5);
  const double z = -static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(special::ml_eval(p, z));
  }
}

}  // namespace

BENCHMARK(BM_ConvolveSerial)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_ConvolveParallel)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared)->UseRealTime();
BENCHMARK(BM_KernelPlan)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(BM_MittagLeffler)->Arg(1)->Arg(4)->Arg(20)->Arg(90);

BENCHMARK_MAIN();
