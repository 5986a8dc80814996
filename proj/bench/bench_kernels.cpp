// Serial reference versus OpenMP for the parallel kernels.
#include <benchmark/benchmark.h>

#include "ardlkit/kernels.hpp"
#include "ardlkit/montecarlo.hpp"
#include "ardlkit/rng.hpp"

using namespace ardlkit;

namespace {

Eigen::MatrixXd noise(Eigen::Index rows, Eigen::Index cols) {
  Rng rng(1);
  Eigen::MatrixXd u(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) u(i, j) = rng.normal();
  return u;
}

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_Autocovariances(benchmark::State& state) {
  const Eigen::MatrixXd u = noise(state.range(1), 6);
  for (auto _ : state) benchmark::DoNotOptimize(autocovariances(u, 24, mode(state)));
  state.SetLabel(state.range(0) ? "openmp" : "serial");
}
BENCHMARK(BM_Autocovariances)->ArgsProduct({{0, 1}, {500, 5000}});

void BM_AdfSizeExperiment(benchmark::State& state) {
  DgpSpec spec;
  spec.process = dgp::RandomWalk{};
  spec.length = 200;
  spec.seed = 7;
  const auto test = resolve_test("adf");
  for (auto _ : state) benchmark::DoNotOptimize(size_power_experiment(spec, test, 400, 0.05, mode(state)));
  state.SetLabel(state.range(0) ? "openmp" : "serial");
}
BENCHMARK(BM_AdfSizeExperiment)->Args({0, 0})->Args({1, 0})->Unit(benchmark::kMillisecond);

void BM_Replicate(benchmark::State& state) {
  for (auto _ : state) {
    auto r = replicate<double>(
        20000, [](std::size_t i) { return Rng(replication_seed(3, i)).normal(); }, mode(state));
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(state.range(0) ? "openmp" : "serial");
}
BENCHMARK(BM_Replicate)->Args({0, 0})->Args({1, 0});

}  // namespace

BENCHMARK_MAIN();
