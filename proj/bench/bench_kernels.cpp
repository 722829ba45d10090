// Serial reference vs OpenMP Monte Carlo log-det kernel, and the end-to-end
// sum-rate path. Run with OMP_NUM_THREADS set to compare worker counts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "qfmimo/linkrate.hpp"
#include "qfmimo/logdet.hpp"
#include "qfmimo/netgeom.hpp"
#include "qfmimo/qmimo.hpp"

namespace {

std::vector<double> flat_scale(int rows, int cols) { return std::vector<double>(rows, std::sqrt(1.0 / cols)); }

void BM_LogDetSerial(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const int cols = static_cast<int>(state.range(1));
  const auto scale = flat_scale(rows, cols);
  for (auto _ : state)
    benchmark::DoNotOptimize(qfmimo::mc_log2det(scale, cols, 64, 7, qfmimo::Execution::serial));
  state.SetItemsProcessed(state.iterations() * 64);
}

void BM_LogDetParallel(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const int cols = static_cast<int>(state.range(1));
  const auto scale = flat_scale(rows, cols);
  for (auto _ : state)
    benchmark::DoNotOptimize(qfmimo::mc_log2det(scale, cols, 64, 7, qfmimo::Execution::parallel));
  state.SetItemsProcessed(state.iterations() * 64);
}

void BM_SumRate(benchmark::State& state) {
  qfmimo::NetworkParams p;
  p.m = static_cast<int>(state.range(0));
  p.beta = 3.0;
  p.trials = 50;
  const auto realization = qfmimo::place_nodes(p);
  const auto model = qfmimo::LinkCapacityModel::from_params(p);
  const auto exec = state.range(1) ? qfmimo::Execution::parallel : qfmimo::Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(qfmimo::sum_rate(realization, model, p, 10, exec));
}

}  // namespace

BENCHMARK(BM_LogDetSerial)->ArgsProduct({{8, 64, 128, 194}, {4, 16, 128}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LogDetParallel)->ArgsProduct({{8, 64, 128, 194}, {4, 16, 128}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SumRate)->ArgsProduct({{4, 8, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
