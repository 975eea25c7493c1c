// Serial reference vs cached kernels (serial and OpenMP) on a two-model
// pair over Uniform(0, 1).

#include <benchmark/benchmark.h>

#include <vector>

#include "promptpricing/kernels.hpp"
#include "promptpricing/reference.hpp"

namespace pp = promptpricing;

namespace {

const pp::ModelSet& pair_models() {
  static const pp::ModelSet models({pp::GaiModel("L", 1.0, 0.02), pp::GaiModel("H", 1.8, 0.04)});
  return models;
}

const pp::AmbiguityDistribution& uniform() {
  static const auto dist = pp::AmbiguityDistribution::uniform(0.0, 1.0);
  return dist;
}

std::vector<double> axis(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  for (std::size_t j = 1; j <= n; ++j) out.push_back(lo + (hi - lo) * double(j) / double(n));
  return out;
}

void BM_ReferencePayoff(benchmark::State& state) {
  pp::PriceSchedule schedule;
  schedule.set("L", 0.5);
  schedule.set("H", 0.9);
  const pp::QuadratureConfig quad{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pp::reference::platform_payoff(pair_models(), schedule, uniform(), quad));
  }
}

void BM_KernelPayoff(benchmark::State& state) {
  const pp::QuadratureConfig quad{static_cast<std::size_t>(state.range(0))};
  const pp::NodeTable table(uniform(), quad);
  const double prices[] = {0.5, 0.9};
  const auto priced = pp::price_models(pair_models(), prices);
  for (auto _ : state) benchmark::DoNotOptimize(pp::evaluate_schedule(table, priced));
}

void lattice(benchmark::State& state, pp::Execution exec) {
  const pp::NodeTable table(uniform(), pp::QuadratureConfig{});
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto low = axis(0.02, 1.0, n);
  const auto high = axis(0.04, 1.8, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pp::lattice_payoffs(table, pair_models(), low, high, exec));
  }
}

void BM_LatticeSerial(benchmark::State& state) { lattice(state, pp::Execution::Serial); }
void BM_LatticeParallel(benchmark::State& state) { lattice(state, pp::Execution::Parallel); }

}  // namespace

BENCHMARK(BM_ReferencePayoff)->Arg(2001);
BENCHMARK(BM_KernelPayoff)->Arg(2001);
BENCHMARK(BM_LatticeSerial)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LatticeParallel)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
