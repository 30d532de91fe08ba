#include <benchmark/benchmark.h>

#include "lnrelay/analytic.hpp"
#include "lnrelay/channel.hpp"
#include "lnrelay/model.hpp"
#include "lnrelay/montecarlo.hpp"
#include "lnrelay/numerics.hpp"
#include "lnrelay/optimize.hpp"

using namespace lnrelay;

namespace {
const model::SystemConfig kConfig{};
}

static void BM_Erfc(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerics::erfc(x));
    x = x < 6.0 ? x + 1e-3 : 0.0;
  }
}
BENCHMARK(BM_Erfc);

static void BM_GaussWeightedIntegral(benchmark::State& state) {
  auto weight = [](double u) { return 0.5 * (1.0 + std::erf(0.3 - 0.7 * u)); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerics::gauss_weighted_integral(-1.2, weight));
  }
}
BENCHMARK(BM_GaussWeightedIntegral);

static void BM_SampleGainSq(benchmark::State& state) {
  channel::RandomStream rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(channel::sample_gain_sq(rng, kConfig.hop1));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SampleGainSq);

static void BM_AnalyticOutageTsr(benchmark::State& state) {
  const auto proto = model::Protocol::tsr(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic::outage(kConfig, proto, 1.0));
  }
}
BENCHMARK(BM_AnalyticOutageTsr);

static void BM_AnalyticOutagePsr(benchmark::State& state) {
  const auto proto = model::Protocol::psr(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic::outage(kConfig, proto, 1.0));
  }
}
BENCHMARK(BM_AnalyticOutagePsr);

static void BM_AnalyticOutageIrr(benchmark::State& state) {
  const auto proto = model::Protocol::irr();
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic::outage(kConfig, proto, 1.0));
  }
}
BENCHMARK(BM_AnalyticOutageIrr);

static void BM_MonteCarloOutage(benchmark::State& state) {
  const auto proto = model::Protocol::psr(0.5);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(montecarlo::estimate_outage(kConfig, proto, 1.0, n, 42, 1));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_MonteCarloOutage)->Arg(1 << 14)->Arg(1 << 17);

static void BM_OptimizeFactorPsr(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        optimize::optimize_factor(kConfig, model::ProtocolKind::kPsr, 1.0));
  }
}
BENCHMARK(BM_OptimizeFactorPsr)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
