#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "volterra/criteria.hpp"
#include "volterra/quadrature.hpp"
#include "volterra/series.hpp"
#include "volterra/spaces.hpp"
#include "volterra/symbols.hpp"

using namespace volterra;

namespace {

TaylorSeries random_series(std::size_t degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<Complex> c(degree + 1);
  for (auto& x : c) x = Complex(nd(rng), nd(rng));
  return TaylorSeries(std::move(c));
}

void BM_CauchyProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TaylorSeries f = random_series(n, 1), g = random_series(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_product(f, g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CauchyProduct)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_RadialQuadrature(benchmark::State& state) {
  const SymbolSpec& g = *find_symbol("log");
  const double t = 1.0 - std::exp2(-static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(radial_integral(g, 0.0, 0.5, t));
}
BENCHMARK(BM_RadialQuadrature)->DenseRange(4, 40, 12);

void BM_LadderSweep(benchmark::State& state) {
  const SymbolSpec& g = *find_symbol("koebe1");
  LadderConfig cfg;
  cfg.k_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(boundedness_Tg_integral(g, SpacePair(0.0, 1.0), cfg));
}
BENCHMARK(BM_LadderSweep)->Arg(12)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_SupNorm(benchmark::State& state) {
  const auto f = FunctionHandle::from_series(random_series(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(weighted_sup_norm(f, 1.0));
}
BENCHMARK(BM_SupNorm)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
