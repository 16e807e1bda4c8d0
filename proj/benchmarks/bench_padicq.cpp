#include <benchmark/benchmark.h>

#include <cmath>

#include "padicq/integrator.hpp"
#include "padicq/qnumbers.hpp"

namespace {

using namespace padicq;

// p = 3 fits the 64-bit kernel at this precision; p = 5 at M = 24 does not.
void BM_RiemannSumBosonic(benchmark::State& state) {
  const auto p = static_cast<unsigned long>(state.range(0));
  const auto level = static_cast<unsigned>(state.range(1));
  const auto m = static_cast<long>(state.range(2));
  const PrimeContext ctx(p, m, mpq_class(1 + static_cast<long>(p)));
  const auto f = UDFunction::poly({1, 2, 3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(riemann_sum_bosonic(f, 1, level, ctx));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(std::pow(p, level)));
}
BENCHMARK(BM_RiemannSumBosonic)->Args({3, 10, 12})->Args({5, 7, 12})->Args({5, 7, 24})->Args({7, 6, 10});

void BM_RiemannSumTwistedFermionic(benchmark::State& state) {
  const PrimeContext ctx(5, 12, mpq_class(6));
  const auto f = UDFunction::char_poly(quadratic_character(3, ctx), {0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(riemann_sum_fermionic(f, 3, 7, ctx));
}
BENCHMARK(BM_RiemannSumTwistedFermionic);

void BM_Invert(benchmark::State& state) {
  const auto degree = static_cast<std::size_t>(state.range(0));
  const PrimeContext ctx(5, 30, mpq_class(6));
  auto f = exp_linear(PAdicNumber::one(5, 30), degree, 30);
  // 6 e^t - 1, constant term of valuation 1.
  f = PAdicNumber::from_rational(mpq_class(6), ctx) * f - HurwitzSeries::constant(PAdicNumber::one(5, 30), degree);
  for (auto _ : state) benchmark::DoNotOptimize(invert(f));
}
BENCHMARK(BM_Invert)->Arg(8)->Arg(16)->Arg(32);

void BM_PadicLog(benchmark::State& state) {
  const auto m = static_cast<long>(state.range(0));
  const auto x = PAdicNumber::from_rational(mpq_class(6, 11), 5, m);
  for (auto _ : state) benchmark::DoNotOptimize(padic_log(x));
}
BENCHMARK(BM_PadicLog)->Arg(10)->Arg(40)->Arg(160);

void BM_QBernoulliTable(benchmark::State& state) {
  const PrimeContext ctx(3, 18, mpq_class(4));
  for (auto _ : state) benchmark::DoNotOptimize(q_bernoulli(static_cast<std::size_t>(state.range(0)), ctx));
}
BENCHMARK(BM_QBernoulliTable)->Arg(6)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
