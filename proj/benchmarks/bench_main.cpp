#include "oscgauss/analysis.hpp"
#include "oscgauss/oracle.hpp"
#include "oscgauss/roots.hpp"
#include "oscgauss/rules.hpp"

#include <benchmark/benchmark.h>

using namespace oscgauss;

namespace {

void BM_MomentTable(benchmark::State& state) {
  const long bits = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(moment_table(Real(50), 64, bits));
}
BENCHMARK(BM_MomentTable)->Arg(128)->Arg(256)->Arg(1024);

void BM_OrthogonalPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orthogonal_polynomial(n, Real(40)));
}
BENCHMARK(BM_OrthogonalPolynomial)->RangeMultiplier(2)->Range(2, 32);

void BM_Roots(benchmark::State& state) {
  const MonicPolynomial p = orthogonal_polynomial(static_cast<int>(state.range(0)), Real(40));
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_roots(p));
}
BENCHMARK(BM_Roots)->RangeMultiplier(2)->Range(2, 32);

void BM_GaussOscillatory(benchmark::State& state) {
  const long bits = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_oscillatory(8, Real(25), bits));
}
BENCHMARK(BM_GaussOscillatory)->Arg(128)->Arg(256)->Arg(512);

void BM_Superinterpolation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(superinterpolation_rule(static_cast<int>(state.range(0)), Real(200)));
}
BENCHMARK(BM_Superinterpolation)->Arg(1)->Arg(4)->Arg(8);

void BM_Continuation(benchmark::State& state) {
  std::vector<Real> grid;
  {
    PrecisionScope scope(kDefaultPrecisionBits);
    grid = linear_grid(Real(0.01), Real(10), static_cast<int>(state.range(0)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(continue_roots(4, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Continuation)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const double omega = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference_integral(Integrand::sin(), Real(omega), 1e-30));
}
BENCHMARK(BM_Oracle)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_BreakdownScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(breakdown_scan(2, 0.1, 20.0, 0.01));
}
BENCHMARK(BM_BreakdownScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
