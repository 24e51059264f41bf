#include <benchmark/benchmark.h>

#include "kzw/bessel.hpp"
#include "kzw/erf.hpp"
#include "kzw/gamma.hpp"
#include "kzw/humbert.hpp"
#include "kzw/hypergeometric.hpp"
#include "kzw/identities.hpp"
#include "kzw/voigt.hpp"
#include "kzw/zeta.hpp"

using kzw::Complex;

namespace {

const kzw::ToleranceConfig kTol{1e-12, 100000, 200};

void BM_gamma(benchmark::State& state) {
  const Complex s(0.375, 12.5);
  for (auto _ : state) benchmark::DoNotOptimize(kzw::gamma(s));
}
BENCHMARK(BM_gamma);

void BM_log_gamma(benchmark::State& state) {
  const Complex s(0.375, 60.0);
  for (auto _ : state) benchmark::DoNotOptimize(kzw::log_gamma(s));
}
BENCHMARK(BM_log_gamma);

void BM_zeta(benchmark::State& state) {
  const Complex s(2.5, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(kzw::zeta(s));
}
BENCHMARK(BM_zeta);

void BM_erf(benchmark::State& state) {
  const Complex z(1.3, -0.7);
  for (auto _ : state) benchmark::DoNotOptimize(kzw::erf(z));
}
BENCHMARK(BM_erf);

void BM_hyp1f1(benchmark::State& state) {
  const Complex a(0.6, 8.0), c(0.5, 0.0), z(-0.09, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(kzw::hyp1f1(a, c, z, kTol));
}
BENCHMARK(BM_hyp1f1);

void BM_phi3(benchmark::State& state) {
  const Complex a(0.5, 0), c(2.5, 0), x(-0.09, 0), y(-3.0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(kzw::phi3(a, c, x, y, kTol));
}
BENCHMARK(BM_phi3);

void BM_khalf_series(benchmark::State& state) {
  const Complex w(0.6, 0), x(2.0, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(kzw::khalf_series(w, x, kTol));
}
BENCHMARK(BM_khalf_series);

void BM_kzw_contour(benchmark::State& state) {
  const kzw::KzwPoint p{Complex(0.5, 0), Complex(0.6, 0), Complex(1.0, 0)};
  const auto spec = kzw::ContourSpec::for_order(p.z, kTol);
  for (auto _ : state)
    benchmark::DoNotOptimize(kzw::kzw_contour(p, spec, kTol));
}
BENCHMARK(BM_kzw_contour);

void BM_voigt_cdf(benchmark::State& state) {
  const kzw::VoigtParams p(1.0, 0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(kzw::voigt_cdf(1.5, p, kTol));
}
BENCHMARK(BM_voigt_cdf);

void BM_check_eta(benchmark::State& state) {
  const kzw::ModularPair pair(kzw::pi / 2, 2 * kzw::pi);
  kzw::ToleranceConfig tol = kTol;
  tol.rel_tol = 1e-8;
  for (auto _ : state)
    benchmark::DoNotOptimize(kzw::check_eta_transformation(pair, tol));
}
BENCHMARK(BM_check_eta);

} // namespace

BENCHMARK_MAIN();
