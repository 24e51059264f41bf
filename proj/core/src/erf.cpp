#include "kzw/erf.hpp"

#include <cmath>
#include <vector>

#include "kzw/errors.hpp"

namespace kzw {

namespace {

// Weideman's rational approximation of the Faddeeva function on the closed
// upper half plane (SIAM J. Numer. Anal. 31 (1994) 1497). The expansion
// coefficients are Fourier coefficients of exp(-t^2)(L^2 + t^2) under the
// Moebius map t = L tan(theta/2); computed once by direct DFT.
constexpr int kWeidemanN = 48;

struct WeidemanTable {
  double L;
  std::vector<double> a; // a[0] multiplies Z^0, ..., a[N-1] multiplies Z^{N-1}
};

const WeidemanTable& weideman_table() {
  static const WeidemanTable table = [] {
    WeidemanTable t;
    const int N = kWeidemanN;
    const int M = 2 * N;
    t.L = std::sqrt(N / std::sqrt(2.0));
    // Samples of exp(-x^2)(L^2 + x^2) at theta_j = -pi + j pi / M,
    // j = 0..2M-1; the j = 0 sample (theta = -pi, x = inf) vanishes.
    std::vector<double> g(2 * M, 0.0);
    for (int j = 1; j < 2 * M; ++j) {
      const double theta = -pi + j * pi / M;
      const double x = t.L * std::tan(theta / 2.0);
      g[j] = std::exp(-x * x) * (t.L * t.L + x * x);
    }
    t.a.resize(N);
    for (int n = 1; n <= N; ++n) {
      double acc = 0.0;
      for (int j = 0; j < 2 * M; ++j) {
        const double theta = -pi + j * pi / M;
        acc += g[j] * std::cos(n * theta);
      }
      t.a[n - 1] = acc / (2.0 * M);
    }
    return t;
  }();
  return table;
}

// Faddeeva w on Im z >= 0.
Complex faddeeva_upper(const Complex& z) {
  const WeidemanTable& t = weideman_table();
  const Complex iz(-z.imag(), z.real());
  const Complex denom = t.L - iz;
  const Complex Z = (t.L + iz) / denom;
  Complex p(0.0, 0.0);
  for (int n = kWeidemanN - 1; n >= 0; --n) p = p * Z + t.a[n];
  return 2.0 * p / (denom * denom) + (1.0 / sqrt_pi) / denom;
}

// Maclaurin series of erf, used near the origin where the Faddeeva route
// would cancel; at |z| <= 0.75 the largest term is e^{|z|^2} < 2, so no
// digits are lost.
Complex erf_series(const Complex& z) {
  const Complex z2 = z * z;
  Complex term = z;
  Complex sum = z;
  for (int n = 1; n < 64; ++n) {
    term *= -z2 / static_cast<double>(n);
    const Complex contrib = term / (2.0 * n + 1.0);
    sum += contrib;
    if (std::abs(contrib) <= 1e-18 * std::abs(sum)) break;
  }
  return (2.0 / sqrt_pi) * sum;
}

} // namespace

Complex faddeeva_w(const Complex& z) {
  require_finite(z, "faddeeva_w");
  if (z.imag() >= 0.0) return faddeeva_upper(z);
  // w(z) = 2 e^{-z^2} - w(-z); the exponential is the genuine growth of w
  // in the lower half plane.
  const Complex val = 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
  if (!is_finite(val))
    throw DomainError("faddeeva_w: overflow in lower half plane");
  return val;
}

Complex erf(const Complex& z) {
  require_finite(z, "erf");
  if (std::abs(z) <= 0.75) return erf_series(z);
  if (z.real() < 0.0) return -erf(-z); // odd
  // erf(z) = 1 - e^{-z^2} w(iz); iz lies in the upper half plane here.
  const Complex iz(-z.imag(), z.real());
  const Complex val = 1.0 - std::exp(-z * z) * faddeeva_upper(iz);
  if (!is_finite(val)) throw DomainError("erf: overflow");
  return val;
}

Complex erfi(const Complex& z) {
  require_finite(z, "erfi");
  const Complex iz(-z.imag(), z.real());
  const Complex e = erf(iz);
  return {e.imag(), -e.real()}; // -i erf(iz)
}

} // namespace kzw
