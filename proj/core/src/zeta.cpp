#include "kzw/zeta.hpp"

#include <cmath>
#include <vector>

#include "kzw/errors.hpp"
#include "kzw/gamma.hpp"

namespace kzw {

namespace {

// Borwein's accelerated alternating-series algorithm. With n = 50 the
// method error is ~(3 + sqrt(8))^{-50} ~ 6e-39 times a factor growing like
// e^{pi |Im s| / 2}, far below double precision everywhere this library
// evaluates (moderate |Im s|, Re s > 0).
constexpr int kBorweinN = 50;

const std::vector<double>& borwein_d() {
  static const std::vector<double> d = [] {
    std::vector<double> out(kBorweinN + 1, 0.0);
    // d_k = n * sum_{i=0}^k (n+i-1)! 4^i / ((n-i)! (2i)!)
    double term = 1.0 / kBorweinN; // i = 0 value of (n+i-1)!/((n-i)! (2i)!)
    double acc = term;
    out[0] = kBorweinN * acc;
    for (int i = 1; i <= kBorweinN; ++i) {
      term *= 4.0 * (kBorweinN + i - 1.0) * (kBorweinN - i + 1.0) /
              ((2.0 * i) * (2.0 * i - 1.0));
      acc += term;
      out[i] = kBorweinN * acc;
    }
    return out;
  }();
  return d;
}

// 1 - e^u without cancellation for small |u|.
Complex one_minus_exp(const Complex& u) {
  if (std::abs(u) > 1e-4) return 1.0 - std::exp(u);
  return -(u + u * u / 2.0 + u * u * u / 6.0 + u * u * u * u / 24.0);
}

Complex zeta_borwein(const Complex& s) {
  const auto& d = borwein_d();
  Complex sum(0.0, 0.0);
  double sign = 1.0;
  for (int k = 0; k < kBorweinN; ++k) {
    sum += sign * (d[k] - d[kBorweinN]) *
           std::exp(-s * std::log(static_cast<double>(k + 1)));
    sign = -sign;
  }
  const Complex eta_scale = one_minus_exp((1.0 - s) * std::log(2.0));
  return -sum / (d[kBorweinN] * eta_scale);
}

} // namespace

Complex zeta(const Complex& s) {
  require_finite(s, "zeta");
  if (std::abs(s - 1.0) <= 1e-14) throw PoleError("zeta: pole at s = 1");
  if (s.real() >= 0.5) return zeta_borwein(s);
  // zeta(0) = -1/2; near the origin the reflection below degenerates to
  // 0 * pole, so use the Taylor expansion instead.
  if (std::abs(s) <= 1e-7)
    return Complex(-0.5, 0.0) - 0.91893853320467274178 * s;
  // Functional equation: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s)
  // zeta(1-s); 1 - s lands in the Borwein region.
  const Complex one_minus_s = 1.0 - s;
  return std::pow(Complex(2.0, 0.0), s) * std::pow(Complex(pi, 0.0), s - 1.0) *
         std::sin(pi * s / 2.0) * gamma(one_minus_s) *
         zeta_borwein(one_minus_s);
}

} // namespace kzw
