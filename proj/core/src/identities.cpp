#include "kzw/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "kzw/bessel.hpp"
#include "kzw/divisor.hpp"
#include "kzw/erf.hpp"
#include "kzw/errors.hpp"
#include "kzw/gamma.hpp"
#include "kzw/humbert.hpp"
#include "kzw/hypergeometric.hpp"
#include "kzw/summation.hpp"
#include "kzw/zeta.hpp"

namespace kzw {

namespace {

constexpr long kNSumCap = 10000;

// Checkers evaluate their building blocks two decades tighter than the
// pass threshold so the verdict is not dominated by evaluation error.
ToleranceConfig inner_tol(const ToleranceConfig& tol) {
  ToleranceConfig inner = tol;
  inner.rel_tol = std::clamp(tol.rel_tol / 100.0, 1e-13, 1.0);
  return inner;
}

long n_cap(const ToleranceConfig& tol) {
  return std::min<long>(kNSumCap, tol.max_terms);
}

} // namespace

ModularPair::ModularPair(double a_, double b_) : a(a_), b(b_) {
  require_finite(a, "ModularPair");
  require_finite(b, "ModularPair");
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("ModularPair: a and b must be positive");
  if (std::abs(a * b - pi * pi) > 1e-14 * pi * pi)
    throw DomainError("ModularPair: a*b must equal pi^2");
}

IdentityReport make_report(const Complex& lhs, const Complex& rhs,
                           long n_terms_lhs, double tolerance) {
  IdentityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_residual = std::abs(lhs - rhs);
  // Both sides can be near zero (a = b), so the scale never drops below 1.
  r.rel_residual =
      r.abs_residual / std::max({std::abs(lhs), std::abs(rhs), 1.0});
  r.n_terms_lhs = n_terms_lhs;
  r.pass = r.rel_residual <= tolerance;
  return r;
}

std::string to_json(const IdentityReport& report) {
  nlohmann::json j;
  j["lhs"] = {{"re", report.lhs.real()}, {"im", report.lhs.imag()}};
  j["rhs"] = {{"re", report.rhs.real()}, {"im", report.rhs.imag()}};
  j["abs_residual"] = report.abs_residual;
  j["rel_residual"] = report.rel_residual;
  j["n_terms_lhs"] = report.n_terms_lhs;
  j["pass"] = report.pass;
  return j.dump();
}

namespace {

// sqrt(y) sum_n sigma_{-z}(n) n^{z/2} K_{z/2, wdef}(2 n y), truncated once
// two consecutive terms fall below rel_tol * |partial|.
Complex bessel_weighted_sum(const Complex& z, const Complex& wdef, double y,
                            const ToleranceConfig& tol, long& terms_out) {
  const Complex half_z = z / 2.0;
  const ContourSpec spec = ContourSpec::for_order(half_z, tol);
  CompensatedSum sum;
  long small_run = 0;
  for (long n = 1; n <= n_cap(tol); ++n) {
    const double dn = static_cast<double>(n);
    const Complex term = divisor_sigma(-z, n) *
                         std::exp(half_z * std::log(dn)) *
                         kzw_contour({half_z, wdef, Complex(2.0 * dn * y, 0.0)},
                                     spec, tol)
                             .value;
    sum.add(term);
    terms_out = n;
    if (std::abs(term) <= tol.rel_tol * std::abs(sum.value())) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
    }
  }
  return std::sqrt(y) * sum.value();
}

} // namespace

IdentityReport check_ramanujan_guinand(const Complex& z, const ModularPair& p,
                                       const ToleranceConfig& tol) {
  require_finite(z, "check_ramanujan_guinand");
  const ToleranceConfig inner = inner_tol(tol);

  long terms_a = 0, terms_b = 0;
  const Complex zero(0.0, 0.0);
  const Complex lhs = bessel_weighted_sum(z, zero, p.a, inner, terms_a) -
                      bessel_weighted_sum(z, zero, p.b, inner, terms_b);

  const Complex half_z = z / 2.0;
  auto pw = [](double base, const Complex& e) {
    return std::exp(e * std::log(base));
  };
  const Complex rhs =
      0.25 * gamma(half_z) * zeta(z) *
          (pw(p.b, (1.0 - z) / 2.0) - pw(p.a, (1.0 - z) / 2.0)) +
      0.25 * gamma(-half_z) * zeta(-z) *
          (pw(p.b, (1.0 + z) / 2.0) - pw(p.a, (1.0 + z) / 2.0));
  return make_report(lhs, rhs, std::max(terms_a, terms_b), tol.rel_tol);
}

IdentityReport check_generalized_ramanujan_guinand(
    const Complex& z, const Complex& w, const ModularPair& p,
    const ToleranceConfig& tol) {
  require_finite(z, "check_generalized_ramanujan_guinand");
  require_finite(w, "check_generalized_ramanujan_guinand");
  const ToleranceConfig inner = inner_tol(tol);

  const Complex i(0.0, 1.0);
  const Complex w2_4 = w * w / 4.0;
  long terms_a = 0, terms_b = 0;
  const Complex lhs =
      std::exp(-w2_4) * bessel_weighted_sum(z, i * w, p.a, inner, terms_a) -
      std::exp(w2_4) * bessel_weighted_sum(z, w, p.b, inner, terms_b);

  const Complex half(0.5, 0.0);
  auto pw = [](double base, const Complex& e) {
    return std::exp(e * std::log(base));
  };
  const Complex rhs =
      0.25 * gamma(z / 2.0) * zeta(z) *
          (pw(p.b, (1.0 - z) / 2.0) *
               hyp1f1((1.0 - z) / 2.0, half, w2_4, inner).value -
           pw(p.a, (1.0 - z) / 2.0) *
               hyp1f1((1.0 - z) / 2.0, half, -w2_4, inner).value) +
      0.25 * gamma(-z / 2.0) * zeta(-z) *
          (pw(p.b, (1.0 + z) / 2.0) *
               hyp1f1((1.0 + z) / 2.0, half, w2_4, inner).value -
           pw(p.a, (1.0 + z) / 2.0) *
               hyp1f1((1.0 + z) / 2.0, half, -w2_4, inner).value);
  return make_report(lhs, rhs, std::max(terms_a, terms_b), tol.rel_tol);
}

IdentityReport check_eta_transformation(const ModularPair& p,
                                        const ToleranceConfig& tol) {
  const ToleranceConfig inner = inner_tol(tol);
  CompensatedSum sum_a, sum_b;
  long n_terms = 0;
  long small_run = 0;
  for (long n = 1; n <= n_cap(tol); ++n) {
    const double dn = static_cast<double>(n);
    const double sig = divisor_sigma(Complex(-1.0, 0.0), n).real();
    const double ta = sig * std::exp(-2.0 * dn * p.a);
    const double tb = sig * std::exp(-2.0 * dn * p.b);
    sum_a.add(Complex(ta, 0.0));
    sum_b.add(Complex(tb, 0.0));
    n_terms = n;
    const bool small =
        ta <= inner.rel_tol * std::max(std::abs(sum_a.value()), 1e-300) &&
        tb <= inner.rel_tol * std::max(std::abs(sum_b.value()), 1e-300);
    if (small) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
    }
  }
  const Complex lhs = sum_a.value() - sum_b.value();
  const Complex rhs((p.b - p.a) / 12.0 + 0.25 * std::log(p.a / p.b), 0.0);
  return make_report(lhs, rhs, n_terms, tol.rel_tol);
}

namespace {

// Inner Humbert-series factor of the generalized eta sums:
//   sum_r (w^4 u^2 / 16)^r / (r! (1/2)_r (1/2)_{2r})
//         Phi3(1/2; 1/2+2r; s w^2/4, s w^2 u / 2),  s = +-1, u = n a or n b,
// truncated by the same rule as the khalf series.
Complex eta_humbert_factor(double w, double u, double sgn,
                           const ToleranceConfig& tol) {
  const double w2 = w * w;
  const Complex phi_x(sgn * w2 / 4.0, 0.0);
  const Complex phi_y(sgn * w2 * u / 2.0, 0.0);
  const double growth = w2 * w2 * u * u / 16.0;

  constexpr long kRCap = 64;
  CompensatedSum sum;
  double coef = 1.0;
  long small_run = 0;
  for (long r = 0; r < kRCap; ++r) {
    const double dr = static_cast<double>(r);
    const EvalResult ph =
        phi3(Complex(0.5, 0.0), Complex(0.5 + 2.0 * dr, 0.0), phi_x, phi_y,
             tol);
    sum.add(coef * ph.value);
    const double metric = std::abs(coef) * (1.0 + std::abs(ph.value));
    if (metric < tol.rel_tol * std::abs(sum.value())) {
      if (++small_run >= 2) return sum.value();
    } else {
      small_run = 0;
    }
    coef *= growth /
            ((dr + 1.0) * (0.5 + dr) * (0.5 + 2.0 * dr) * (1.5 + 2.0 * dr));
  }
  EvalResult partial;
  partial.value = sum.value();
  partial.converged = false;
  throw ConvergenceError("check_generalized_eta: r-series cap reached",
                         partial);
}

} // namespace

IdentityReport check_generalized_eta(double w, const ModularPair& p,
                                     const ToleranceConfig& tol) {
  require_finite(w, "check_generalized_eta");
  const ToleranceConfig inner = inner_tol(tol);
  const double w2 = w * w;

  CompensatedSum sum_a, sum_b;
  long n_terms = 0;
  long small_run = 0;
  for (long n = 1; n <= n_cap(tol); ++n) {
    const double dn = static_cast<double>(n);
    const double sig = divisor_sigma(Complex(-1.0, 0.0), n).real();
    const Complex ta = sig * std::exp(-2.0 * dn * p.a) *
                       eta_humbert_factor(w, dn * p.a, +1.0, inner);
    const Complex tb = sig * std::exp(-2.0 * dn * p.b) *
                       eta_humbert_factor(w, dn * p.b, -1.0, inner);
    sum_a.add(ta);
    sum_b.add(tb);
    n_terms = n;
    const bool small =
        std::abs(ta) <=
            inner.rel_tol * std::max(std::abs(sum_a.value()), 1e-300) &&
        std::abs(tb) <=
            inner.rel_tol * std::max(std::abs(sum_b.value()), 1e-300);
    if (small) {
      if (++small_run >= 2) break;
    } else {
      small_run = 0;
    }
  }
  const Complex lhs =
      std::exp(-w2 / 4.0) * sum_a.value() - std::exp(w2 / 4.0) * sum_b.value();

  const Complex half(0.5, 0.0);
  const Complex f22p =
      hyp2f2(1.0, 1.0, 1.5, 2.0, Complex(w2 / 4.0, 0.0), inner).value;
  const Complex f22m =
      hyp2f2(1.0, 1.0, 1.5, 2.0, Complex(-w2 / 4.0, 0.0), inner).value;
  const Complex erf_half = erf(Complex(w / 2.0, 0.0));
  const Complex erfi_half = erfi(Complex(w / 2.0, 0.0));
  const Complex rhs =
      0.25 * (std::log(p.a / p.b) - (w2 / 2.0) * (f22p + f22m)) +
      (1.0 / 12.0) *
          (p.b * (1.0 + (w * sqrt_pi / 2.0) * std::exp(w2 / 4.0) * erf_half) -
           p.a * (1.0 - (w * sqrt_pi / 2.0) * std::exp(-w2 / 4.0) * erfi_half));
  return make_report(lhs, rhs, n_terms, tol.rel_tol);
}

} // namespace kzw
