#include "kzw/bessel.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "kzw/errors.hpp"
#include "kzw/gamma.hpp"
#include "kzw/humbert.hpp"
#include "kzw/hypergeometric.hpp"
#include "kzw/quadrature.hpp"
#include "kzw/summation.hpp"

namespace kzw {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145817657;

// One width-2 panel, 24-point rule with a 16-point companion. The error of
// the high rule is estimated QUADPACK-style from the rule difference scaled
// against the integral of |f| over the panel.
struct Panel {
  Complex value;
  double err;
};

Panel eval_panel(const std::function<Complex(double)>& f, double a, double b) {
  const GaussLegendreRule& hi_rule = gauss_legendre(24);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex hi(0.0, 0.0);
  double scale = 0.0;
  for (int i = 0; i < 24; ++i) {
    const Complex fx = f(mid + half * hi_rule.nodes[i]);
    hi += hi_rule.weights[i] * fx;
    scale += hi_rule.weights[i] * std::abs(fx);
  }
  hi *= half;
  scale *= half;
  const Complex lo = gl_integrate(f, a, b, 16);
  const double diff = std::abs(hi - lo);
  double err = diff;
  if (scale > 0.0)
    err = std::min(diff, scale * std::pow(std::min(1.0, 200.0 * diff / scale),
                                          1.5));
  return {hi, err};
}

// Panel pair [2k, 2k+2] and [-2k-2, -2k].
Panel eval_ring(const std::function<Complex(double)>& f, long k) {
  const double a = 2.0 * static_cast<double>(k);
  const double b = a + 2.0;
  const Panel pos = eval_panel(f, a, b);
  const Panel neg = eval_panel(f, -b, -a);
  return {pos.value + neg.value, pos.err + neg.err};
}

// (1/2 pi) \int_{-T}^T f(t) dt with T doubled from 16 until the last
// doubling moves the result by less than quad_rel_tol, capped at the
// contour-height limit. Rings are accumulated outward from t = 0 in a fixed
// order, so the result is deterministic for fixed inputs.
EvalResult contour_integrate(const std::function<Complex(double)>& f,
                             const ContourSpec& spec,
                             const ToleranceConfig& tol, const char* name) {
  const double cap = std::min(spec.t_max, tol.max_contour_height);
  const long max_rings = static_cast<long>(std::floor(cap / 2.0));
  if (max_rings < 1)
    throw ContourError(std::string(name) + ": contour height cap below 2");

  CompensatedSum acc;
  double quad_err = 0.0;
  long nodes = 0;
  long rings = 0;

  auto add_rings = [&](long upto) {
    for (; rings < upto; ++rings) {
      if (2 * rings >= spec.max_panels)
        throw ContourError(std::string(name) + ": panel budget exhausted");
      const Panel r = eval_ring(f, rings);
      acc.add(r.value);
      quad_err += r.err;
      nodes += 80;
    }
  };

  long target = std::min<long>(8, max_rings); // T = 16 to start
  add_rings(target);
  Complex prev = acc.value();
  double last_change = std::numeric_limits<double>::infinity();
  bool tail_ok = false;
  while (true) {
    const long next = std::min(2 * target, max_rings);
    if (next == target) break; // cap reached without meeting the test
    add_rings(next);
    target = next;
    last_change = std::abs(acc.value() - prev);
    prev = acc.value();
    if (last_change <=
        spec.quad_rel_tol * std::max(1.0, std::abs(acc.value()))) {
      tail_ok = true;
      break;
    }
  }

  const double T = 2.0 * static_cast<double>(rings);
  // Stirling decay e^{-pi t / 2} bounds the tail by ~(2/pi) |f(T)| per side.
  const double tail_est = (std::abs(f(T)) + std::abs(f(-T))) * (2.0 / pi);
  const double change = std::isfinite(last_change) ? last_change : 0.0;
  if (!tail_ok && tail_est + change >
                      spec.quad_rel_tol * std::max(1.0, std::abs(acc.value())))
    throw ContourError(std::string(name) +
                       ": tail above tolerance at the contour-height cap");

  EvalResult out;
  out.value = acc.value() / (2.0 * pi);
  out.abs_err = (quad_err + tail_est + change +
                 std::numeric_limits<double>::epsilon() *
                     acc.magnitude_sum()) /
                (2.0 * pi);
  out.terms_used = nodes;
  out.converged = out.abs_err <= tol_abs(tol, out.value);
  return out;
}

void check_point(const KzwPoint& p, const char* name) {
  require_finite(p.z, name);
  require_finite(p.w, name);
  require_finite(p.x, name);
  if (on_negative_real_cut(p.x))
    throw DomainError(std::string(name) + ": x on the branch cut (x <= 0)");
}

} // namespace

ContourSpec ContourSpec::for_order(const Complex& z,
                                   const ToleranceConfig& tol) {
  ContourSpec spec;
  spec.abscissa_c = std::abs(z.real()) + 0.75;
  spec.t_max = tol.max_contour_height;
  spec.quad_rel_tol = tol.rel_tol;
  return spec;
}

EvalResult kzw_contour(const KzwPoint& p, const ContourSpec& spec,
                       const ToleranceConfig& tol) {
  check_point(p, "kzw_contour");
  if (!(spec.abscissa_c > std::abs(p.z.real())))
    throw DomainError("kzw_contour: abscissa must exceed |Re z|");

  const double c = spec.abscissa_c;
  const Complex log_x = std::log(p.x);
  const Complex w2arg = -p.w * p.w / 4.0;
  const bool with_f1 = p.w != Complex(0.0, 0.0);

  auto f = [&](double t) -> Complex {
    const Complex s(c, t);
    const Complex u1 = (s - p.z) / 2.0;
    const Complex u2 = (s + p.z) / 2.0;
    Complex val = std::exp(log_gamma(u1) + log_gamma(u2) + (s - 2.0) * kLn2 -
                           s * log_x);
    if (with_f1)
      val *= hyp1f1(u1, Complex(0.5, 0.0), w2arg, tol).value *
             hyp1f1(u2, Complex(0.5, 0.0), w2arg, tol).value;
    return val;
  };
  return contour_integrate(f, spec, tol, "kzw_contour");
}

EvalResult kzw_contour(const KzwPoint& p, const ToleranceConfig& tol) {
  return kzw_contour(p, ContourSpec::for_order(p.z, tol), tol);
}

EvalResult kzw_contour_half_order(const Complex& w, const Complex& x,
                                  const ContourSpec& spec,
                                  const ToleranceConfig& tol) {
  require_finite(w, "kzw_contour_half_order");
  require_finite(x, "kzw_contour_half_order");
  if (on_negative_real_cut(x))
    throw DomainError("kzw_contour_half_order: x on the branch cut");
  if (!(spec.abscissa_c > 0.5))
    throw DomainError("kzw_contour_half_order: abscissa must exceed 1/2");

  const double c = spec.abscissa_c;
  const Complex log_x = std::log(x);
  const Complex w2arg = -w * w / 4.0;
  const double pre = std::sqrt(pi / 2.0);
  const bool with_f1 = w != Complex(0.0, 0.0);

  auto f = [&](double t) -> Complex {
    const Complex s(c, t);
    Complex val = pre * std::exp(log_gamma(s - 0.5) - s * log_x);
    if (with_f1)
      val *= hyp1f1(s / 2.0 - 0.25, Complex(0.5, 0.0), w2arg, tol).value *
             hyp1f1(s / 2.0 + 0.25, Complex(0.5, 0.0), w2arg, tol).value;
    return val;
  };
  return contour_integrate(f, spec, tol, "kzw_contour_half_order");
}

Complex k_half_closed(const Complex& x) {
  require_finite(x, "k_half_closed");
  if (on_negative_real_cut(x))
    throw DomainError("k_half_closed: x on the branch cut (x <= 0)");
  return std::sqrt(pi / (2.0 * x)) * std::exp(-x);
}

IdentityReport inverse_mellin_lemma(long n, const Complex& x,
                                    const ContourSpec& spec,
                                    const ToleranceConfig& tol) {
  require_finite(x, "inverse_mellin_lemma");
  if (n < 0) throw DomainError("inverse_mellin_lemma: n must be >= 0");
  if (on_negative_real_cut(x))
    throw DomainError("inverse_mellin_lemma: x on the branch cut");
  if (!(spec.abscissa_c > 0.5 && spec.abscissa_c < 1.0))
    throw DomainError(
        "inverse_mellin_lemma: abscissa must lie in the strip (1/2, 1)");

  const double c = spec.abscissa_c;
  const Complex log_x = std::log(x);
  const double dn = static_cast<double>(n);
  auto f = [&](double t) -> Complex {
    const Complex s(c, t);
    return std::exp(log_gamma(s - 0.5) + log_gamma(s + dn) - log_gamma(s) -
                    s * log_x);
  };
  const EvalResult lhs = contour_integrate(f, spec, tol, "inverse_mellin_lemma");

  const double parity = (n % 2 == 0) ? 1.0 : -1.0;
  const Complex rhs = parity * std::sqrt(pi / x) *
                      hyp1f1(Complex(0.5, 0.0), Complex(0.5 - dn, 0.0), -x,
                             tol).value /
                      gamma(Complex(0.5 - dn, 0.0));
  return make_report(lhs.value, rhs, lhs.terms_used, tol.rel_tol);
}

IdentityReport inverse_mellin_lemma(long n, const Complex& x,
                                    const ToleranceConfig& tol) {
  ContourSpec spec;
  spec.abscissa_c = 0.75;
  spec.t_max = tol.max_contour_height;
  spec.quad_rel_tol = tol.rel_tol;
  return inverse_mellin_lemma(n, x, spec, tol);
}

EvalResult khalf_series(const Complex& w, const Complex& x,
                        const ToleranceConfig& tol) {
  require_finite(w, "khalf_series");
  require_finite(x, "khalf_series");
  if (on_negative_real_cut(x))
    throw DomainError("khalf_series: x on the branch cut (x <= 0)");

  const Complex pre = std::sqrt(pi / (2.0 * x)) * std::exp(-x);
  EvalResult out;
  if (w == Complex(0.0, 0.0)) {
    // Only the r = 0 term survives: Phi3(1/2; 1/2; 0, 0) = 1.
    out.value = pre;
    out.abs_err = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(pre);
    out.terms_used = 1;
    out.converged = true;
    return out;
  }

  const Complex w2 = w * w;
  const Complex phi_x = -w2 / 4.0;
  const Complex phi_y = -w2 * x / 4.0;
  const Complex growth = w2 * w2 * x * x / 64.0; // ratio numerator per r

  constexpr long kRCap = 64;
  CompensatedSum sum;
  double err_acc = 0.0;
  long terms = 0;
  Complex coef(1.0, 0.0); // (w^4 x^2 / 64)^r / (r! (1/2)_r (1/2)_{2r})
  long small_run = 0;
  for (long r = 0; r < kRCap; ++r) {
    const double dr = static_cast<double>(r);
    const EvalResult ph =
        phi3(Complex(0.5, 0.0), Complex(0.5 + 2.0 * dr, 0.0), phi_x, phi_y,
             tol);
    sum.add(coef * ph.value);
    err_acc += std::abs(coef) * ph.abs_err;
    terms += ph.terms_used;

    // The Phi3 factors tend to 1 as r grows, so the coefficient bounds the
    // tail: stop on two consecutive small r-terms.
    const double metric = std::abs(coef) * (1.0 + std::abs(ph.value));
    if (metric < tol.rel_tol * std::abs(sum.value())) {
      if (++small_run >= 2) {
        out.value = pre * sum.value();
        out.abs_err = std::abs(pre) *
                      (err_acc + metric +
                       std::numeric_limits<double>::epsilon() *
                           sum.magnitude_sum());
        out.terms_used = terms;
        out.converged = out.abs_err <= tol_abs(tol, out.value);
        return out;
      }
    } else {
      small_run = 0;
    }
    coef *= growth / ((dr + 1.0) * (0.5 + dr) * (0.5 + 2.0 * dr) *
                      (1.5 + 2.0 * dr));
  }
  EvalResult partial;
  partial.value = pre * sum.value();
  partial.terms_used = terms;
  partial.converged = false;
  throw ConvergenceError("khalf_series: r-series cap (64) reached", partial);
}

Complex kzw_asymptotic(const KzwPoint& p) {
  check_point(p, "kzw_asymptotic");
  if (std::abs(std::arg(p.x)) >= pi / 4.0)
    throw DomainError("kzw_asymptotic: requires |arg x| < pi/4");

  const Complex z2 = p.z * p.z;
  const Complex w2 = p.w * p.w;
  const Complex rt2x = std::sqrt(2.0 * p.x);
  const Complex P = 1.0 + (32.0 * z2 - 3.0 * w2 - 8.0) / (64.0 * p.x);
  const Complex Q = p.w / (4.0 * rt2x);
  const Complex R = 1.0 + (4.0 * z2 - 1.0) * (2.0 - w2) / (16.0 * p.x);
  const Complex phase = p.w * rt2x;
  return 0.5 * std::sqrt(pi / (2.0 * p.x)) * std::exp(-p.x) *
         (std::cos(phase) * P - std::sin(phase) * Q +
          std::exp(-w2 / 4.0) * R);
}

} // namespace kzw
