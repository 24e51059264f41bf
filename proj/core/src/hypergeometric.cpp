#include "kzw/hypergeometric.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "kzw/errors.hpp"
#include "kzw/gamma.hpp"
#include "kzw/summation.hpp"

namespace kzw {

namespace {

constexpr double kIntegerWindow = 1e-12; // terminating-series detection

// Generic pFq term summation (p, q <= 2 is all this library needs).
// Stopping: three consecutive terms below rel_tol * |partial|; a transient
// zero term near a sign change of the Pochhammer products must not stop
// the sum on its own.
EvalResult sum_pfq(const Complex* num, int p, const Complex* den, int q,
                   const Complex& z, const ToleranceConfig& tol,
                   const char* name) {
  // Earliest terminating numerator, if any.
  long n_term = -1;
  for (int i = 0; i < p; ++i) {
    const long idx = nonpositive_integer_index(num[i], kIntegerWindow);
    if (idx >= 0 && (n_term < 0 || idx < n_term)) n_term = idx;
  }
  for (int i = 0; i < q; ++i) {
    const long idx = nonpositive_integer_index(den[i], kIntegerWindow);
    if (idx >= 0 && !(n_term >= 0 && n_term <= idx))
      throw ParameterError(std::string(name) +
                           ": nonpositive-integer denominator parameter "
                           "without terminating escape");
  }

  CompensatedSum sum;
  Complex term(1.0, 0.0);
  long small_run = 0;
  for (long m = 0;; ++m) {
    sum.add(term);
    if (n_term >= 0 && m == n_term) {
      // Exact termination: |a|+1 terms, no truncation error.
      EvalResult out;
      out.value = sum.value();
      out.terms_used = m + 1;
      out.abs_err = std::numeric_limits<double>::epsilon() *
                    sum.magnitude_sum();
      out.converged = true;
      return out;
    }
    if (n_term < 0) {
      if (std::abs(term) <= tol.rel_tol * std::abs(sum.value())) {
        if (++small_run >= 3) {
          // The omitted tail is bounded by the last (already tiny) term:
          // the term ratio is well below 1 once the factorial denominators
          // dominate.
          EvalResult out;
          out.value = sum.value();
          out.terms_used = m + 1;
          out.abs_err = std::abs(term) +
                        std::numeric_limits<double>::epsilon() *
                            sum.magnitude_sum();
          out.converged = out.abs_err <= tol_abs(tol, out.value);
          return out;
        }
      } else {
        small_run = 0;
      }
    }
    if (m + 1 >= tol.max_terms) {
      EvalResult partial;
      partial.value = sum.value();
      partial.terms_used = m + 1;
      partial.abs_err = std::abs(term);
      partial.converged = false;
      throw ConvergenceError(std::string(name) + ": max_terms exceeded",
                             partial);
    }
    Complex ratio = z / static_cast<double>(m + 1);
    for (int i = 0; i < p; ++i) ratio *= num[i] + static_cast<double>(m);
    for (int i = 0; i < q; ++i) ratio /= den[i] + static_cast<double>(m);
    term *= ratio;
  }
}

} // namespace

EvalResult hyp1f1(const Complex& a, const Complex& c, const Complex& z,
                  const ToleranceConfig& tol) {
  require_finite(a, "hyp1f1");
  require_finite(c, "hyp1f1");
  require_finite(z, "hyp1f1");
  return sum_pfq(&a, 1, &c, 1, z, tol, "hyp1f1");
}

EvalResult hyp2f2(const Complex& a1, const Complex& a2, const Complex& c1,
                  const Complex& c2, const Complex& z,
                  const ToleranceConfig& tol) {
  require_finite(a1, "hyp2f2");
  require_finite(a2, "hyp2f2");
  require_finite(c1, "hyp2f2");
  require_finite(c2, "hyp2f2");
  require_finite(z, "hyp2f2");
  const Complex num[2] = {a1, a2};
  const Complex den[2] = {c1, c2};
  return sum_pfq(num, 2, den, 2, z, tol, "hyp2f2");
}

double kummer_transform_residual(const Complex& a, const Complex& c,
                                 const Complex& z,
                                 const ToleranceConfig& tol) {
  const Complex lhs = hyp1f1(a, c, z, tol).value;
  const Complex rhs = std::exp(z) * hyp1f1(c - a, c, -z, tol).value;
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

double chaundy_product_residual(const Complex& a, const Complex& a2,
                                const Complex& c, const Complex& x,
                                long r_max, const ToleranceConfig& tol) {
  if (r_max < 1) throw DomainError("chaundy_product_residual: r_max >= 1");
  const Complex direct = hyp1f1(a, c, x, tol).value *
                         hyp1f1(a2, c, x, tol).value;

  const Complex x2 = x * x;
  Complex coef(1.0, 0.0); // (a)_r (a2)_r x^{2r} / (r! (c)_r (c)_{2r})
  CompensatedSum sum;
  long small_run = 0;
  bool settled = false;
  for (long r = 0; r < r_max; ++r) {
    const Complex fr = hyp1f1(a + a2 + 2.0 * r, c + 2.0 * r, x, tol).value;
    const Complex term = coef * fr;
    sum.add(term);
    if (std::abs(term) <= tol.rel_tol * std::abs(sum.value())) {
      if (++small_run >= 3) {
        settled = true;
        break;
      }
    } else {
      small_run = 0;
    }
    coef *= (a + static_cast<double>(r)) * (a2 + static_cast<double>(r)) * x2 /
            ((static_cast<double>(r) + 1.0) * (c + static_cast<double>(r)) *
             (c + 2.0 * static_cast<double>(r)) *
             (c + 2.0 * static_cast<double>(r) + 1.0));
  }
  if (!settled) {
    EvalResult partial;
    partial.value = sum.value();
    partial.terms_used = r_max;
    partial.converged = false;
    throw ConvergenceError("chaundy_product_residual: r-series not settled",
                           partial);
  }
  return std::abs(direct - sum.value()) / std::max(1.0, std::abs(direct));
}

Complex kummer_derivative_limit(const Complex& z, const ToleranceConfig& tol) {
  require_finite(z, "kummer_derivative_limit");
  const Complex u = z * z / 4.0;
  return -u * hyp2f2(1.0, 1.0, 1.5, 2.0, u, tol).value;
}

} // namespace kzw
