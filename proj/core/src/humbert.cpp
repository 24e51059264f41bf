#include "kzw/humbert.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "kzw/erf.hpp"
#include "kzw/errors.hpp"
#include "kzw/gamma.hpp"
#include "kzw/hypergeometric.hpp"
#include "kzw/summation.hpp"

namespace kzw {

namespace {

constexpr double kIntegerWindow = 1e-12;

void check_c_admissible(const Complex& c, const char* name) {
  if (nonpositive_integer_index(c, kIntegerWindow) >= 0)
    throw ParameterError(std::string(name) +
                         ": denominator parameter c is a nonpositive integer");
}

// Anti-diagonal driver shared by the three Humbert series: the value is
// sum_k scale(k) * sum_{m+n=k} u_m v_n, with u_0 = v_0 = 1 and the factors
// u_m / u_{m-1}, v_n / v_{n-1} supplied per index. scale(k) is called once
// per diagonal in ascending k, so it may carry running state. Stops after
// three consecutive diagonal contributions below rel_tol * |partial|, which
// doubles as a Cauchy-style convergence certificate for these entire
// series.
EvalResult antidiagonal_sum(const std::function<Complex(long)>& u_factor,
                            const std::function<Complex(long)>& v_factor,
                            const std::function<Complex(long)>& scale,
                            const ToleranceConfig& tol, const char* name) {
  std::vector<Complex> u{Complex(1.0, 0.0)};
  std::vector<Complex> v{Complex(1.0, 0.0)};
  CompensatedSum sum;
  long terms = 0;
  long small_run = 0;
  for (long k = 0;; ++k) {
    if (k > 0) {
      u.push_back(u.back() * u_factor(k));
      v.push_back(v.back() * v_factor(k));
    }
    CompensatedSum conv;
    for (long m = 0; m <= k; ++m) conv.add(u[m] * v[k - m]);
    const Complex contrib = scale(k) * conv.value();
    sum.add(contrib);
    terms += k + 1;
    if (std::abs(contrib) <= tol.rel_tol * std::abs(sum.value())) {
      if (++small_run >= 3) {
        // The omitted diagonals are bounded by the last (tiny) one; the
        // diagonal magnitudes are ultimately factorially decreasing.
        EvalResult out;
        out.value = sum.value();
        out.terms_used = terms;
        out.abs_err = std::abs(contrib) +
                      std::numeric_limits<double>::epsilon() *
                          sum.magnitude_sum();
        out.converged = out.abs_err <= tol_abs(tol, out.value);
        return out;
      }
    } else {
      small_run = 0;
    }
    if (terms >= tol.max_terms) {
      EvalResult partial;
      partial.value = sum.value();
      partial.terms_used = terms;
      partial.abs_err = std::abs(contrib);
      partial.converged = false;
      throw ConvergenceError(std::string(name) + ": max_terms exceeded",
                             partial);
    }
  }
}

} // namespace

EvalResult phi1(const Complex& a, const Complex& b, const Complex& c,
                const Complex& x, const Complex& y,
                const ToleranceConfig& tol) {
  require_finite(a, "phi1");
  require_finite(b, "phi1");
  require_finite(c, "phi1");
  require_finite(x, "phi1");
  require_finite(y, "phi1");
  check_c_admissible(c, "phi1");
  if (std::abs(x) >= 1.0)
    throw DomainError("phi1: |x| >= 1 is outside the convergence domain");
  // sum_k (a)_k/(c)_k sum_{m+n=k} (b)_m x^m y^n / (m! n!)
  Complex ak(1.0, 0.0), ck(1.0, 0.0);
  return antidiagonal_sum(
      [&](long m) { return (b + static_cast<double>(m - 1)) * x /
                           static_cast<double>(m); },
      [&](long n) { return y / static_cast<double>(n); },
      [&](long k) -> Complex {
        if (k > 0) {
          ak *= a + static_cast<double>(k - 1);
          ck *= c + static_cast<double>(k - 1);
        }
        return ak / ck;
      },
      tol, "phi1");
}

EvalResult phi2(const Complex& a, const Complex& a2, const Complex& c,
                const Complex& x, const Complex& y,
                const ToleranceConfig& tol) {
  require_finite(a, "phi2");
  require_finite(a2, "phi2");
  require_finite(c, "phi2");
  require_finite(x, "phi2");
  require_finite(y, "phi2");
  check_c_admissible(c, "phi2");
  Complex ck(1.0, 0.0);
  return antidiagonal_sum(
      [&](long m) { return (a + static_cast<double>(m - 1)) * x /
                           static_cast<double>(m); },
      [&](long n) { return (a2 + static_cast<double>(n - 1)) * y /
                           static_cast<double>(n); },
      [&](long k) -> Complex {
        if (k > 0) ck *= c + static_cast<double>(k - 1);
        return 1.0 / ck;
      },
      tol, "phi2");
}

EvalResult phi3(const Complex& a, const Complex& c, const Complex& x,
                const Complex& y, const ToleranceConfig& tol) {
  require_finite(a, "phi3");
  require_finite(c, "phi3");
  require_finite(x, "phi3");
  require_finite(y, "phi3");
  check_c_admissible(c, "phi3");
  if (std::abs(y) > 50.0)
    throw DomainError(
        "phi3: |y| > 50 unsupported (no large-argument expansion)");
  Complex ck(1.0, 0.0);
  return antidiagonal_sum(
      [&](long m) { return (a + static_cast<double>(m - 1)) * x /
                           static_cast<double>(m); },
      [&](long n) { return y / static_cast<double>(n); },
      [&](long k) -> Complex {
        if (k > 0) ck *= c + static_cast<double>(k - 1);
        return 1.0 / ck;
      },
      tol, "phi3");
}

EvalResult phi3(const Phi3Args& args, const ToleranceConfig& tol) {
  return phi3(args.a, args.c, args.x, args.y, tol);
}

Complex phi3_reduction_13_2(const Complex& w, const Complex& z) {
  require_finite(w, "phi3_reduction_13_2");
  require_finite(z, "phi3_reduction_13_2");
  if (w == Complex(0.0, 0.0))
    throw DomainError("phi3_reduction_13_2: w must be nonzero");
  const Complex sw = std::sqrt(w); // principal branches throughout
  const Complex sz = std::sqrt(z);
  return sqrt_pi * std::exp(w + z / w) / (4.0 * sw) *
         (erf((w - sz) / sw) + erf((w + sz) / sw));
}

Complex laguerre(long n, const Complex& alpha, const Complex& x) {
  require_finite(alpha, "laguerre");
  require_finite(x, "laguerre");
  if (n < 0) throw DomainError("laguerre: degree must be >= 0");
  const long j = nonpositive_integer_index(alpha + 1.0, kIntegerWindow);
  if (j >= 0 && j < n)
    throw ParameterError(
        "laguerre: alpha+1 a nonpositive integer above the degree makes the "
        "prefactor singular");
  // (alpha+1)_n / n!, Pochhammer form (pole-safe near negative alpha).
  const Complex pre =
      pochhammer(alpha + 1.0, n) * std::exp(-std::lgamma(n + 1.0));
  const Complex f =
      hyp1f1(Complex(static_cast<double>(-n), 0.0), alpha + 1.0, x).value;
  const Complex val = pre * f;
  if (!is_finite(val)) throw ParameterError("laguerre: overflow");
  return val;
}

double laguerre_generating_residual(const Complex& alpha, const Complex& beta,
                                    const Complex& t, const Complex& x,
                                    long k_max, const ToleranceConfig& tol) {
  require_finite(t, "laguerre_generating_residual");
  require_finite(x, "laguerre_generating_residual");
  if (k_max < 1) throw DomainError("laguerre_generating_residual: k_max >= 1");
  check_c_admissible(beta, "laguerre_generating_residual");

  CompensatedSum lhs;
  Complex tk(1.0, 0.0);   // t^k
  Complex bk(1.0, 0.0);   // (beta)_k
  long small_run = 0;
  bool settled = false;
  for (long k = 0; k < k_max; ++k) {
    const Complex term = tk / bk * laguerre(k, alpha - static_cast<double>(k), x);
    lhs.add(term);
    if (std::abs(term) <= tol.rel_tol * std::abs(lhs.value())) {
      if (++small_run >= 2) {
        settled = true;
        break;
      }
    } else {
      small_run = 0;
    }
    tk *= t;
    bk *= beta + static_cast<double>(k);
  }
  if (!settled) {
    EvalResult partial;
    partial.value = lhs.value();
    partial.terms_used = k_max;
    partial.converged = false;
    throw ConvergenceError(
        "laguerre_generating_residual: Laguerre sum not settled by k_max",
        partial);
  }
  const Complex rhs = phi3(-alpha, beta, -t, -t * x, tol).value;
  return std::abs(lhs.value() - rhs) / std::max(1.0, std::abs(rhs));
}

} // namespace kzw
