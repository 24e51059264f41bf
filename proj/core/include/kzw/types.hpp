#pragma once

#include <cmath>
#include <complex>

namespace kzw {

/// The universal scalar of the library: a double-precision complex number.
/// Public entry points reject non-finite components up front so that NaN
/// never propagates silently through a series or a contour.
using Complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double sqrt_pi = 1.772453850905516027298167483341145183;
inline constexpr double sqrt_two_pi = 2.506628274631000502415765284811045253;

/// Accuracy knobs threaded through every series/quadrature evaluator.
struct ToleranceConfig {
  double rel_tol = 1e-12;          // target relative tolerance, > 0
  long max_terms = 100000;         // cap on series terms, >= 1
  double max_contour_height = 200; // cap on Mellin-Barnes truncation height
};

/// Absolute tolerance implied by `tol` for a result of magnitude |v|.
/// Small results are held to an absolute scale of 1 rather than to their
/// own magnitude, matching how the identity residuals are scored.
inline double tol_abs(const ToleranceConfig& tol, const Complex& v) {
  return tol.rel_tol * std::max(1.0, std::abs(v));
}

/// Value plus convergence diagnostics, returned by every evaluator that
/// sums a series or integrates a contour.
struct EvalResult {
  Complex value{0.0, 0.0};
  double abs_err = 0.0; // estimated absolute error, >= 0
  long terms_used = 0;  // series terms / quadrature nodes consumed
  bool converged = false;
};

bool is_finite(const Complex& v);
void require_finite(const Complex& v, const char* what);
void require_finite(double v, const char* what);

/// True when s lies within eps of a nonpositive integer (a Gamma pole).
bool near_nonpositive_integer(const Complex& s, double eps = 1e-14);

/// Index n >= 0 such that s is within eps of -n, or -1 if there is none.
long nonpositive_integer_index(const Complex& s, double eps = 1e-12);

/// True for x on the branch cut {x real, x <= 0} of x^{-s} and sqrt(x).
bool on_negative_real_cut(const Complex& x);

} // namespace kzw
