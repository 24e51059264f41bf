#pragma once

#include "kzw/types.hpp"

namespace kzw {

/// Confluent hypergeometric function 1F1(a; c; z) by direct term summation.
///
/// A numerator parameter within 1e-12 of a nonpositive integer -n makes the
/// series terminate; exactly n+1 terms are summed. A nonpositive-integer
/// denominator parameter is admissible only under that terminating escape
/// (with n <= |c|), otherwise ParameterError. ConvergenceError carries the
/// partial sum when max_terms is exceeded.
EvalResult hyp1f1(const Complex& a, const Complex& c, const Complex& z,
                  const ToleranceConfig& tol = {});

/// Generalized hypergeometric 2F2(a1, a2; c1, c2; z), same term-summation
/// and stopping rules as hyp1f1, with compensated summation (the Voigt CDF
/// needs it at negative arguments).
EvalResult hyp2f2(const Complex& a1, const Complex& a2, const Complex& c1,
                  const Complex& c2, const Complex& z,
                  const ToleranceConfig& tol = {});

/// |1F1(a;c;z) - e^z 1F1(c-a;c;-z)| / max(1, |1F1(a;c;z)|), both sides
/// summed independently. Diagnostic for Kummer's first transformation.
double kummer_transform_residual(const Complex& a, const Complex& c,
                                 const Complex& z,
                                 const ToleranceConfig& tol = {});

/// Relative residual between 1F1(a;c;x) 1F1(a2;c;x) and its expansion
///   sum_r (a)_r (a2)_r / (r! (c)_r (c)_{2r}) x^{2r} 1F1(a+a2+2r; c+2r; x),
/// the r-series truncated adaptively (at most r_max terms).
double chaundy_product_residual(const Complex& a, const Complex& a2,
                                const Complex& c, const Complex& x,
                                long r_max, const ToleranceConfig& tol = {});

/// -(z^2/4) 2F2(1,1; 3/2,2; z^2/4): the closed form of
/// lim_{s->1} d/ds 1F1((1-s)/2; 1/2; z^2/4).
Complex kummer_derivative_limit(const Complex& z,
                                const ToleranceConfig& tol = {});

} // namespace kzw
