#pragma once

#include "kzw/types.hpp"

namespace kzw {

/// Gamma function on the complex plane. Lanczos rational approximation for
/// Re s >= 1/2, reflection formula elsewhere. Throws PoleError within 1e-14
/// of a nonpositive integer.
Complex gamma(const Complex& s);

/// A logarithm of Gamma: exp(log_gamma(s)) == gamma(s) to working precision,
/// with an unspecified branch. Stays finite at heights where Gamma itself
/// would underflow, which is what the contour integrands need.
Complex log_gamma(const Complex& s);

/// Rising factorial (a)_m = a(a+1)...(a+m-1); (a)_0 = 1. Direct product for
/// small m, Gamma ratio (in log form) for large m away from the poles.
Complex pochhammer(const Complex& a, long m);

namespace detail {

/// log(sin(pi z)) evaluated so that exp of it is exact, stable for large
/// |Im z| where sin(pi z) itself overflows.
Complex log_sin_pi(const Complex& z);

} // namespace detail

} // namespace kzw
