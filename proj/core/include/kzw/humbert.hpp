#pragma once

#include "kzw/types.hpp"

namespace kzw {

/// Arguments of the Humbert function Phi3(a; c; x, y).
struct Phi3Args {
  Complex a, c, x, y;
};

/// Humbert Phi1(a, b; c; x, y), convergent for |x| < 1 (DomainError
/// otherwise). Summed by anti-diagonals m + n = k.
EvalResult phi1(const Complex& a, const Complex& b, const Complex& c,
                const Complex& x, const Complex& y,
                const ToleranceConfig& tol = {});

/// Humbert Phi2(a, a2; c; x, y), entire in both arguments.
EvalResult phi2(const Complex& a, const Complex& a2, const Complex& c,
                const Complex& x, const Complex& y,
                const ToleranceConfig& tol = {});

/// Humbert Phi3(a; c; x, y) = sum_{m,n} (a)_m / (c)_{m+n} x^m y^n / (m! n!),
/// entire in both arguments. Summed by anti-diagonals (on the diagonal
/// m + n = k the denominator Pochhammer is the single factor (c)_k), with
/// the same three-consecutive-small-terms stopping rule as the single
/// series. |y| is capped at 50; beyond that DomainError.
EvalResult phi3(const Phi3Args& args, const ToleranceConfig& tol = {});
EvalResult phi3(const Complex& a, const Complex& c, const Complex& x,
                const Complex& y, const ToleranceConfig& tol = {});

/// Closed form of Phi3(1; 3/2; w, z):
///   sqrt(pi) e^{w + z/w} / (4 sqrt(w)) *
///     [erf((w - sqrt(z))/sqrt(w)) + erf((w + sqrt(z))/sqrt(w))],
/// principal square roots. DomainError at w = 0.
Complex phi3_reduction_13_2(const Complex& w, const Complex& z);

/// Generalized Laguerre polynomial
///   L_n^alpha(x) = (alpha+1)_n / n! * 1F1(-n; alpha+1; x).
/// The prefactor is computed as a Pochhammer symbol, never as a ratio of
/// two possibly-infinite Gammas. ParameterError when alpha+1 is a
/// nonpositive integer -j with j < n (genuinely singular prefactor).
Complex laguerre(long n, const Complex& alpha, const Complex& x);

/// Relative residual between sum_k t^k / (beta)_k L_k^{alpha-k}(x),
/// truncated adaptively (at most k_max terms), and
/// Phi3(-alpha; beta; -t, -t x).
double laguerre_generating_residual(const Complex& alpha, const Complex& beta,
                                    const Complex& t, const Complex& x,
                                    long k_max,
                                    const ToleranceConfig& tol = {});

} // namespace kzw
