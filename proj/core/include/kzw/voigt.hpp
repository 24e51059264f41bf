#pragma once

#include "kzw/types.hpp"

namespace kzw {

/// Gaussian width sigma and Lorentzian width beta, both > 0 (DomainError
/// otherwise).
struct VoigtParams {
  double sigma;
  double beta;
  VoigtParams(double sigma_, double beta_);
};

/// Faddeeva function xi(y) = e^{-y^2}(1 - erf(-iy)), evaluated in the
/// combined form (the separate factors overflow long before the product
/// does for |Re y| large).
Complex faddeeva(const Complex& y);

/// Voigt profile V(x; sigma, beta) = Re(xi(w)) / (sigma sqrt(2 pi)) with
/// w = (x + i beta) / (sqrt(2) sigma): the Gaussian-Lorentzian convolution
/// density.
double voigt_profile(double x, const VoigtParams& p);

/// CDF of the Voigt profile. For |w| <= 6 uses the closed form
///   F = Re[1/2 + erf(w)/2 + (i w^2/pi) 2F2(1,1; 3/2,2; -w^2)],
/// which is where the 2F2 still sums accurately in doubles; beyond that cap
/// it falls back to F = 1/2 + \int_0^{x0} V (V is even). Result clamped to
/// [0, 1]; voigt_cdf_eval exposes the pre-clamp value and diagnostics.
double voigt_cdf(double x0, const VoigtParams& p,
                 const ToleranceConfig& tol = {});
EvalResult voigt_cdf_eval(double x0, const VoigtParams& p,
                          const ToleranceConfig& tol = {});

} // namespace kzw
