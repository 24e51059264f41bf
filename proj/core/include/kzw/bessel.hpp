#pragma once

#include "kzw/identities.hpp"
#include "kzw/types.hpp"

namespace kzw {

/// Vertical-line parameters for the Mellin-Barnes evaluator. The abscissa
/// must satisfy abscissa_c > |Re z| for the order being evaluated; t_max is
/// the truncation-height cap (clamped to ToleranceConfig.max_contour_height).
struct ContourSpec {
  double abscissa_c = 0.75;
  double t_max = 200.0;
  double quad_rel_tol = 1e-12;
  int max_panels = 512;

  /// Default contour for order z: abscissa |Re z| + 3/4.
  static ContourSpec for_order(const Complex& z,
                               const ToleranceConfig& tol = {});
};

/// Evaluation point of K_{z,w}(x): order z, deformation parameter w,
/// argument x off the cut {x real, x <= 0}.
struct KzwPoint {
  Complex z{0.0, 0.0};
  Complex w{0.0, 0.0};
  Complex x{1.0, 0.0};
};

/// Generalized modified Bessel function K_{z,w}(x) by its defining
/// Mellin-Barnes integral
///   (1/2 pi i) \int_{(c)} Gamma((s-z)/2) Gamma((s+z)/2)
///       1F1((s-z)/2; 1/2; -w^2/4) 1F1((s+z)/2; 1/2; -w^2/4)
///       2^{s-2} x^{-s} ds.
/// Gauss-Legendre panels of width 2 accumulated outward from t = 0 in a
/// fixed order (deterministic for fixed inputs); the height T doubles from
/// 16 until the last doubling changes the result by less than quad_rel_tol,
/// capped at t_max. abs_err adds the quadrature estimate and the tail bound.
EvalResult kzw_contour(const KzwPoint& p, const ContourSpec& spec,
                       const ToleranceConfig& tol = {});
EvalResult kzw_contour(const KzwPoint& p, const ToleranceConfig& tol = {});

/// Collapsed z = 1/2 integrand sqrt(pi/2) Gamma(s - 1/2) 1F1 1F1 x^{-s}
/// (Gamma duplication applied analytically). Must agree with kzw_contour at
/// z = 1/2; kept separate so the agreement is testable.
EvalResult kzw_contour_half_order(const Complex& w, const Complex& x,
                                  const ContourSpec& spec,
                                  const ToleranceConfig& tol = {});

/// Elementary closed form K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}, principal
/// square root; DomainError on the cut.
Complex k_half_closed(const Complex& x);

/// Inverse-Mellin identity for 1/2 < c < 1:
///   (1/2 pi i) \int_{(c)} Gamma(s-1/2) Gamma(s+n) / Gamma(s) x^{-s} ds
///   = (-1)^n sqrt(pi/x) 1F1(1/2; 1/2-n; -x) / Gamma(1/2-n).
/// Returns a report comparing the integrated left side with the closed form.
IdentityReport inverse_mellin_lemma(long n, const Complex& x,
                                    const ContourSpec& spec,
                                    const ToleranceConfig& tol = {});
IdentityReport inverse_mellin_lemma(long n, const Complex& x,
                                    const ToleranceConfig& tol = {});

/// Humbert-series representation of K_{1/2,w}(x):
///   sqrt(pi/(2x)) e^{-x} sum_{r>=0} (w^4 x^2/64)^r / (r! (1/2)_r (1/2)_{2r})
///       Phi3(1/2; 1/2+2r; -w^2/4, -w^2 x/4).
/// The r-series truncates once the coefficient times (1 + |Phi3|) drops
/// below rel_tol * |partial| for two consecutive r (the Phi3 factors tend
/// to 1 as r grows, so the coefficient controls the tail); cap 64 terms.
EvalResult khalf_series(const Complex& w, const Complex& x,
                        const ToleranceConfig& tol = {});

/// Large-|x| asymptotic value (sector |arg x| < pi/4, intended |x| >= 10):
///   (1/2) sqrt(pi/(2x)) e^{-x} (cos(w sqrt(2x)) P - sin(w sqrt(2x)) Q
///                               + e^{-w^2/4} R)
/// with P = 1 + (32 z^2 - 3 w^2 - 8)/(64 x), Q = w/(4 sqrt(2x)),
/// R = 1 + (4 z^2 - 1)(2 - w^2)/(16 x). DomainError outside the sector.
Complex kzw_asymptotic(const KzwPoint& p);

} // namespace kzw
