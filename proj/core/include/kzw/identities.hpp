#pragma once

#include <string>

#include "kzw/types.hpp"

namespace kzw {

/// Positive pair (a, b) constrained by a b = pi^2, the standing hypothesis
/// of the modular-type transformation formulas. Validated on construction
/// (relative tolerance 1e-14); DomainError otherwise.
struct ModularPair {
  double a;
  double b;
  ModularPair(double a_, double b_);
};

/// Output of every identity checker: both sides, residuals, truncation
/// bookkeeping and the pass verdict against the requested tolerance.
struct IdentityReport {
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double abs_residual = 0.0;
  double rel_residual = 0.0; // |lhs-rhs| / max(|lhs|, |rhs|, 1)
  long n_terms_lhs = 0;
  bool pass = false;
};

/// JSON object with fields lhs, rhs, abs_residual, rel_residual,
/// n_terms_lhs, pass (lhs/rhs as {"re":..., "im":...}).
std::string to_json(const IdentityReport& report);

IdentityReport make_report(const Complex& lhs, const Complex& rhs,
                           long n_terms_lhs, double tolerance);

/// Ramanujan-Guinand formula: for ab = pi^2,
///   sqrt(a) sum_n sigma_{-z}(n) n^{z/2} K_{z/2}(2na)
///   - sqrt(b) sum_n sigma_{-z}(n) n^{z/2} K_{z/2}(2nb)
///   = (1/4) Gamma(z/2) zeta(z) {b^{(1-z)/2} - a^{(1-z)/2}}
///   + (1/4) Gamma(-z/2) zeta(-z) {b^{(1+z)/2} - a^{(1+z)/2}}.
/// K values come from the Mellin-Barnes evaluator with w = 0.
IdentityReport check_ramanujan_guinand(const Complex& z, const ModularPair& p,
                                       const ToleranceConfig& tol = {});

/// Generalized Ramanujan-Guinand formula (two-parameter Bessel sums against
/// the Gamma-zeta-1F1 closed form); reduces to the classical one at w = 0.
IdentityReport check_generalized_ramanujan_guinand(
    const Complex& z, const Complex& w, const ModularPair& p,
    const ToleranceConfig& tol = {});

/// Dedekind-eta transformation: for ab = pi^2,
///   sum_n sigma_{-1}(n) e^{-2na} - sum_n sigma_{-1}(n) e^{-2nb}
///   = (b - a)/12 + (1/4) log(a/b).
IdentityReport check_eta_transformation(const ModularPair& p,
                                        const ToleranceConfig& tol = {});

/// Generalization of the eta transformation: Humbert-series double sums on
/// the left against the 2F2/erf/erfi closed form on the right. Stated for
/// real w; complex w is rejected (DomainError) rather than guessed.
IdentityReport check_generalized_eta(double w, const ModularPair& p,
                                     const ToleranceConfig& tol = {});

} // namespace kzw
