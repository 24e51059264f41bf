#pragma once

#include <functional>
#include <vector>

#include "kzw/types.hpp"

namespace kzw {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// computed once by Newton iteration on the Legendre polynomials and cached.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(int n);

/// Fixed-order Gauss-Legendre approximation of \int_a^b f.
Complex gl_integrate(const std::function<Complex(double)>& f, double a,
                     double b, int n);

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double abs_err = 0.0;
  long evaluations = 0;
};

/// Adaptive bisection with a paired high/low-order Gauss-Legendre error
/// estimate per panel. Deterministic: panels are processed left to right.
QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_depth = 48);

} // namespace kzw
