#include "kzw/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "kzw/errors.hpp"

namespace kzw {

namespace {

GaussLegendreRule compute_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: order must be >= 1");
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

Complex gl_integrate(const std::function<Complex(double)>& f, double a,
                     double b, int n) {
  const GaussLegendreRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Complex sum(0.0, 0.0);
  for (int i = 0; i < n; ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

namespace {

struct AdaptiveState {
  const std::function<Complex(double)>* f;
  double abs_tol;
  long evaluations = 0;
};

Complex adapt(AdaptiveState& st, double a, double b, double tol, int depth,
              double& err_out) {
  const Complex hi = gl_integrate(*st.f, a, b, 15);
  const Complex lo = gl_integrate(*st.f, a, b, 7);
  st.evaluations += 22;
  const double err = std::abs(hi - lo);
  if (err <= tol || depth <= 0) {
    if (depth <= 0 && err > tol)
      throw ConvergenceError("integrate_adaptive: max depth reached",
                             EvalResult{hi, err, st.evaluations, false});
    err_out += err;
    return hi;
  }
  const double mid = 0.5 * (a + b);
  return adapt(st, a, mid, tol / 2, depth - 1, err_out) +
         adapt(st, mid, b, tol / 2, depth - 1, err_out);
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_depth) {
  AdaptiveState st{&f, abs_tol, 0};
  QuadratureResult out;
  double err = 0.0;
  out.value = adapt(st, a, b, abs_tol, max_depth, err);
  out.abs_err = err;
  out.evaluations = st.evaluations;
  return out;
}

} // namespace kzw
