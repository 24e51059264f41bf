#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kzw/erf.hpp"
#include "kzw/errors.hpp"
#include "kzw/gamma.hpp"
#include "kzw/humbert.hpp"
#include "kzw/hypergeometric.hpp"
#include "testutil.hpp"

using kzw::Complex;
using kzw::pi;

namespace {

// Row-by-row summation of Phi3, an order-of-summation oracle independent of
// the library's anti-diagonal driver. All terms are updated by bounded
// ratios so the intermediate Pochhammer symbols never overflow.
Complex phi3_row_oracle(Complex a, Complex c, Complex x, Complex y,
                        int rows = 150, int cols = 200) {
  Complex total(0, 0);
  Complex row_start(1, 0); // (a)_m x^m / (m! (c)_m)
  for (int m = 0; m < rows; ++m) {
    if (m > 0)
      row_start *= (a + (m - 1.0)) * x /
                   (static_cast<double>(m) * (c + (m - 1.0)));
    Complex term = row_start;
    Complex inner(0, 0);
    for (int n = 0; n < cols; ++n) {
      inner += term;
      term *= y / ((n + 1.0) * (c + (m + n + 0.0)));
    }
    total += inner;
  }
  return total;
}

// Column-by-column summation.
Complex phi3_col_oracle(Complex a, Complex c, Complex x, Complex y,
                        int rows = 150, int cols = 200) {
  Complex total(0, 0);
  Complex col_start(1, 0); // y^n / (n! (c)_n)
  for (int n = 0; n < cols; ++n) {
    if (n > 0)
      col_start *= y / (static_cast<double>(n) * (c + (n - 1.0)));
    Complex term = col_start;
    Complex inner(0, 0);
    for (int m = 0; m < rows; ++m) {
      inner += term;
      term *= (a + (m + 0.0)) * x / ((m + 1.0) * (c + (m + n + 1.0) - 1.0));
    }
    total += inner;
  }
  return total;
}

} // namespace

TEST_CASE("phi1 basics") {
  CHECK(kzw::phi1(Complex(0.7, 0), Complex(1.1, 0), Complex(1.9, 0),
                  Complex(0, 0), Complex(0, 0))
            .value == Complex(1, 0));
  // y = 0 restriction is the Gauss series; 2F1(1,1;2;x) = -log(1-x)/x
  const Complex v = kzw::phi1(Complex(1, 0), Complex(1, 0), Complex(2, 0),
                              Complex(0.3, 0), Complex(0, 0))
                        .value;
  CHECK(std::abs(v - Complex(-std::log(0.7) / 0.3, 0)) < 1e-12);
  CHECK_THROWS_AS(kzw::phi1(Complex(1, 0), Complex(1, 0), Complex(2, 0),
                            Complex(1.0, 0), Complex(0.5, 0)),
                  kzw::DomainError);
}

TEST_CASE("phi1 y=0 restriction against direct summation") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> uni(-0.9, 0.9);
  for (int i = 0; i < 10; ++i) {
    const Complex a(2 * uni(rng), 0), b(2 * uni(rng), 0);
    const Complex c(2.1 + std::abs(uni(rng)), 0);
    const Complex x(uni(rng), 0);
    Complex direct(0, 0);
    for (int m = 90; m >= 0; --m)
      direct += kzw::pochhammer(a, m) * kzw::pochhammer(b, m) *
                std::pow(x, m) /
                (kzw::pochhammer(c, m) * std::tgamma(m + 1.0));
    const Complex v = kzw::phi1(a, b, c, x, Complex(0, 0)).value;
    CHECK(std::abs(v - direct) <= 1e-11 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("phi2 basics and symmetry") {
  CHECK(kzw::phi2(Complex(0.3, 0), Complex(0.8, 0), Complex(1.4, 0),
                  Complex(0, 0), Complex(0, 0))
            .value == Complex(1, 0));
  // x-only restriction is 1F1
  const Complex v = kzw::phi2(Complex(0.7, 0), Complex(1.1, 0), Complex(1.9, 0),
                              Complex(0.8, 0), Complex(0, 0))
                        .value;
  CHECK(std::abs(v - kzw::hyp1f1(Complex(0.7, 0), Complex(1.9, 0),
                                 Complex(0.8, 0))
                         .value) < 1e-13);
  // swapping (a, x) with (a2, y) relabels the summation indices
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  for (int i = 0; i < 5; ++i) {
    const Complex a(uni(rng), 0), a2(uni(rng), 0);
    const Complex c(2.3, 0.3);
    const Complex x(uni(rng), uni(rng)), y(uni(rng), uni(rng));
    const Complex lhs = kzw::phi2(a, a2, c, x, y).value;
    const Complex rhs = kzw::phi2(a2, a, c, y, x).value;
    CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("phi3 basics") {
  CHECK(kzw::phi3(Complex(0.5, 0), Complex(0.5, 0), Complex(0, 0),
                  Complex(0, 0))
            .value == Complex(1, 0));
  CHECK_THROWS_AS(kzw::phi3(Complex(0.5, 0), Complex(-1, 0), Complex(1, 0),
                            Complex(1, 0)),
                  kzw::ParameterError);
  CHECK_THROWS_AS(kzw::phi3(Complex(0.5, 0), Complex(1.5, 0), Complex(1, 0),
                            Complex(0, 60)),
                  kzw::DomainError);
}

TEST_CASE("phi3 x-only restriction equals 1F1 over random triples") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  int tested = 0;
  while (tested < 50) {
    const Complex a(3 * uni(rng), 3 * uni(rng));
    const Complex c(3 * uni(rng), 3 * uni(rng));
    if (c.real() <= 0.5 && std::abs(c - std::round(c.real())) < 0.2) continue;
    const Complex x(2 * uni(rng), 2 * uni(rng));
    const Complex lhs = kzw::phi3(a, c, x, Complex(0, 0)).value;
    const Complex rhs = kzw::hyp1f1(a, c, x).value;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    ++tested;
  }
}

TEST_CASE("phi3 y-only restriction is the 0F1-style series") {
  const Complex a(0.8, 0), c(1.3, 0), y(-3.5, 0);
  Complex direct(0, 0);
  for (int n = 120; n >= 0; --n)
    direct += std::pow(y, n) / (kzw::pochhammer(c, n) * std::tgamma(n + 1.0));
  const Complex v = kzw::phi3(a, c, Complex(0, 0), y).value;
  CHECK(std::abs(v - direct) < 1e-12);
}

TEST_CASE("phi3 summation-order invariance") {
  for (const auto& [x, y] : {std::pair{3.0, -4.0}, std::pair{-5.0, 5.0},
                              std::pair{2.5, 2.5}}) {
    const Complex a(0.6, 0), c(1.7, 0);
    const Complex anti = kzw::phi3(a, c, Complex(x, 0), Complex(y, 0)).value;
    const Complex rows = phi3_row_oracle(a, c, Complex(x, 0), Complex(y, 0));
    const Complex cols = phi3_col_oracle(a, c, Complex(x, 0), Complex(y, 0));
    CHECK(std::abs(anti - rows) <= 1e-12 * std::max(1.0, std::abs(rows)));
    CHECK(std::abs(anti - cols) <= 1e-12 * std::max(1.0, std::abs(cols)));
  }
}

TEST_CASE("phi3 diagonal contributions settle into monotone decay") {
  // Recompute the anti-diagonal contributions and check they are eventually
  // monotonically decreasing (entire function, Cauchy partial sums).
  const Complex a(0.5, 0), c(1.5, 0), x(2.0, 0), y(-4.0, 0);
  std::vector<double> mags;
  Complex ck(1, 0);
  std::vector<Complex> u{Complex(1, 0)}, v{Complex(1, 0)};
  for (int k = 0; k < 80; ++k) {
    if (k > 0) {
      u.push_back(u.back() * (a + static_cast<double>(k - 1)) * x /
                  static_cast<double>(k));
      v.push_back(v.back() * y / static_cast<double>(k));
      ck *= c + static_cast<double>(k - 1);
    }
    Complex conv(0, 0);
    for (int m = 0; m <= k; ++m) conv += u[m] * v[k - m];
    mags.push_back(std::abs(conv / ck));
  }
  const auto peak = std::max_element(mags.begin(), mags.end());
  for (auto it = peak + 4; it + 1 != mags.end(); ++it) {
    if (*it == 0.0) continue;
    CHECK(*(it + 1) <= *it);
  }
}

TEST_CASE("phi3 reduction formula at pinned points") {
  // w=1, z=0: both sides collapse to (sqrt(pi) e / 2) erf(1)
  const Complex closed = std::sqrt(pi) * std::exp(1.0) / 2.0 *
                         kzw::erf(Complex(1, 0));
  const Complex red = kzw::phi3_reduction_13_2(Complex(1, 0), Complex(0, 0));
  CHECK(std::abs(red - closed) < 1e-13);
  const Complex f11 =
      kzw::hyp1f1(Complex(1, 0), Complex(1.5, 0), Complex(1, 0)).value;
  CHECK(std::abs(f11 - closed) < 1e-13);
  CHECK_THROWS_AS(kzw::phi3_reduction_13_2(Complex(0, 0), Complex(0.3, 0)),
                  kzw::DomainError);
}

TEST_CASE("phi3 reduction formula against the double series") {
  for (const auto& [w, z] : {std::pair{0.8, 0.3}, std::pair{1.5, 1.0}}) {
    const Complex red =
        kzw::phi3_reduction_13_2(Complex(w, 0), Complex(z, 0));
    const Complex ser =
        kzw::phi3(Complex(1, 0), Complex(1.5, 0), Complex(w, 0), Complex(z, 0))
            .value;
    CHECK(std::abs(red - ser) <= 1e-9 * std::max(1.0, std::abs(ser)));
  }
}

TEST_CASE("phi3 reduction on the 5x5 grid") {
  for (double w : {0.4, 0.8, 1.2, 1.6, 2.0}) {
    for (double z : {0.0, 0.5, 1.0, 1.5, 2.0}) {
      const Complex red =
          kzw::phi3_reduction_13_2(Complex(w, 0), Complex(z, 0));
      const Complex ser = kzw::phi3(Complex(1, 0), Complex(1.5, 0),
                                    Complex(w, 0), Complex(z, 0))
                              .value;
      CHECK(std::abs(red - ser) <= 1e-9 * std::max(1.0, std::abs(ser)));
    }
  }
}

TEST_CASE("laguerre polynomials") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  for (int i = 0; i < 10; ++i) {
    const Complex alpha(uni(rng), uni(rng));
    const Complex x(uni(rng), uni(rng));
    CHECK(kzw::laguerre(0, alpha, x) == Complex(1, 0));
    const Complex l1 = kzw::laguerre(1, alpha, x);
    CHECK(std::abs(l1 - (1.0 + alpha - x)) < 1e-13);
  }
  // value at x = 0 is the Gamma-ratio prefactor
  const Complex alpha(0.3, 0);
  const Complex want = kzw::gamma(Complex(4 + 0.3 + 1, 0)) /
                       (kzw::gamma(Complex(5, 0)) * kzw::gamma(Complex(1.3, 0)));
  CHECK(std::abs(kzw::laguerre(4, alpha, Complex(0, 0)) - want) <
        1e-13 * std::abs(want));
}

TEST_CASE("laguerre parameter validation") {
  // alpha + 1 = -2 with degree 5: prefactor has a genuine zero * infinity
  CHECK_THROWS_AS(kzw::laguerre(5, Complex(-3, 0), Complex(1, 0)),
                  kzw::ParameterError);
  // alpha + 1 = -7 with degree 3: terminating escape applies
  CHECK_NOTHROW(kzw::laguerre(3, Complex(-8, 0), Complex(1, 0)));
  CHECK_THROWS_AS(kzw::laguerre(-1, Complex(0.5, 0), Complex(1, 0)),
                  kzw::DomainError);
}

TEST_CASE("laguerre generating identity (Prudnikov)") {
  // t = 0: both sides are 1
  CHECK(kzw::laguerre_generating_residual(Complex(-0.5, 0), Complex(0.5, 0),
                                          Complex(0, 0), Complex(1, 0),
                                          10) == 0.0);
  // the two substitutions the eta generalization rests on, w = 0.6
  const double w = 0.6;
  for (double x : {0.5, 1.0, 2.0, 4.0}) {
    CHECK(kzw::laguerre_generating_residual(
              Complex(-0.5, 0), Complex(0.5, 0), Complex(w * w / 4.0, 0),
              Complex(x, 0), 80) <= 1e-9);
    CHECK(kzw::laguerre_generating_residual(
              Complex(-0.5, 0), Complex(2.5, 0), Complex(-w * w / 4.0, 0),
              Complex(x, 0), 80) <= 1e-9);
  }
  CHECK_THROWS_AS(
      kzw::laguerre_generating_residual(Complex(-0.5, 0), Complex(0.5, 0),
                                        Complex(0.09, 0), Complex(1, 0), 2),
      kzw::ConvergenceError);
}
