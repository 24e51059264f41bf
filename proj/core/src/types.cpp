#include "kzw/types.hpp"

#include <string>

#include "kzw/errors.hpp"

namespace kzw {

bool is_finite(const Complex& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

void require_finite(const Complex& v, const char* what) {
  if (!is_finite(v))
    throw DomainError(std::string(what) + ": non-finite argument");
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v))
    throw DomainError(std::string(what) + ": non-finite argument");
}

bool near_nonpositive_integer(const Complex& s, double eps) {
  const double n = std::round(s.real());
  if (n > 0.5) return false;
  return std::abs(s - Complex(n, 0.0)) <= eps;
}

long nonpositive_integer_index(const Complex& s, double eps) {
  const double n = std::round(s.real());
  if (n > 0.5) return -1;
  if (std::abs(s - Complex(n, 0.0)) <= eps) return static_cast<long>(-n);
  return -1;
}

bool on_negative_real_cut(const Complex& x) {
  return x.imag() == 0.0 && x.real() <= 0.0;
}

} // namespace kzw
