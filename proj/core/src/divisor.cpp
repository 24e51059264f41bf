#include "kzw/divisor.hpp"

#include <cmath>

#include "kzw/errors.hpp"

namespace kzw {

Complex divisor_sigma(const Complex& z, long n) {
  require_finite(z, "divisor_sigma");
  if (n < 1) throw DomainError("divisor_sigma: n must be >= 1");
  Complex sum(0.0, 0.0);
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += std::exp(z * std::log(static_cast<double>(d)));
    const long q = n / d;
    if (q != d) sum += std::exp(z * std::log(static_cast<double>(q)));
  }
  return sum;
}

} // namespace kzw
