#pragma once

#include "kzw/types.hpp"

namespace kzw {

/// Generalized divisor sum sigma_z(n) = sum_{d | n} d^z by direct divisor
/// enumeration. Throws DomainError for n < 1.
Complex divisor_sigma(const Complex& z, long n);

} // namespace kzw
