#pragma once

#include "kzw/types.hpp"

namespace kzw {

/// Error function erf(z) = (2/sqrt(pi)) \int_0^z e^{-t^2} dt, entire.
Complex erf(const Complex& z);

/// Imaginary error function erfi(z) = -i erf(iz), real on the real axis.
Complex erfi(const Complex& z);

/// Faddeeva function w(z) = e^{-z^2}(1 - erf(-iz)). Weideman rational
/// approximation for Im z >= 0; reflection w(z) = 2 e^{-z^2} - w(-z) below,
/// which overflows (and throws DomainError) when e^{-z^2} does.
Complex faddeeva_w(const Complex& z);

} // namespace kzw
