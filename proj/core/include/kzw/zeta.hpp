#pragma once

#include "kzw/types.hpp"

namespace kzw {

/// Riemann zeta function for moderate |s| (covering at least
/// -10 <= Re s <= 10). Alternating (Dirichlet eta) series with Borwein
/// acceleration for Re s >= 1/2, functional equation below. Throws
/// PoleError at s = 1.
Complex zeta(const Complex& s);

} // namespace kzw
