#pragma once

#include "kzw/types.hpp"

namespace kzw {

/// Neumaier-compensated accumulator, componentwise over re/im. Used by the
/// alternating series (2F2 at negative argument, Phi3 diagonals) where plain
/// summation would lose digits to cancellation.
class CompensatedSum {
 public:
  void add(const Complex& term) {
    add_part(sr_, cr_, term.real());
    add_part(si_, ci_, term.imag());
    abs_sum_ += std::abs(term);
  }

  Complex value() const { return {sr_ + cr_, si_ + ci_}; }

  /// Sum of |term| over everything added; the rounding floor of the result
  /// is about eps * magnitude_sum().
  double magnitude_sum() const { return abs_sum_; }

 private:
  static void add_part(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }

  double sr_ = 0, si_ = 0, cr_ = 0, ci_ = 0;
  double abs_sum_ = 0;
};

} // namespace kzw
