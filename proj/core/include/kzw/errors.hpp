#pragma once

#include <stdexcept>
#include <string>

#include "kzw/types.hpp"

namespace kzw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (branch cut, nonpositive width,
/// non-finite input, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Evaluation requested at (or within 1e-14 of) a pole.
struct PoleError : Error {
  using Error::Error;
};

/// Inadmissible series parameters (e.g. a nonpositive-integer denominator
/// parameter without a terminating numerator).
struct ParameterError : Error {
  using Error::Error;
};

/// Mellin-Barnes tail still above tolerance at the maximum contour height.
struct ContourError : Error {
  using Error::Error;
};

/// A series or quadrature hit its term/height cap before meeting tolerance.
/// Carries the partial result so callers can report it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, EvalResult partial)
      : Error(msg), partial_(partial) {}

  const EvalResult& partial() const noexcept { return partial_; }

 private:
  EvalResult partial_;
};

} // namespace kzw
