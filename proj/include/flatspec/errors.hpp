#pragma once

#include <stdexcept>
#include <string>

namespace flatspec {

// Base of every error raised by the library. Callers that only need to
// distinguish "bad input" from "bug" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FLATSPEC_DEFINE_ERROR(Name)            \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  };

// Period matrix validation.
FLATSPEC_DEFINE_ERROR(AsymmetryError)
FLATSPEC_DEFINE_ERROR(NotPositiveDefinite)
// Argument outside the mathematical domain (Im tau <= 0, collinear cover, ...).
FLATSPEC_DEFINE_ERROR(DomainError)
// Monodromy exponent whose imaginary part is not near a multiple of pi.
FLATSPEC_DEFINE_ERROR(SnapError)
FLATSPEC_DEFINE_ERROR(DegenerateCharge)
// Base charge with some v_j = m_j - (Omega n)_j numerically zero.
FLATSPEC_DEFINE_ERROR(DegenerateBase)
FLATSPEC_DEFINE_ERROR(NotASolution)
FLATSPEC_DEFINE_ERROR(LatticeDefect)
FLATSPEC_DEFINE_ERROR(NotIntegralDegree)
FLATSPEC_DEFINE_ERROR(ConvergenceDomain)
FLATSPEC_DEFINE_ERROR(BadRationality)
FLATSPEC_DEFINE_ERROR(NotInGamma)

#undef FLATSPEC_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace flatspec
