#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace flatspec {

/// Exact arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// r in Z / k, i.e. r * k is an integer.
inline bool in_z_over(const Rational& r, std::int64_t k) { return is_integer(r * k); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

/// Requires is_integer(r); throws std::domain_error otherwise or on overflow.
std::int64_t to_int64(const Rational& r);

}  // namespace flatspec
