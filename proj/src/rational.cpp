#include "flatspec/rational.hpp"

#include <limits>
#include <regex>
#include <stdexcept>

namespace flatspec {

Rational parse_rational(const std::string& text) {
  static const std::regex kPattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, kPattern)) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  const boost::multiprecision::cpp_int num(match[1].str());
  boost::multiprecision::cpp_int den(1);
  if (match[2].matched) den = boost::multiprecision::cpp_int(match[2].str());
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("rational " + r.str() + " is not an integer");
  const boost::multiprecision::cpp_int n = boost::multiprecision::numerator(r);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    throw std::domain_error("integer " + n.str() + " does not fit in 64 bits");
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace flatspec
