#include "flatspec/text_io.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "flatspec/errors.hpp"

namespace flatspec::text_io {

namespace {

const std::string kDecimal = R"([0-9]+(?:\.[0-9]*)?(?:[eE][+-]?[0-9]+)?|\.[0-9]+(?:[eE][+-]?[0-9]+)?)";

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

long long parse_index(const std::string& tok, int line) {
  static const std::regex kInt(R"([+-]?[0-9]+)");
  if (!std::regex_match(tok, kInt)) throw ParseError("expected an integer, got '" + tok + "'", line);
  return std::stoll(tok);
}

}  // namespace

cplx parse_complex(std::string_view text) {
  static const std::regex kLiteral("([+-]?(?:" + kDecimal + "))([+-])(" + kDecimal + ")?i");
  std::cmatch match;
  if (!std::regex_match(text.begin(), text.end(), match, kLiteral)) {
    throw std::invalid_argument("malformed complex literal '" + std::string(text) + "'");
  }
  const double re = std::stod(match[1].str());
  const double mag = match[3].matched ? std::stod(match[3].str()) : 1.0;
  return {re, match[2].str() == "-" ? -mag : mag};
}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string format_complex(cplx z) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::string out = format_real(z.real());
  out += std::signbit(im) ? "-" : "+";
  out += format_real(std::abs(im));
  out += "i";
  return out;
}

IVector parse_int_list(std::string_view text) {
  static const std::regex kInt(R"(\s*[+-]?[0-9]+\s*)");
  std::vector<std::int64_t> values;
  std::string s(text);
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    const std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!std::regex_match(part, kInt)) {
      throw std::invalid_argument("malformed integer list '" + s + "'");
    }
    values.push_back(std::stoll(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  IVector out(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) out(static_cast<Eigen::Index>(i)) = values[i];
  return out;
}

std::string format_int_list(const IVector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v(i));
  }
  return out;
}

LatticeCharge parse_charge(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw std::invalid_argument("charge must be written 'n1,..,nh;m1,..,mh'");
  }
  LatticeCharge out{parse_int_list(text.substr(0, semi)), parse_int_list(text.substr(semi + 1))};
  if (out.n.size() != out.m.size()) throw std::invalid_argument("charge halves differ in length");
  return out;
}

PeriodMatrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int h = 0;
  int row = 0;
  int line_no = 0;
  CMatrix raw;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tok = tokens(strip_comment(line));
    if (tok.empty()) continue;
    if (h == 0) {
      if (tok.size() != 2 || tok[0] != "genus") throw ParseError("expected 'genus h'", line_no);
      const long long g = parse_index(tok[1], line_no);
      if (g < 1) throw ParseError("genus must be >= 1", line_no);
      h = static_cast<int>(g);
      raw = CMatrix(h, h);
      continue;
    }
    if (row == h) throw ParseError("more than " + std::to_string(h) + " matrix rows", line_no);
    if (static_cast<int>(tok.size()) != h) {
      throw ParseError("expected " + std::to_string(h) + " entries, got " + std::to_string(tok.size()),
                       line_no);
    }
    for (int col = 0; col < h; ++col) {
      try {
        raw(row, col) = parse_complex(tok[static_cast<std::size_t>(col)]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no);
      }
    }
    ++row;
  }
  if (h == 0) throw ParseError("missing 'genus h' header", line_no);
  if (row != h) throw ParseError("expected " + std::to_string(h) + " matrix rows", line_no);
  return validate_period_matrix(raw);
}

PeriodMatrix parse_matrix_file(const std::filesystem::path& path) {
  return parse_matrix_text(read_file(path));
}

std::string format_matrix(const PeriodMatrix& omega) {
  std::string out = "genus " + std::to_string(omega.genus()) + "\n";
  for (int i = 0; i < omega.genus(); ++i) {
    for (int j = 0; j < omega.genus(); ++j) {
      if (j) out += ' ';
      out += format_complex(omega(i, j));
    }
    out += '\n';
  }
  return out;
}

highgenus::AnsatzTensors parse_tensor_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int line_no = 0;
  std::optional<highgenus::AnsatzTensors> t;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tok = tokens(strip_comment(line));
    if (tok.empty()) continue;
    if (!t) {
      if (tok.size() != 2 || tok[0] != "h") throw ParseError("expected 'h <int>'", line_no);
      const long long h = parse_index(tok[1], line_no);
      if (h < 1) throw ParseError("h must be >= 1", line_no);
      t.emplace(static_cast<int>(h));
      continue;
    }
    if (tok.size() != 5 && tok.size() != 3) {
      throw ParseError("expected 'i k j l value' or 'i k value'", line_no);
    }
    std::vector<int> idx;
    for (std::size_t a = 0; a + 1 < tok.size(); ++a) {
      const long long v = parse_index(tok[a], line_no);
      if (v < 1 || v > t->genus()) throw ParseError("index out of range 1.." + std::to_string(t->genus()), line_no);
      idx.push_back(static_cast<int>(v) - 1);
    }
    Rational value;
    try {
      value = parse_rational(tok.back());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
    if (idx.size() == 4) {
      t->n4(idx[0], idx[1], idx[2], idx[3]) = value;
    } else {
      t->m2(idx[0], idx[1]) = value;
    }
  }
  if (!t) throw ParseError("missing 'h <int>' header", line_no);
  return *t;
}

highgenus::AnsatzTensors parse_tensor_file(const std::filesystem::path& path) {
  return parse_tensor_text(read_file(path));
}

}  // namespace flatspec::text_io
