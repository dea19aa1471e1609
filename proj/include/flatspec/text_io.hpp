#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "flatspec/highgenus.hpp"
#include "flatspec/siegel.hpp"
#include "flatspec/types.hpp"

namespace flatspec::text_io {

/// Strict `a+bi` / `a-bi` literal; both parts decimal, no inner spaces.
/// Throws std::invalid_argument.
cplx parse_complex(std::string_view text);

/// Inverse of parse_complex at 15 significant digits.
std::string format_complex(cplx z);
/// "%.15g" with -0 printed as 0.
std::string format_real(double x);

/// Comma-separated integers, e.g. "1,-2,3".
IVector parse_int_list(std::string_view text);
std::string format_int_list(const IVector& v);
/// "n1,..,nh;m1,..,mh".
LatticeCharge parse_charge(std::string_view text);

/// Throws ParseError (with line number) on format errors; validation errors
/// from validate_period_matrix propagate unchanged.
PeriodMatrix parse_matrix_text(std::string_view text);
PeriodMatrix parse_matrix_file(const std::filesystem::path& path);
std::string format_matrix(const PeriodMatrix& omega);

/// Header `h <int>`, then `i k j l p/q` (N4) and `i k p/q` (M2) lines with
/// 1-based indices. Unlisted entries are zero.
highgenus::AnsatzTensors parse_tensor_text(std::string_view text);
highgenus::AnsatzTensors parse_tensor_file(const std::filesystem::path& path);

}  // namespace flatspec::text_io
