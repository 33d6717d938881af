#pragma once

// Plain-text numeric inputs: whitespace-separated matrix rows, inline
// literals, and CSV files of (phi, psi) angle pairs.

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lifecode::io {

/// One vector per non-blank line. Blank lines and lines starting with '#'
/// are skipped. Throws ParseError naming `source` and the 1-based line.
std::vector<std::vector<double>> read_numeric_rows(std::istream& in, const std::string& source);
std::vector<std::vector<double>> read_numeric_rows_file(const std::string& path);

/// Inline literal: rows separated by ';', values by ',' or whitespace,
/// e.g. "0.9,0.1;0.1,0.9".
std::vector<std::vector<double>> parse_inline_rows(std::string_view text);

std::vector<double> flatten(const std::vector<std::vector<double>>& rows);

/// (phi, psi) pairs in degrees. A first line that does not parse as numbers
/// is treated as a header.
std::vector<std::pair<double, double>> read_angle_csv(std::istream& in, const std::string& source);

}  // namespace lifecode::io
