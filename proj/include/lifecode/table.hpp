#pragma once

// Tabular output shared by every CLI subcommand. Numbers are written with 17
// significant digits and a lowercase exponent so CSV output is byte-stable;
// JSON carries the same values with stable key order.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lifecode::io {

enum class Format { Csv, Json };

using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws ShapeError when the row width does not match the columns.
  void add_row(std::vector<Cell> row);
};

/// "%.17g" rendering used for every floating-point cell.
std::string format_number(double value);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);
std::string render(const Table& table, Format format);

/// Inverse of to_json. Floating-point numbers come back as doubles and
/// integers as int64, so re-rendering to CSV reproduces to_csv byte for byte.
Table table_from_json(std::string_view text);

}  // namespace lifecode::io
