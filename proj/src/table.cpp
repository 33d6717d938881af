#include "lifecode/table.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "lifecode/errors.hpp"

namespace lifecode::io {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return csv_field(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw ShapeError("table " + name + ": row has " + std::to_string(row.size()) + " cells, expected " +
                     std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_field(table.columns[i]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Table& table) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["table"] = table.name;
  doc["columns"] = table.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              obj[table.columns[i]] = nullptr;
            } else {
              obj[table.columns[i]] = v;
            }
          },
          row[i]);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string render(const Table& table, Format format) {
  return format == Format::Csv ? to_csv(table) : to_json(table);
}

Table table_from_json(std::string_view text) {
  const auto doc = nlohmann::ordered_json::parse(text);
  Table table;
  table.name = doc.at("table").get<std::string>();
  table.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& obj : doc.at("rows")) {
    std::vector<Cell> row;
    for (const auto& col : table.columns) {
      const auto& v = obj.at(col);
      if (v.is_null()) {
        row.emplace_back(std::monostate{});
      } else if (v.is_boolean()) {
        row.emplace_back(v.get<bool>());
      } else if (v.is_number_float()) {
        row.emplace_back(v.get<double>());
      } else if (v.is_number_integer()) {
        row.emplace_back(v.get<std::int64_t>());
      } else {
        row.emplace_back(v.get<std::string>());
      }
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace lifecode::io
