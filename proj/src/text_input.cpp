#include "lifecode/text_input.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "lifecode/errors.hpp"

namespace lifecode::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::optional<double> parse_double(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::vector<std::string_view> split_any(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b = s.find_first_not_of(seps, i);
    if (b == std::string_view::npos) break;
    const auto e = s.find_first_of(seps, b);
    out.push_back(s.substr(b, e == std::string_view::npos ? std::string_view::npos : e - b));
    i = e == std::string_view::npos ? s.size() : e;
  }
  return out;
}

}  // namespace

std::vector<std::vector<double>> read_numeric_rows(std::istream& in, const std::string& source) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<double> row;
    for (auto token : split_any(body, ", \t")) {
      const auto v = parse_double(token);
      if (!v) throw ParseError(source, lineno, "not a finite number: '" + std::string(token) + "'");
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> read_numeric_rows_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_numeric_rows(in, path);
}

std::vector<std::vector<double>> parse_inline_rows(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t index = 0;
  for (auto row_text : split_any(text, ";")) {
    ++index;
    std::vector<double> row;
    for (auto token : split_any(row_text, ", \t")) {
      const auto v = parse_double(token);
      if (!v) throw ParseError("<inline>", index, "not a finite number: '" + std::string(token) + "'");
      row.push_back(*v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
  std::vector<double> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<std::pair<double, double>> read_angle_csv(std::istream& in, const std::string& source) {
  std::vector<std::pair<double, double>> out;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_any(body, ",");
    std::optional<double> phi, psi;
    if (fields.size() == 2) {
      phi = parse_double(fields[0]);
      psi = parse_double(fields[1]);
    }
    if (!phi || !psi) {
      if (first) {
        first = false;
        continue;
      }
      throw ParseError(source, lineno, "expected two numeric fields 'phi,psi'");
    }
    first = false;
    out.emplace_back(*phi, *psi);
  }
  return out;
}

}  // namespace lifecode::io
