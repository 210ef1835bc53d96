#include "secm/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

#include "secm/errors.hpp"

namespace secm {

namespace {

std::string cell(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = line.find(sep, start);
    out.push_back(line.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_cell(std::string_view s, std::size_t line) {
  s = trim(s);
  if (s == "nan") return NAN;
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    std::ostringstream msg;
    msg << "CSV line " << line << ": '" << s << "' is not a number";
    throw InputError(msg.str());
  }
  return v;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw InputError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

void OutputTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    std::ostringstream msg;
    msg << "row has " << row.size() << " cells, table has " << columns.size() << " columns";
    throw InputError(msg.str());
  }
  rows.push_back(std::move(row));
}

std::size_t OutputTable::column(std::string_view name) const {
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k] == name) return k;
  }
  throw InputError("no column named '" + std::string(name) + "'");
}

std::string to_csv(const OutputTable& table) {
  std::string out;
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    if (k) out += ',';
    out += table.columns[k];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += cell(row[k]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const OutputTable& table) {
  nlohmann::ordered_json doc;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (double v : row) {
      if (std::isfinite(v)) {
        r.push_back(v);
      } else {
        r.push_back(nullptr);
      }
    }
    doc["rows"].push_back(std::move(r));
  }
  doc["meta"] = {{"density", table.density}, {"tol", table.tol}};
  return doc.dump(2) + "\n";
}

std::string render(const OutputTable& table, Format format) {
  return format == Format::csv ? to_csv(table) : to_json(table);
}

OutputTable read_csv(std::string_view text) {
  OutputTable table;
  std::size_t line_no = 0;
  bool header = true;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    if (header) {
      for (auto c : cells) table.columns.emplace_back(trim(c));
      header = false;
      continue;
    }
    if (cells.size() != table.columns.size()) {
      std::ostringstream msg;
      msg << "CSV line " << line_no << " has " << cells.size() << " cells, expected "
          << table.columns.size();
      throw InputError(msg.str());
    }
    std::vector<double> row;
    for (auto c : cells) row.push_back(parse_cell(c, line_no));
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty()) throw InputError("CSV input is empty");
  return table;
}

}  // namespace secm
