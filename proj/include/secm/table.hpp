#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace secm {

enum class Format { csv, json };

Format parse_format(std::string_view name);  // throws InputError

struct OutputTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string density;
  double tol = 0.0;

  /// Throws InputError when the row width differs from the header.
  void add_row(std::vector<double> row);
  /// Index of a named column; throws InputError if absent.
  std::size_t column(std::string_view name) const;
};

/// Header row, comma separated, 17 significant digits, LF line endings.
/// Non-finite cells print as nan / inf / -inf.
std::string to_csv(const OutputTable& table);

/// {"columns": [...], "rows": [[...]], "meta": {"density": ..., "tol": ...}};
/// non-finite cells become null.
std::string to_json(const OutputTable& table);

std::string render(const OutputTable& table, Format format);

/// Parses CSV written by to_csv (or any numeric CSV with a header row).
/// Throws InputError on an empty input, ragged rows or non-numeric cells.
OutputTable read_csv(std::string_view text);

}  // namespace secm
