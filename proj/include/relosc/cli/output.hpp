#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace relosc::cli {

using Cell = std::variant<double, long long, std::string, bool>;

/// One tabular result plus the metadata needed to reproduce it.
struct OutputRecord {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> metadata;

  void meta(std::string key, Cell value) { metadata.emplace_back(std::move(key), std::move(value)); }
};

/// Shortest decimal string that parses back to the same double.
std::string format_number(double value);

std::string format_cell(const Cell& cell);

/// `# key: value` metadata lines, then a header row, then comma-separated rows.
void write_csv(std::ostream& out, const OutputRecord& record);

/// {"schema", "metadata", "columns", "rows"} with the same content as the CSV.
void write_json(std::ostream& out, const OutputRecord& record);

}  // namespace relosc::cli
