#include "relosc/cli/output.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "json.hpp"

namespace relosc::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

void write_csv(std::ostream& out, const OutputRecord& record) {
  out << "# schema: " << record.schema << '\n';
  for (const auto& [key, value] : record.metadata) {
    out << "# " << key << ": " << format_cell(value) << '\n';
  }
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    out << (i ? "," : "") << record.columns[i];
  }
  out << '\n';
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
}

namespace {

nlohmann::ordered_json to_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(double v) const {
      if (std::isfinite(v)) return v;
      return format_number(v);  // JSON has no inf/nan literals
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

void write_json(std::ostream& out, const OutputRecord& record) {
  nlohmann::ordered_json doc;
  doc["schema"] = record.schema;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.metadata) meta[key] = to_json(value);
  doc["metadata"] = meta;
  doc["columns"] = record.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& cell : row) r.push_back(to_json(cell));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace relosc::cli
