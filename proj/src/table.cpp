#include "shadowlab/table.hpp"

#include <charconv>
#include <stdexcept>

#include <json.hpp>

namespace shadowlab {
namespace {

void validate_schema(const Table& table) {
  for (const auto& row : table.rows)
    if (row.size() != table.columns.size())
      throw std::invalid_argument("render_table: rows must share the header schema");
}

std::string cell_to_string(const CellValue& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>)
          return format_double(v);
        else if constexpr (std::is_same_v<T, std::string>)
          return v;
        else
          return std::to_string(v);
      },
      cell);
}

nlohmann::ordered_json cell_to_json(const CellValue& cell) {
  return std::visit([](const auto& v) -> nlohmann::ordered_json { return v; }, cell);
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string render_csv(const Table& table) {
  validate_schema(table);
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += cell_to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table, JsonShape shape) {
  validate_schema(table);
  const auto row_object = [&](const std::vector<CellValue>& row) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_to_json(row[i]);
    return obj;
  };
  if (shape == JsonShape::object) {
    if (table.rows.size() != 1)
      throw std::invalid_argument("render_json: object shape requires exactly one row");
    return row_object(table.rows.front()).dump() + "\n";
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) arr.push_back(row_object(row));
  return arr.dump() + "\n";
}

std::string render_table(const Table& table, OutputFormat format, JsonShape shape) {
  return format == OutputFormat::csv ? render_csv(table) : render_json(table, shape);
}

}  // namespace shadowlab
