#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace shadowlab {

using CellValue = std::variant<double, std::int64_t, std::uint64_t, std::string>;

/// Rectangular result set; every row must match the header schema.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<CellValue>> rows;
};

enum class OutputFormat { csv, json };

/// JSON rendering shape: a single object (requires exactly one row) or an
/// array of row objects.
enum class JsonShape { object, array };

/// Shortest decimal string that parses back to the same binary64 value.
std::string format_double(double value);

/// CSV with '\n' line endings, '.' decimal separator and a header row that
/// is always present. Doubles use format_double, so files are diff-stable.
std::string render_csv(const Table& table);

/// Single-line JSON, keys in schema order, trailing '\n'.
std::string render_json(const Table& table, JsonShape shape);

/// Dispatch on format; the returned bytes always end with '\n'.
std::string render_table(const Table& table, OutputFormat format,
                         JsonShape shape = JsonShape::array);

}  // namespace shadowlab
