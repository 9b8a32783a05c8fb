#pragma once

// Tabular output shared by every CLI command: a header row plus typed cells,
// serialized as CSV (17 significant digits, LF endings) or JSON.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace boost_entropy::report {

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Index of a column; throws std::out_of_range if absent.
  std::size_t column(std::string_view name) const;
  double number(std::size_t row, std::string_view name) const;
};

/// %.17g, with "nan", "inf" and "-inf" spelled out.
std::string format_number(double x);
std::string format_cell(const Cell& cell);

std::string to_csv(const Table& table);

/// Inverse of to_csv for tables it produced: integers, then doubles (incl.
/// nan/inf), then bare strings. Throws std::invalid_argument on ragged rows.
Table parse_csv(std::string_view text);

nlohmann::json to_json(const Table& table, const nlohmann::json& params,
                       const nlohmann::json& meta);

/// gnuplot commands plotting `y_column` against `x_column` of a CSV file.
std::string plot_script(const std::string& csv_path, const Table& table,
                        const std::string& x_column, const std::string& y_column,
                        bool log_x);

}  // namespace boost_entropy::report
