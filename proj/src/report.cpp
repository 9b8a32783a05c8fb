#include "boost_entropy/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace boost_entropy::report {

namespace {

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

Cell parse_cell(const std::string& text) {
  long long i = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (auto [p, ec] = std::from_chars(first, last, i);
      ec == std::errc() && p == last) {
    return i;
  }
  if (text == "nan") return std::nan("");
  if (text == "inf") return HUGE_VAL;
  if (text == "-inf") return -HUGE_VAL;
  double d = 0.0;
  if (auto [p, ec] = std::from_chars(first, last, d);
      ec == std::errc() && p == last) {
    return d;
  }
  return text;
}

}  // namespace

std::size_t Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("no column named " + std::string(name));
}

double Table::number(std::size_t row, std::string_view name) const {
  const Cell& cell = rows.at(row).at(column(name));
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<long long>(&cell)) {
    return static_cast<double>(*i);
  }
  throw std::invalid_argument("column " + std::string(name) + " is not numeric");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

Table parse_csv(std::string_view text) {
  Table table;
  bool header = true;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (header) {
      table.columns = std::move(cells);
      header = false;
      continue;
    }
    if (cells.size() != table.columns.size()) {
      throw std::invalid_argument("CSV row width does not match header");
    }
    std::vector<Cell> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_cell(c));
    table.rows.push_back(std::move(row));
  }
  return table;
}

nlohmann::json to_json(const Table& table, const nlohmann::json& params,
                       const nlohmann::json& meta) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              // JSON has no nan/inf
              if (std::isfinite(v)) {
                obj[table.columns[i]] = v;
              } else {
                obj[table.columns[i]] = nullptr;
              }
            } else {
              obj[table.columns[i]] = v;
            }
          },
          row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return {{"params", params}, {"rows", rows}, {"meta", meta}};
}

std::string plot_script(const std::string& csv_path, const Table& table,
                        const std::string& x_column,
                        const std::string& y_column, bool log_x) {
  const std::size_t x = table.column(x_column) + 1;
  const std::size_t y = table.column(y_column) + 1;
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set xlabel '" << x_column << "'\n"
     << "set ylabel '" << y_column << "'\n";
  if (log_x) os << "set logscale x\n";
  os << "plot '" << csv_path << "' using " << x << ":" << y
     << " with linespoints\n";
  return os.str();
}

}  // namespace boost_entropy::report
