#pragma once

// Minimal CSV tables: ',' separator, '.' decimal point, header first, numbers
// written in shortest round-trip form so that re-parsing reproduces every
// double bit for bit. No quoting; cells never contain commas or newlines.

#include <charconv>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jury/errors.hpp"
#include "jury/text.hpp"

namespace jury {

using CsvCell = std::variant<double, std::string>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;

  void add_row(std::vector<CsvCell> row) {
    if (row.size() != header.size())
      throw domain_error("CSV row has " + std::to_string(row.size()) + " cells, header has " +
                         std::to_string(header.size()));
    rows.push_back(std::move(row));
  }

  friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

inline std::string format_cell(const CsvCell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return detail::format_double(*d);
  return std::get<std::string>(cell);
}

inline std::string to_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
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

/// Cells that parse completely as a double become numbers, others stay text.
inline CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool first = true;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const auto line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.emplace_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (first) {
      table.header = std::move(cells);
      first = false;
      continue;
    }
    std::vector<CsvCell> row;
    row.reserve(cells.size());
    for (auto& c : cells) {
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), value);
      if (!c.empty() && ec == std::errc() && ptr == c.data() + c.size())
        row.emplace_back(value);
      else
        row.emplace_back(std::move(c));
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace jury
