#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jury/errors.hpp"

namespace jury {
namespace detail {

inline double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty())
    throw domain_error("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  return value;
}

inline std::string format_double(double value) {
  char buf[64];
  // Whole numbers such as trial counts read better as 1000000 than 1e+06.
  const bool whole = std::abs(value) < 1e16 && value == std::trunc(value);
  auto [ptr, ec] = whole ? std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed)
                         : std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

/// Splits "k1=v1,k2=v2" into pairs.
inline std::vector<std::pair<std::string, std::string>> parse_params(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw domain_error("expected key=value, got '" + std::string(item) + "'");
    out.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

inline std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

/// Splits on sep; empty input gives an empty list.
inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::vector<double> parse_double_list(std::string_view text, std::string_view what) {
  std::vector<double> values;
  for (const auto& item : split(text, ',')) values.push_back(detail::parse_double(item, what));
  return values;
}

}  // namespace jury
