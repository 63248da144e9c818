#pragma once

// Shared helpers for the line-oriented text formats.

#include "rlfont/error.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rlfont::detail {

inline std::vector<std::pair<std::string, std::string>> key_values(std::string_view line,
                                                            std::size_t line_number) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError(ParseError::Unit::Line, line_number, "expected key=value, got '" + token + "'");
    }
    out.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  return out;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line_number, const char* what) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(ParseError::Unit::Line, line_number,
                     std::string("malformed ") + what + " '" + text + "'");
  }
  return value;
}

inline bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_number;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (!skippable(line)) {
      fn(line, line_number);
    }
    pos = end + 1;
  }
}

}  // namespace rlfont::detail
