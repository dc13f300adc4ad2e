#pragma once

// Line/token helpers shared by the automaton and representation readers.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hilbert/error.hpp"

namespace hilbert::detail {

struct TextLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

/// Non-empty lines with comments stripped, split on whitespace.
inline std::vector<TextLine> read_lines(std::istream& in) {
  std::vector<TextLine> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    TextLine line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

inline std::uint64_t parse_uint(std::string_view s, std::size_t line, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, "expected non-negative integer for " + std::string(what) +
                               ", got '" + std::string(s) + "'");
  return v;
}

/// Value of a "key=value" token; throws if the key does not match.
inline std::string_view key_value(std::string_view token, std::string_view key,
                                  std::size_t line) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key ||
      token[key.size()] != '=')
    throw ParseError(line, "expected '" + std::string(key) + "=...', got '" +
                               std::string(token) + "'");
  return token.substr(key.size() + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace hilbert::detail
