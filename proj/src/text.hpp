#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace twoval::text {

struct Line {
  std::size_t number;  // 1-based
  std::string_view body;
};

// Splits on '\n', dropping a trailing '\r'. Empty lines are kept so numbering
// stays faithful; callers skip them.
inline std::vector<Line> lines(std::string_view s) {
  std::vector<Line> out;
  std::size_t start = 0, n = 1;
  while (start <= s.size()) {
    std::size_t end = s.find('\n', start);
    if (end == std::string_view::npos) end = s.size();
    std::string_view body = s.substr(start, end - start);
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    out.push_back({n++, body});
    if (end == s.size()) break;
    start = end + 1;
  }
  return out;
}

inline bool blank(std::string_view s) {
  return s.find_first_not_of(" \t") == std::string_view::npos;
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace twoval::text
