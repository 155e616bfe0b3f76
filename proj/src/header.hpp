#pragma once

#include <charconv>
#include <string>
#include <vector>

#include "text.hpp"
#include "twoval/error.hpp"
#include "twoval/profiles.hpp"

namespace twoval::detail {

// Leading "universe:" / "society:" / optional "domain:" lines shared by the
// table and spec formats.
struct Header {
  Universe universe;
  std::size_t voters = 0;
  Domain domain = Domain::weak;
  std::size_t next_line = 0;  // first unread index into the line vector
};

inline std::size_t parse_count(std::string_view s, std::size_t line, std::size_t column) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("expected a nonnegative integer", line, column);
  return n;
}

inline Header parse_header(const std::vector<text::Line>& lines) {
  Header h;
  std::size_t k = 0;
  auto next = [&]() -> const text::Line& {
    while (k < lines.size() && text::blank(lines[k].body)) ++k;
    if (k == lines.size())
      throw ParseError("unexpected end of input", lines.empty() ? 1 : lines.back().number, 1);
    return lines[k++];
  };
  const auto& ul = next();
  if (!text::starts_with(ul.body, "universe:"))
    throw ParseError("expected 'universe:'", ul.number, 1);
  std::vector<std::string> labels;
  const std::string_view rest = ul.body.substr(9);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    if (rest[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t end = rest.find(' ', pos);
    if (end == std::string_view::npos) end = rest.size();
    labels.emplace_back(rest.substr(pos, end - pos));
    pos = end;
  }
  try {
    h.universe = Universe(labels);
  } catch (const std::logic_error& e) {
    throw ParseError(e.what(), ul.number, 10);
  }
  const auto& sl = next();
  if (!text::starts_with(sl.body, "society: "))
    throw ParseError("expected 'society: <n>'", sl.number, 1);
  h.voters = parse_count(sl.body.substr(9), sl.number, 10);
  if (h.voters == 0 || h.voters > kMaxVoters)
    throw ParseError("society size out of range", sl.number, 10);
  while (k < lines.size() && text::blank(lines[k].body)) ++k;
  if (k < lines.size() && text::starts_with(lines[k].body, "domain:")) {
    const auto& dl = lines[k++];
    if (dl.body == "domain: strict") h.domain = Domain::strict;
    else if (dl.body == "domain: weak") h.domain = Domain::weak;
    else throw ParseError("domain must be 'weak' or 'strict'", dl.number, 9);
  }
  h.next_line = k;
  return h;
}

inline std::string format_header(const ProfileSpace& space) {
  std::string out = "universe:";
  for (const auto& l : space.universe().labels()) out += " " + l;
  out += "\nsociety: " + std::to_string(space.voters()) + "\n";
  if (space.domain() == Domain::strict) out += "domain: strict\n";
  return out;
}

}  // namespace twoval::detail
