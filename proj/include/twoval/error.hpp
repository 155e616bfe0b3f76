#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twoval {

// Violated precondition or malformed argument.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Instance too large for exhaustive treatment.
class ResourceError : public std::length_error {
public:
  using std::length_error::length_error;
};

// Raised by the decomposition when its input turns out not to be
// coalitionally strategy-proof. `profile_index` points at the offending
// profile in the table's enumeration when one is known.
class NotCspError : public std::runtime_error {
public:
  explicit NotCspError(const std::string& what, std::size_t profile_index = npos)
      : std::runtime_error(what), profile_index_(profile_index) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t profile_index() const noexcept { return profile_index_; }

private:
  std::size_t profile_index_;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace twoval
