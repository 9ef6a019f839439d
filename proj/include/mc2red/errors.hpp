#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mc2red {

/// Malformed text input. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A system does not belong to the class an operation requires.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what, std::optional<std::size_t> row = std::nullopt)
      : std::runtime_error(what), row_(row) {}
  std::optional<std::size_t> row() const noexcept { return row_; }

 private:
  std::optional<std::size_t> row_;
};

}  // namespace mc2red
