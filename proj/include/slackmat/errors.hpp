#ifndef SLACKMAT_ERRORS_HPP
#define SLACKMAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slackmat {

/// Input violates a documented precondition (negative entry, size mismatch, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation has no meaning for this input (e.g. polygon test on a
/// non-square matrix).
class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed document text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace slackmat

#endif  // SLACKMAT_ERRORS_HPP
