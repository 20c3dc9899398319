#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace torelli {

/// A precondition of an operation was not met by its caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested computation has no closed form in this toolkit.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, DanglingReference, DuplicateId, OutOfRange };

  ParseError(Kind kind, int line, int column, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Kind kind_;
  int line_;
  int column_;
  std::string detail_;
};

const char* to_string(ParseError::Kind kind);

/// A configuration failed validation; carries every violation found.
class InvalidConfiguration : public std::runtime_error {
 public:
  explicit InvalidConfiguration(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class TimeBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace torelli
