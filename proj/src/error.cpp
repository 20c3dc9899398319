#include "torelli/error.hpp"

#include <sstream>

namespace torelli {

namespace {

std::string located(int line, int column, const std::string& message) {
  std::ostringstream out;
  out << "line " << line << ", column " << column << ": " << message;
  return out.str();
}

std::string joined(const std::vector<std::string>& items) {
  std::string out = "invalid configuration";
  for (const auto& item : items) out += "\n  " + item;
  return out;
}

}  // namespace

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error(located(line, column, message)),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(message) {}

const char* to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::Syntax: return "syntax error";
    case ParseError::Kind::DanglingReference: return "dangling reference";
    case ParseError::Kind::DuplicateId: return "duplicate id";
    case ParseError::Kind::OutOfRange: return "out of range";
  }
  return "parse error";
}

InvalidConfiguration::InvalidConfiguration(std::vector<std::string> violations)
    : std::runtime_error(joined(violations)), violations_(std::move(violations)) {}

}  // namespace torelli
