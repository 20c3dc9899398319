#include "torelli/expression.hpp"

#include <cctype>

#include "torelli/error.hpp"
#include "torelli/symplectic.hpp"

namespace torelli {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, int genus) : text_(text), genus_(genus), space_(Space::symplectic(genus)) {}

  MultiVector parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    auto value = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return value;
  }

 private:
  struct Mark {
    std::size_t pos;
    int line;
    int column;
  };

  MultiVector expr() {
    skip_space();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1 : 1;
    }
    MultiVector total = term();
    if (sign < 0) total = -total;
    for (;;) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      char op = take();
      auto m = mark();
      MultiVector next = term();
      combine(total, next, op == '-', m);
    }
    return total;
  }

  void combine(MultiVector& total, const MultiVector& next, bool subtract, const Mark& where) {
    if (total.grade() != next.grade())
      fail_at(where, "inhomogeneous sum: grade " + std::to_string(total.grade()) + " and grade " +
                         std::to_string(next.grade()));
    if (subtract)
      total -= next;
    else
      total += next;
  }

  MultiVector term() {
    skip_space();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Scalar c = coeff();
      skip_space();
      if (peek() == '*') {
        take();
        return c * product();
      }
      return MultiVector::scalar(space_, c);
    }
    return product();
  }

  MultiVector product() {
    MultiVector value = factor();
    for (;;) {
      skip_space();
      if (peek() != '^') break;
      take();
      value = wedge(value, factor());
    }
    return value;
  }

  MultiVector factor() {
    skip_space();
    auto m = mark();
    char c = peek();
    if (c == 'C' || c == 'L') {
      take();
      expect('(');
      MultiVector inner = expr();
      expect(')');
      if (c == 'L') return lefschetz(inner);
      if (inner.grade() < 2) fail_at(m, "contraction of an element of grade " + std::to_string(inner.grade()));
      return contract(inner);
    }
    if (c == '(') {
      take();
      MultiVector inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'a' || c == 'b') {
      take();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected label index after '" + std::string(1, c) + "'");
      BigInt index = integer();
      if (index < 1 || index > genus_) {
        throw ParseError(ParseError::Kind::OutOfRange, m.line, m.column,
                         "label " + std::string(1, c) + index.get_str() + " outside 1.." + std::to_string(genus_));
      }
      int i = static_cast<int>(index.get_si());
      return MultiVector::basis_vector(space_, c == 'a' ? a_index(i) : b_index(i));
    }
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  Scalar coeff() {
    BigInt num = integer();
    skip_space();
    if (peek() == '/') {
      take();
      skip_space();
      auto m = mark();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      BigInt den = integer();
      if (den == 0) fail_at(m, "zero denominator");
      Scalar q(num, den);
      q.canonicalize();
      return q;
    }
    return Scalar(num);
  }

  BigInt integer() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(take());
    return BigInt(digits);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      if (at_end()) fail(std::string("expected '") + c + "' before end of expression");
      fail(std::string("expected '") + c + "', found '" + peek() + "'");
    }
    take();
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) take();
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  Mark mark() const { return {pos_, line_, column_}; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(mark(), message); }

  [[noreturn]] void fail_at(const Mark& m, const std::string& message) const {
    throw ParseError(ParseError::Kind::Syntax, m.line, m.column, message);
  }

  std::string_view text_;
  int genus_;
  Space space_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

MultiVector parse_expr(std::string_view text, int genus) {
  if (genus < 1) throw ContractViolation("expression genus must be >= 1");
  return ExprParser(text, genus).parse();
}

std::string serialize(const MultiVector& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : x.terms()) {
    bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    Scalar magnitude = abs(c);
    if (mono.empty()) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (i) out += "^";
      out += x.space().label(mono[i]);
    }
  }
  return out;
}

}  // namespace torelli
