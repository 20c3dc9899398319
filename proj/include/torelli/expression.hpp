#pragma once

// Text form of multivectors over H.
//
//   expr    := term (('+' | '-') term)*        (a leading sign is allowed)
//   term    := coeff ['*' product] | product
//   product := factor ('^' factor)*
//   factor  := label | 'C(' expr ')' | 'L(' expr ')' | '(' expr ')'
//   coeff   := INT | INT '/' INT
//   label   := ('a' | 'b') INT
//
// C is the contraction and L is omega ^ (.). Whitespace is ignored.

#include <string>
#include <string_view>

#include "torelli/exterior.hpp"

namespace torelli {

/// Parses an expression over the genus-g symplectic space.
/// Throws ParseError on syntax errors and out-of-range label indices.
MultiVector parse_expr(std::string_view text, int genus);

/// Canonical text: terms in lexicographic label order, " + " / " - "
/// separators, coefficient omitted when +-1 (except at grade 0), "0" for zero.
std::string serialize(const MultiVector& x);

}  // namespace torelli
