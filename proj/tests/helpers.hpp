#pragma once

#include "oracle.hpp"
#include "torelli/expression.hpp"
#include "torelli/surface.hpp"

namespace test {

inline torelli::MultiVector E(const char* text, int genus) { return torelli::parse_expr(text, genus); }

inline std::string S(const torelli::MultiVector& x) { return torelli::serialize(x); }

inline oracle::Element to_oracle(const torelli::MultiVector& x) {
  oracle::Element e;
  for (const auto& [m, c] : x.terms()) e[oracle::Labels(m.begin(), m.end())] = c;
  return e;
}

inline torelli::ValidConfiguration config(const char* text) {
  return torelli::ValidConfiguration::from(torelli::parse_config(text));
}

}  // namespace test
