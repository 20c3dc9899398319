#include "torelli/symplectic.hpp"

#include "torelli/error.hpp"

namespace torelli {

int pairing(Index i, Index j) {
  if (pair_of(i) != pair_of(j) || i == j) return 0;
  return is_a_label(i) ? 1 : -1;
}

Scalar pairing(const MultiVector& x, const MultiVector& y) {
  if (!x.space().is_symplectic() || !(x.space() == y.space()))
    throw ContractViolation("pairing needs two vectors of one symplectic space");
  if (x.grade() != 1 || y.grade() != 1) throw ContractViolation("pairing needs grade-1 arguments");
  Scalar total = 0;
  for (const auto& [p, c] : x.terms())
    for (const auto& [q, d] : y.terms())
      if (int w = pairing(p[0], q[0]); w != 0) total += w * c * d;
  return total;
}

MultiVector omega_form(int genus) {
  if (genus < 1) throw ContractViolation("omega_form needs genus >= 1");
  auto h = Space::symplectic(genus);
  MultiVector omega(h, 2);
  for (int m = 1; m <= genus; ++m) omega.add_term({a_index(m), b_index(m)}, 1);
  return omega;
}

MultiVector contract(const MultiVector& x) {
  if (!x.space().is_symplectic()) throw Unsupported("contraction needs a symplectic space");
  const int k = x.grade();
  if (k < 2) throw ContractViolation("contraction needs grade >= 2");
  MultiVector out(x.space(), k - 2);
  Monomial rest;
  for (const auto& [mono, c] : x.terms()) {
    for (int j = 0; j < k; ++j) {
      for (int l = j + 1; l < k; ++l) {
        int w = pairing(mono[j], mono[l]);
        if (w == 0) continue;
        // 1-based positions j+1, l+1: (-1)^{(j+1)+(l+1)+1} = (-1)^{j+l+1}.
        int sign = ((j + l + 1) % 2 == 0) ? w : -w;
        rest.clear();
        for (int t = 0; t < k; ++t)
          if (t != j && t != l) rest.push_back(mono[t]);
        out.add_term(rest, sign * c);
      }
    }
  }
  return out;
}

MultiVector lefschetz(const MultiVector& x) {
  if (!x.space().is_symplectic()) throw Unsupported("lefschetz operator needs a symplectic space");
  return wedge(omega_form(x.space().genus()), x);
}

MultiVector contract_power(const MultiVector& x, int n) {
  MultiVector y = x;
  for (int i = 0; i < n; ++i) y = contract(y);
  return y;
}

}  // namespace torelli
