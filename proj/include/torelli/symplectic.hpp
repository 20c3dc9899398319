#pragma once

#include "torelli/exterior.hpp"

namespace torelli {

/// omega(e_i, e_j) in the frozen basis: +1 for (a_m, b_m), -1 for (b_m, a_m).
int pairing(Index i, Index j);

/// omega(x, y) for grade-1 elements of a symplectic space.
Scalar pairing(const MultiVector& x, const MultiVector& y);

/// a1^b1 + ... + ag^bg.
MultiVector omega_form(int genus);

/// C_k : ^k H -> ^{k-2} H,
///   C(x_1 ^ ... ^ x_k) = sum_{j<l} (-1)^{j+l+1} omega(x_j, x_l) x_1 ^ .. x^_j .. x^_l .. ^ x_k
/// with positions counted from 1.
MultiVector contract(const MultiVector& x);

/// omega ^ x.
MultiVector lefschetz(const MultiVector& x);

/// Applies `contract` n times.
MultiVector contract_power(const MultiVector& x, int n);

}  // namespace torelli
