#pragma once

#include <vector>

#include "torelli/exterior.hpp"

namespace torelli {

/// Integral 2g x 2g matrix preserving omega. Column j is the image of the
/// basis vector with index j (frozen a1, b1, ..., ag, bg order).
class SpMatrix {
 public:
  /// Throws ContractViolation unless M^T J M = J.
  SpMatrix(int genus, std::vector<std::vector<BigInt>> entries);

  static SpMatrix identity(int genus);

  int genus() const noexcept { return genus_; }
  int size() const noexcept { return 2 * genus_; }
  const BigInt& operator()(int row, int column) const { return entries_[row][column]; }

  /// Image of basis vector e_j, as a grade-1 multivector.
  MultiVector column(Index j) const;

  /// M^{-1} = -J M^T J, exact over the integers.
  SpMatrix inverse() const;

  friend SpMatrix operator*(const SpMatrix& m, const SpMatrix& n);
  bool operator==(const SpMatrix&) const = default;

 private:
  SpMatrix(int genus, std::vector<std::vector<BigInt>> entries, bool /*trusted*/);

  int genus_;
  std::vector<std::vector<BigInt>> entries_;
};

/// True when M^T J M = J.
bool preserves_omega(int genus, const std::vector<std::vector<BigInt>>& entries);

/// x -> x + omega(x, v) v. Symplectic for every integral v.
SpMatrix transvection(const MultiVector& v);

/// Natural action on ^k H: each basis label is replaced by its image.
MultiVector induced_action(const SpMatrix& m, const MultiVector& x);

/// Transvections along a_i, b_i (all i), a_i + b_j (i != j), a_i + a_j and
/// b_i + b_j (i < j), each followed by its inverse.
std::vector<SpMatrix> standard_generators(int genus);

/// Transvections along e_i + e_j and e_i - e_j for every pair of basis
/// vectors, with inverses. Used to enlarge a stalled span computation.
std::vector<SpMatrix> extended_generators(int genus);

/// Symplectic permutation exchanging the pairs (a_i, b_i) and (a_j, b_j).
SpMatrix pair_swap(int genus, int i, int j);

}  // namespace torelli
