#pragma once

// Graded exterior algebra over a finite labeled basis with exact rational
// coefficients.
//
// Basis order for the symplectic space H of genus g is frozen as
//   a1 < b1 < a2 < b2 < ... < ag < bg
// i.e. a_m has index 2(m-1) and b_m has index 2m-1. Every sign in the
// toolkit depends on this order.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torelli/scalar.hpp"

namespace torelli {

using Index = std::uint16_t;

/// Strictly increasing tuple of basis indices; empty is the grade-0 unit.
using Monomial = std::vector<Index>;

/// The labeled vector space a multivector is built over.
class Space {
 public:
  enum class Kind : std::uint8_t {
    Symplectic,  ///< H = H_1(S_g; Q) with basis a1, b1, ..., ag, bg
    Generic,     ///< anonymous basis e1, ..., eN
    ThreeForms,  ///< basis = grade-3 monomials of H, lexicographic
  };

  static Space symplectic(int genus);
  static Space generic(int dimension);
  static Space three_forms(int genus);

  Kind kind() const noexcept { return kind_; }
  bool is_symplectic() const noexcept { return kind_ == Kind::Symplectic; }
  /// Genus of the underlying H (0 for generic spaces).
  int genus() const noexcept { return kind_ == Kind::Generic ? 0 : n_; }
  int dimension() const noexcept { return dimension_; }

  std::string label(Index i) const;

  bool operator==(const Space&) const = default;

 private:
  Space(Kind kind, int n, int dimension) : kind_(kind), n_(n), dimension_(dimension) {}

  Kind kind_;
  int n_;
  int dimension_;
};

constexpr Index a_index(int m) { return static_cast<Index>(2 * (m - 1)); }
constexpr Index b_index(int m) { return static_cast<Index>(2 * m - 1); }
constexpr bool is_a_label(Index i) { return i % 2 == 0; }
/// Pair number m of the label a_m or b_m.
constexpr int pair_of(Index i) { return i / 2 + 1; }

std::uint64_t binomial(int n, int k);

/// Position of the grade-3 H-monomial among all of them, lexicographically.
Index three_form_rank(int genus, const Monomial& triple);
Monomial three_form_unrank(int genus, Index rank);

/// Homogeneous element of the exterior algebra. Zero coefficients are never
/// stored; the zero element keeps whatever grade it was declared with.
class MultiVector {
 public:
  using Terms = std::map<Monomial, Scalar>;

  MultiVector(Space space, int grade);

  static MultiVector unit(Space space);
  static MultiVector scalar(Space space, const Scalar& value);
  static MultiVector basis_vector(Space space, Index i);
  /// `labels` need not be sorted; the sort sign is applied. Repeats give 0.
  static MultiVector monomial(Space space, std::vector<Index> labels,
                              const Scalar& coefficient = 1);

  const Space& space() const noexcept { return space_; }
  int grade() const noexcept { return grade_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  Scalar coefficient(const Monomial& m) const;

  /// Adds c * m. Requires m sorted, of this grade.
  void add_term(const Monomial& m, const Scalar& c);

  MultiVector& operator+=(const MultiVector& other);
  MultiVector& operator-=(const MultiVector& other);
  MultiVector& operator*=(const Scalar& c);

  friend MultiVector operator+(MultiVector x, const MultiVector& y) { return x += y; }
  friend MultiVector operator-(MultiVector x, const MultiVector& y) { return x -= y; }
  friend MultiVector operator-(MultiVector x) { return x *= Scalar(-1); }
  friend MultiVector operator*(const Scalar& c, MultiVector x) { return x *= c; }
  friend MultiVector operator*(MultiVector x, const Scalar& c) { return x *= c; }

  /// Values are equal when space, grade and all coefficients agree.
  bool operator==(const MultiVector& other) const;

 private:
  void require_compatible(const MultiVector& other, const char* op) const;

  Space space_;
  int grade_;
  Terms terms_;
};

/// x ^ y. Bilinear; each monomial pair merges with its sort sign.
MultiVector wedge(const MultiVector& x, const MultiVector& y);

/// Every strictly increasing index tuple of the given grade, in lexicographic order.
std::vector<Monomial> all_monomials(int dimension, int grade);

/// Sign of the permutation sorting `labels`, or 0 on a repeated label.
int sort_sign(std::vector<Index>& labels);

}  // namespace torelli
