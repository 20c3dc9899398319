#pragma once

#include <map>
#include <vector>

#include "torelli/exterior.hpp"

namespace torelli {

/// Linear subspace of ^k V kept in fully reduced row-echelon form. Each row
/// has coefficient 1 at its pivot (its smallest monomial) and 0 at every
/// other row's pivot, so membership and insertion are exact.
class SubspaceBasis {
 public:
  SubspaceBasis(Space space, int grade);

  const Space& space() const noexcept { return space_; }
  int grade() const noexcept { return grade_; }
  std::size_t dimension() const noexcept { return rows_.size(); }

  /// Adds x to the span. Returns true when the dimension grew.
  bool insert(const MultiVector& x);
  bool contains(const MultiVector& x) const;

  /// x minus its projection along the pivots; zero iff x is in the span.
  MultiVector reduce(MultiVector x) const;

  /// Rows in pivot order.
  std::vector<MultiVector> rows() const;

 private:
  void require_member_shape(const MultiVector& x) const;

  Space space_;
  int grade_;
  std::map<Monomial, MultiVector> rows_;
};

/// Dimension of the span of the given homogeneous elements.
std::size_t rank_of(Space space, int grade, const std::vector<MultiVector>& vectors);

}  // namespace torelli
