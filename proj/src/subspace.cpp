#include "torelli/subspace.hpp"

#include "torelli/error.hpp"

namespace torelli {

SubspaceBasis::SubspaceBasis(Space space, int grade) : space_(space), grade_(grade) {}

void SubspaceBasis::require_member_shape(const MultiVector& x) const {
  if (!(x.space() == space_) || x.grade() != grade_)
    throw ContractViolation("subspace element has the wrong space or grade");
}

MultiVector SubspaceBasis::reduce(MultiVector x) const {
  require_member_shape(x);
  // Rows vanish at each other's pivots, so one pass over the pivots suffices.
  for (const auto& [pivot, row] : rows_) {
    if (x.is_zero()) break;
    Scalar c = x.coefficient(pivot);
    if (sgn(c) == 0) continue;
    for (const auto& [m, v] : row.terms()) x.add_term(m, -c * v);
  }
  return x;
}

bool SubspaceBasis::insert(const MultiVector& x) {
  MultiVector r = reduce(x);
  if (r.is_zero()) return false;
  Monomial pivot = r.terms().begin()->first;
  Scalar lead = r.terms().begin()->second;
  r *= Scalar(1) / lead;
  for (auto& [p, row] : rows_) {
    Scalar c = row.coefficient(pivot);
    if (sgn(c) == 0) continue;
    for (const auto& [m, v] : r.terms()) row.add_term(m, -c * v);
  }
  rows_.emplace(std::move(pivot), std::move(r));
  return true;
}

bool SubspaceBasis::contains(const MultiVector& x) const { return reduce(x).is_zero(); }

std::vector<MultiVector> SubspaceBasis::rows() const {
  std::vector<MultiVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::size_t rank_of(Space space, int grade, const std::vector<MultiVector>& vectors) {
  SubspaceBasis basis(space, grade);
  for (const auto& v : vectors) basis.insert(v);
  return basis.dimension();
}

}  // namespace torelli
