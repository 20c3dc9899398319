#include "torelli/invariants.hpp"

#include "torelli/error.hpp"
#include "torelli/subspace.hpp"
#include "torelli/symplectic.hpp"

namespace torelli {

MultiVector tau0(int genus) {
  if (genus < 2) throw ContractViolation("the Torelli group needs genus >= 2");
  return omega_form(genus);
}

MultiVector tauJ_bp(const Configuration& c, std::size_t bp_index) {
  if (bp_index >= c.bounding_pairs.size()) throw ContractViolation("no such bounding pair");
  const auto& bp = c.bounding_pairs[bp_index];
  const int m = c.class_of(bp);
  auto far = split(c, bp_index).first;
  return extend_by_bp(far.form, m);
}

MultiVector extend_by_bp(const MultiVector& x, int class_index) {
  if (!x.space().is_symplectic()) throw ContractViolation("extend_by_bp needs an element of ^k H");
  if (class_index < 1 || class_index > x.space().genus()) throw ContractViolation("class index outside 1..g");
  return wedge(x, MultiVector::basis_vector(x.space(), a_index(class_index)));
}

bool cycle_has_separating_twist(const Configuration& c) {
  for (const auto& g : c.cycle)
    if (g.kind == Generator::Kind::SeparatingTwist) return true;
  return false;
}

namespace {

MultiVector nested_product(const ValidConfiguration& c, const Classification& k, MultiVector start) {
  for (auto b : k.order) start = extend_by_bp(start, c->class_of(c->bounding_pairs[b]));
  return start;
}

}  // namespace

MultiVector tau_abelian(const ValidConfiguration& c) {
  const int k = static_cast<int>(c->cycle.size());
  if (k < 1) throw ContractViolation("tau_abelian needs a cycle of length >= 1");
  const auto h = Space::symplectic(c->genus);
  auto verdict = classify(c);
  if (verdict.verdict != Classification::Verdict::TrulyNested) return MultiVector(h, k + 2);
  return nested_product(c, verdict, far_symplectic_form(c, verdict));
}

MultiVector gysin_tau(const ValidConfiguration& c) {
  const int k = static_cast<int>(c->cycle.size());
  const auto h = Space::symplectic(c->genus);
  if (cycle_has_separating_twist(c.get())) throw Unsupported("doubled class is only defined for bounding pairs");
  if (k == 0) {
    auto w = omega_form(c->genus);
    return wedge(w, w);
  }
  if (k % 2 == 1) return MultiVector(h, k + 4);
  auto verdict = classify(c);
  if (verdict.verdict != Classification::Verdict::TrulyNested)
    throw Unsupported("formula not provided for even cycles that are not truly nested");
  auto start = wedge(far_symplectic_form(c, verdict), near_symplectic_form(c, verdict));
  return Scalar(2) * nested_product(c, verdict, start);
}

MultiVector as_three_form(const MultiVector& x) {
  if (!x.space().is_symplectic() || x.grade() != 3) throw ContractViolation("as_three_form needs a grade-3 element of H");
  const int g = x.space().genus();
  MultiVector out(Space::three_forms(g), 1);
  for (const auto& [m, coeff] : x.terms()) out.add_term({three_form_rank(g, m)}, coeff);
  return out;
}

MultiVector tauJ_star(const ValidConfiguration& c) {
  const auto space = Space::three_forms(c->genus);
  const int k = static_cast<int>(c->cycle.size());
  if (cycle_has_separating_twist(c.get())) return MultiVector(space, k);
  MultiVector out = MultiVector::unit(space);
  for (const auto& g : c->cycle) out = wedge(out, as_three_form(tauJ_bp(c.get(), g.index)));
  return out;
}

std::size_t taujstar_rank(const ValidConfiguration& c) {
  std::vector<MultiVector> values;
  for (const auto& g : c->cycle)
    if (g.kind == Generator::Kind::BoundingPair) values.push_back(tauJ_bp(c.get(), g.index));
  return rank_of(Space::symplectic(c->genus), 3, values);
}

}  // namespace torelli
