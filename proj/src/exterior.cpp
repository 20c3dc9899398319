#include "torelli/exterior.hpp"

#include <algorithm>
#include <sstream>

#include "torelli/error.hpp"

namespace torelli {

Space Space::symplectic(int genus) {
  if (genus < 1) throw ContractViolation("symplectic space needs genus >= 1");
  if (genus > 64) throw Unsupported("genus above 64 is not supported");
  return Space(Kind::Symplectic, genus, 2 * genus);
}

Space Space::generic(int dimension) {
  if (dimension < 0 || dimension > 65535) throw ContractViolation("bad generic dimension");
  return Space(Kind::Generic, dimension, dimension);
}

Space Space::three_forms(int genus) {
  if (genus < 1) throw ContractViolation("three-form space needs genus >= 1");
  auto dim = binomial(2 * genus, 3);
  if (dim > 65535) throw Unsupported("three-form space too large");
  return Space(Kind::ThreeForms, genus, static_cast<int>(dim));
}

std::string Space::label(Index i) const {
  if (i >= dimension_) throw ContractViolation("label index outside the space");
  switch (kind_) {
    case Kind::Symplectic:
      return (is_a_label(i) ? "a" : "b") + std::to_string(pair_of(i));
    case Kind::Generic:
      return "e" + std::to_string(i + 1);
    case Kind::ThreeForms: {
      auto h = Space::symplectic(n_);
      auto triple = three_form_unrank(n_, i);
      return "(" + h.label(triple[0]) + "^" + h.label(triple[1]) + "^" + h.label(triple[2]) + ")";
    }
  }
  return {};
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

Index three_form_rank(int genus, const Monomial& triple) {
  const int n = 2 * genus;
  if (triple.size() != 3 || !(triple[0] < triple[1] && triple[1] < triple[2]) || triple[2] >= n)
    throw ContractViolation("not a sorted grade-3 monomial of H");
  // Count the triples that precede (x, y, z) lexicographically.
  std::uint64_t rank = 0;
  const int x = triple[0], y = triple[1], z = triple[2];
  for (int i = 0; i < x; ++i) rank += binomial(n - 1 - i, 2);
  for (int j = x + 1; j < y; ++j) rank += static_cast<std::uint64_t>(n - 1 - j);
  rank += static_cast<std::uint64_t>(z - y - 1);
  return static_cast<Index>(rank);
}

Monomial three_form_unrank(int genus, Index rank) {
  const int n = 2 * genus;
  std::uint64_t r = rank;
  for (int x = 0; x < n; ++x) {
    auto block = binomial(n - 1 - x, 2);
    if (r >= block) { r -= block; continue; }
    for (int y = x + 1; y < n; ++y) {
      auto row = static_cast<std::uint64_t>(n - 1 - y);
      if (r >= row) { r -= row; continue; }
      return {static_cast<Index>(x), static_cast<Index>(y), static_cast<Index>(y + 1 + r)};
    }
  }
  throw ContractViolation("three-form rank out of range");
}

std::vector<Monomial> all_monomials(int dimension, int grade) {
  std::vector<Monomial> out;
  if (grade < 0 || grade > dimension) return out;
  Monomial current(static_cast<std::size_t>(grade));
  for (int i = 0; i < grade; ++i) current[i] = static_cast<Index>(i);
  for (;;) {
    out.push_back(current);
    int i = grade - 1;
    while (i >= 0 && current[i] == dimension - grade + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < grade; ++j) current[j] = static_cast<Index>(current[j - 1] + 1);
  }
  return out;
}

int sort_sign(std::vector<Index>& labels) {
  int sign = 1;
  // Insertion sort; each adjacent swap flips the sign.
  for (std::size_t i = 1; i < labels.size(); ++i) {
    for (std::size_t j = i; j > 0 && labels[j - 1] >= labels[j]; --j) {
      if (labels[j - 1] == labels[j]) return 0;
      std::swap(labels[j - 1], labels[j]);
      sign = -sign;
    }
  }
  return sign;
}

MultiVector::MultiVector(Space space, int grade) : space_(space), grade_(grade) {
  if (grade < 0) throw ContractViolation("negative grade");
}

MultiVector MultiVector::unit(Space space) { return scalar(space, 1); }

MultiVector MultiVector::scalar(Space space, const Scalar& value) {
  MultiVector x(space, 0);
  x.add_term({}, value);
  return x;
}

MultiVector MultiVector::basis_vector(Space space, Index i) {
  if (i >= space.dimension()) throw ContractViolation("basis index outside the space");
  MultiVector x(space, 1);
  x.add_term({i}, 1);
  return x;
}

MultiVector MultiVector::monomial(Space space, std::vector<Index> labels, const Scalar& coefficient) {
  for (auto i : labels)
    if (i >= space.dimension()) throw ContractViolation("basis index outside the space");
  MultiVector x(space, static_cast<int>(labels.size()));
  int sign = sort_sign(labels);
  if (sign != 0) x.add_term(labels, sign * coefficient);
  return x;
}

Scalar MultiVector::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void MultiVector::add_term(const Monomial& m, const Scalar& c) {
  if (static_cast<int>(m.size()) != grade_) throw ContractViolation("term grade differs from element grade");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void MultiVector::require_compatible(const MultiVector& other, const char* op) const {
  if (!(space_ == other.space_))
    throw ContractViolation(std::string(op) + ": operands live over different spaces");
  if (grade_ != other.grade_) {
    std::ostringstream msg;
    msg << op << ": inhomogeneous sum of grades " << grade_ << " and " << other.grade_;
    throw ContractViolation(msg.str());
  }
}

MultiVector& MultiVector::operator+=(const MultiVector& other) {
  require_compatible(other, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& other) {
  require_compatible(other, "subtract");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiVector& MultiVector::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool MultiVector::operator==(const MultiVector& other) const {
  return space_ == other.space_ && grade_ == other.grade_ && terms_ == other.terms_;
}

namespace {

// Merges two sorted monomials; returns 0 if they share a label.
int merge_sign(const Monomial& p, const Monomial& q, Monomial& out) {
  out.clear();
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  int swaps = 0;
  while (i < p.size() && j < q.size()) {
    if (p[i] == q[j]) return 0;
    if (p[i] < q[j]) {
      out.push_back(p[i++]);
    } else {
      swaps += static_cast<int>(p.size() - i);
      out.push_back(q[j++]);
    }
  }
  out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
  out.insert(out.end(), q.begin() + static_cast<std::ptrdiff_t>(j), q.end());
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

MultiVector wedge(const MultiVector& x, const MultiVector& y) {
  if (!(x.space() == y.space())) throw ContractViolation("wedge: operands live over different spaces");
  MultiVector out(x.space(), x.grade() + y.grade());
  if (out.grade() > x.space().dimension()) return out;
  Monomial merged;
  for (const auto& [p, c] : x.terms()) {
    for (const auto& [q, d] : y.terms()) {
      int sign = merge_sign(p, q, merged);
      if (sign == 0) continue;
      Scalar product = c * d;
      if (sign < 0) product = -product;
      out.add_term(merged, product);
    }
  }
  return out;
}

}  // namespace torelli
