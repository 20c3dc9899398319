#include "torelli/sp_action.hpp"

#include "torelli/error.hpp"
#include "torelli/symplectic.hpp"

namespace torelli {

namespace {

using Entries = std::vector<std::vector<BigInt>>;

Entries zero_entries(int n) { return Entries(n, std::vector<BigInt>(n, BigInt(0))); }

bool square_of_size(const Entries& e, int n) {
  if (static_cast<int>(e.size()) != n) return false;
  for (const auto& row : e)
    if (static_cast<int>(row.size()) != n) return false;
  return true;
}

}  // namespace

bool preserves_omega(int genus, const Entries& m) {
  const int n = 2 * genus;
  if (!square_of_size(m, n)) return false;
  // (M^T J M)(p, q) = omega(M e_p, M e_q).
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      BigInt total = 0;
      for (int i = 0; i < n; ++i) {
        if (m[i][p] == 0) continue;
        for (int j = 0; j < n; ++j) {
          int w = pairing(static_cast<Index>(i), static_cast<Index>(j));
          if (w != 0 && m[j][q] != 0) total += w * m[i][p] * m[j][q];
        }
      }
      if (total != pairing(static_cast<Index>(p), static_cast<Index>(q))) return false;
    }
  }
  return true;
}

SpMatrix::SpMatrix(int genus, Entries entries) : genus_(genus), entries_(std::move(entries)) {
  if (genus < 1) throw ContractViolation("SpMatrix needs genus >= 1");
  if (!square_of_size(entries_, 2 * genus)) throw ContractViolation("SpMatrix must be 2g x 2g");
  if (!preserves_omega(genus, entries_)) throw ContractViolation("matrix does not preserve the symplectic form");
}

SpMatrix::SpMatrix(int genus, Entries entries, bool) : genus_(genus), entries_(std::move(entries)) {}

SpMatrix SpMatrix::identity(int genus) {
  Entries e = zero_entries(2 * genus);
  for (int i = 0; i < 2 * genus; ++i) e[i][i] = 1;
  return SpMatrix(genus, std::move(e));
}

MultiVector SpMatrix::column(Index j) const {
  auto h = Space::symplectic(genus_);
  MultiVector v(h, 1);
  for (int i = 0; i < size(); ++i)
    if (entries_[i][j] != 0) v.add_term({static_cast<Index>(i)}, Scalar(entries_[i][j]));
  return v;
}

SpMatrix SpMatrix::inverse() const {
  const int n = size();
  // (-J M^T J)(r, c) = -sum_{s,t} J(r,s) M(t,s) J(t,c); J has one entry per row.
  Entries inv = zero_entries(n);
  for (int r = 0; r < n; ++r) {
    int s = r ^ 1;
    int jrs = pairing(static_cast<Index>(r), static_cast<Index>(s));
    for (int c = 0; c < n; ++c) {
      int t = c ^ 1;
      int jtc = pairing(static_cast<Index>(t), static_cast<Index>(c));
      inv[r][c] = -jrs * jtc * entries_[t][s];
    }
  }
  return SpMatrix(genus_, std::move(inv), true);
}

SpMatrix operator*(const SpMatrix& m, const SpMatrix& n) {
  if (m.genus_ != n.genus_) throw ContractViolation("SpMatrix product of different genera");
  const int size = m.size();
  Entries out = zero_entries(size);
  for (int i = 0; i < size; ++i)
    for (int k = 0; k < size; ++k) {
      if (m.entries_[i][k] == 0) continue;
      for (int j = 0; j < size; ++j) out[i][j] += m.entries_[i][k] * n.entries_[k][j];
    }
  return SpMatrix(m.genus_, std::move(out), true);
}

SpMatrix transvection(const MultiVector& v) {
  if (!v.space().is_symplectic() || v.grade() != 1) throw ContractViolation("transvection needs a vector of H");
  if (v.is_zero()) throw ContractViolation("transvection along the zero vector");
  for (const auto& [mono, c] : v.terms())
    if (!is_integer(c)) throw ContractViolation("transvection vector must be integral");
  const int genus = v.space().genus();
  const int n = 2 * genus;
  Entries e = zero_entries(n);
  for (int j = 0; j < n; ++j) {
    e[j][j] = 1;
    auto ej = MultiVector::basis_vector(v.space(), static_cast<Index>(j));
    Scalar w = pairing(ej, v);
    if (sgn(w) == 0) continue;
    for (const auto& [mono, c] : v.terms()) {
      Scalar step = w * c;
      e[mono[0]][j] += step.get_num();
    }
  }
  return SpMatrix(genus, std::move(e));
}

MultiVector induced_action(const SpMatrix& m, const MultiVector& x) {
  if (!x.space().is_symplectic() || x.space().genus() != m.genus())
    throw ContractViolation("induced_action: matrix and element have different spaces");
  std::vector<MultiVector> columns;
  columns.reserve(m.size());
  for (int j = 0; j < m.size(); ++j) columns.push_back(m.column(static_cast<Index>(j)));

  MultiVector out(x.space(), x.grade());
  for (const auto& [mono, c] : x.terms()) {
    MultiVector image = MultiVector::scalar(x.space(), c);
    for (Index label : mono) image = wedge(image, columns[label]);
    out += image;
  }
  return out;
}

namespace {

void push_with_inverse(std::vector<SpMatrix>& out, const MultiVector& v) {
  auto t = transvection(v);
  auto inv = t.inverse();
  out.push_back(std::move(t));
  out.push_back(std::move(inv));
}

}  // namespace

std::vector<SpMatrix> standard_generators(int genus) {
  if (genus < 1) throw ContractViolation("standard_generators needs genus >= 1");
  auto h = Space::symplectic(genus);
  auto a = [&](int i) { return MultiVector::basis_vector(h, a_index(i)); };
  auto b = [&](int i) { return MultiVector::basis_vector(h, b_index(i)); };
  std::vector<SpMatrix> gens;
  for (int i = 1; i <= genus; ++i) {
    push_with_inverse(gens, a(i));
    push_with_inverse(gens, b(i));
  }
  for (int i = 1; i <= genus; ++i)
    for (int j = 1; j <= genus; ++j) {
      if (i == j) continue;
      push_with_inverse(gens, a(i) + b(j));
      if (i < j) {
        push_with_inverse(gens, a(i) + a(j));
        push_with_inverse(gens, b(i) + b(j));
      }
    }
  return gens;
}

std::vector<SpMatrix> extended_generators(int genus) {
  auto gens = standard_generators(genus);
  auto h = Space::symplectic(genus);
  for (int i = 0; i < 2 * genus; ++i)
    for (int j = i + 1; j < 2 * genus; ++j) {
      auto ei = MultiVector::basis_vector(h, static_cast<Index>(i));
      auto ej = MultiVector::basis_vector(h, static_cast<Index>(j));
      push_with_inverse(gens, ei + ej);
      push_with_inverse(gens, ei - ej);
    }
  return gens;
}

SpMatrix pair_swap(int genus, int i, int j) {
  if (i < 1 || j < 1 || i > genus || j > genus) throw ContractViolation("pair_swap index outside 1..g");
  Entries e = zero_entries(2 * genus);
  for (int m = 1; m <= genus; ++m) {
    int target = m == i ? j : (m == j ? i : m);
    e[a_index(target)][a_index(m)] = 1;
    e[b_index(target)][b_index(m)] = 1;
  }
  return SpMatrix(genus, std::move(e));
}

}  // namespace torelli
