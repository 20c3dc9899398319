#include "torelli/representation.hpp"

#include <algorithm>

#include "torelli/error.hpp"
#include "torelli/symplectic.hpp"

namespace torelli {

SubspaceBasis orbit_span(const MultiVector& x, const std::vector<SpMatrix>& generators,
                         std::optional<std::chrono::milliseconds> budget) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto check_budget = [&] {
    if (budget && Clock::now() - start > *budget)
      throw TimeBudgetExceeded("orbit span exceeded its time budget of " + std::to_string(budget->count()) + " ms");
  };

  SubspaceBasis basis(x.space(), x.grade());
  std::vector<MultiVector> wave;
  if (basis.insert(x)) wave.push_back(x);
  while (!wave.empty()) {
    std::vector<MultiVector> next;
    for (const auto& v : wave) {
      for (const auto& g : generators) {
        check_budget();
        auto image = induced_action(g, v);
        if (basis.insert(image)) next.push_back(std::move(image));
      }
    }
    wave = std::move(next);
  }
  return basis;
}

std::uint64_t irrep_dimension(int genus, int k) {
  if (genus < 1 || k < 0) throw ContractViolation("irrep_dimension needs genus >= 1 and k >= 0");
  if (k > genus) throw Unsupported("the decomposition of ^k H is only stated for k <= g");
  return binomial(2 * genus, k) - binomial(2 * genus, k - 2);
}

bool primitive_membership(const MultiVector& x) {
  if (x.grade() < 2) return true;
  return contract(x).is_zero();
}

std::uint64_t contraction_nullity(int genus, int k) {
  auto h = Space::symplectic(genus);
  const auto columns = all_monomials(h.dimension(), k);
  if (k < 2) return columns.size();
  SubspaceBasis image(h, k - 2);
  for (const auto& m : columns) image.insert(contract(MultiVector::monomial(h, m)));
  return columns.size() - image.dimension();
}

std::vector<MultiVector> lefschetz_decomposition(const MultiVector& x) {
  if (!x.space().is_symplectic()) throw Unsupported("Lefschetz decomposition needs a symplectic space");
  const int g = x.space().genus();
  const int k = x.grade();
  if (k > g) throw Unsupported("Lefschetz decomposition is only used for grade <= genus");

  std::vector<MultiVector> parts;
  for (int j = 0; 2 * j <= k; ++j) parts.emplace_back(x.space(), k - 2 * j);

  MultiVector residual = x;
  for (int j = k / 2; j >= 0; --j) {
    // Lower pieces L^i p_i (i < j) die under C^j; higher ones are already removed.
    MultiVector top = contract_power(residual, j);
    if (top.is_zero()) continue;
    // C^j L^j p = prod_{t=1..j} t (g - r - t + 1) p for primitive p of grade r.
    const int r = k - 2 * j;
    Scalar factor = 1;
    for (int t = 1; t <= j; ++t) factor *= t * (g - r - t + 1);
    top *= Scalar(1) / factor;
    MultiVector lifted = top;
    for (int t = 0; t < j; ++t) lifted = lefschetz(lifted);
    residual -= lifted;
    parts[j] = std::move(top);
  }
  if (!residual.is_zero()) throw ContractViolation("Lefschetz decomposition left a residual");
  return parts;
}

std::vector<SpanTarget> span_targets(const MultiVector& x) {
  const int g = x.space().genus();
  const auto parts = lefschetz_decomposition(x);
  std::vector<SpanTarget> out;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].is_zero()) continue;
    const int r = x.grade() - 2 * static_cast<int>(j);
    out.push_back({r, irrep_dimension(g, r)});
  }
  std::sort(out.begin(), out.end(), [](const SpanTarget& a, const SpanTarget& b) { return a.weight < b.weight; });
  return out;
}

SpanResult span_with_targets(const MultiVector& x, std::optional<std::chrono::milliseconds> budget) {
  if (!x.space().is_symplectic()) throw Unsupported("span computations need a symplectic space");
  const int g = x.space().genus();
  std::vector<SpanTarget> targets;
  std::uint64_t target_dim = 0;
  if (x.grade() <= g) {
    targets = span_targets(x);
    for (const auto& t : targets) target_dim += t.dimension;
  }
  SpanResult result{orbit_span(x, standard_generators(g), budget), targets, target_dim, false};
  if (!targets.empty() && result.basis.dimension() < target_dim) {
    result.basis = orbit_span(x, extended_generators(g), budget);
    result.escalated = true;
  }
  return result;
}

}  // namespace torelli
