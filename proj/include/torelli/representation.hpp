#pragma once

// Bookkeeping for ^k H as an Sp(2g)-module:
//   ^k H = V(l_k) + V(l_{k-2}) + ... for k <= g, with V(l_k) = ker C_k.

#include <chrono>
#include <optional>
#include <vector>

#include "torelli/sp_action.hpp"
#include "torelli/subspace.hpp"

namespace torelli {

/// Smallest subspace containing x and stable under every generator.
/// Breadth-first closure with full reduction after each wave. Throws
/// TimeBudgetExceeded if `budget` is given and runs out.
SubspaceBasis orbit_span(const MultiVector& x, const std::vector<SpMatrix>& generators,
                         std::optional<std::chrono::milliseconds> budget = std::nullopt);

/// dim V(l_k) = C(2g,k) - C(2g,k-2). Unsupported for k > g.
std::uint64_t irrep_dimension(int genus, int k);

/// True iff C(x) = 0. Grade 0 and 1 elements count as primitive.
bool primitive_membership(const MultiVector& x);

/// dim ker C_k on ^k H, by exact rank of the contraction matrix.
std::uint64_t contraction_nullity(int genus, int k);

/// Primitive p_j with x = sum_j L^j p_j, indexed by j (p_j has grade k-2j).
/// Requires grade k <= g so the decomposition is unique.
std::vector<MultiVector> lefschetz_decomposition(const MultiVector& x);

struct SpanTarget {
  int weight;              ///< the r of V(l_r)
  std::uint64_t dimension;
};

/// Irreducible summands in which x has a nonzero component, lowest weight
/// first. Their dimensions sum to the dimension of the Sp-span of x.
std::vector<SpanTarget> span_targets(const MultiVector& x);

struct SpanResult {
  SubspaceBasis basis;
  std::vector<SpanTarget> targets;  ///< empty when grade > genus
  std::uint64_t target_dimension = 0;
  bool escalated = false;           ///< extended generators were needed
  bool matches() const { return !targets.empty() && basis.dimension() == target_dimension; }
};

/// orbit_span with the standard generators; if the achieved dimension falls
/// short of the decomposition target, retries with extended_generators.
SpanResult span_with_targets(const MultiVector& x,
                             std::optional<std::chrono::milliseconds> budget = std::nullopt);

}  // namespace torelli
