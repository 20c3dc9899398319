#pragma once

// Closed-form Johnson invariants of abelian cycles in standard position.
//
// Classes are oriented with the far side on the left: c_i = +a_{class(f_i)}.
// Factors c_i appear in the nesting order discovered by classify, so every
// value is reproducible term for term.

#include <optional>
#include <string>

#include "torelli/surface.hpp"

namespace torelli {

/// tau_0 of the generator of H_0: the symplectic form. Requires g >= 2.
MultiVector tau0(int genus);

/// Johnson homomorphism of one bounding pair: omega_far ^ a_class, where
/// omega_far is the symplectic form of the side away from the basepoint.
/// Needs only a well-formed configuration; a genus-0 far side gives 0.
MultiVector tauJ_bp(const Configuration& c, std::size_t bp_index);

/// Product with a bounding pair of class a_m: x ^ a_m.
MultiVector extend_by_bp(const MultiVector& x, int class_index);

/// tau_k of the abelian cycle, k = cycle length >= 1. Zero unless truly nested.
MultiVector tau_abelian(const ValidConfiguration& c);

/// tau_{k+2} of the doubled class. k = 0 gives omega ^ omega, odd k gives 0,
/// even truly nested k gives 2 omega_0 ^ omega^0 ^ c_1 ^ ... ^ c_k.
/// Unsupported for even non-nested cycles and for cycles with separating twists.
MultiVector gysin_tau(const ValidConfiguration& c);

/// Grade-3 element of H as a grade-1 element of the three-form space.
MultiVector as_three_form(const MultiVector& x);

/// Wedge in ^k(^3 H) of tauJ_bp over the cycle. Separating twists have
/// tauJ = 0, so a cycle containing one yields 0.
MultiVector tauJ_star(const ValidConfiguration& c);

/// Rank of the grade-3 values tauJ_bp(f), f in the cycle.
std::size_t taujstar_rank(const ValidConfiguration& c);

bool cycle_has_separating_twist(const Configuration& c);

}  // namespace torelli
