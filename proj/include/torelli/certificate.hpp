#pragma once

#include <optional>
#include <string>

#include "torelli/invariants.hpp"

namespace torelli {

struct Certificate {
  enum class Conclusion {
    NonzeroDetectedByTau,     ///< tau != 0
    InKerTauNonzeroHomology,  ///< tau = 0 but (tau_J)_* != 0
    InKerTauUndetected,       ///< both vanish; nothing is concluded
  };

  std::string verdict;                ///< classification line
  MultiVector tau;                    ///< tau_k, or tau_0 for the empty cycle
  std::optional<MultiVector> gysin;   ///< nullopt when no formula applies
  std::string gysin_note;             ///< why gysin is absent
  MultiVector taujstar;
  std::string taujstar_note;
  bool rank_check_agrees = true;      ///< wedge != 0 iff the tau_J values are independent
  Conclusion conclusion;
};

const char* to_string(Certificate::Conclusion c);

Certificate certify(const ValidConfiguration& c);

/// Stable text: one "field: value" line per sub-invariant, then the conclusion.
std::string report(const Certificate& cert);

struct Comparison {
  bool equal_tau;
  std::optional<bool> equal_gysin;  ///< nullopt if either side has none
};

Comparison compare(const Certificate& x, const Certificate& y);

/// "EQUAL_TAU" or "DIFFER_TAU", then "EQUAL_GYSIN", "DIFFER_GYSIN" or "GYSIN_NOT_APPLICABLE".
std::string report(const Comparison& cmp);

}  // namespace torelli
