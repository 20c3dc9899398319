#include "torelli/certificate.hpp"

#include "torelli/error.hpp"
#include "torelli/expression.hpp"

namespace torelli {

const char* to_string(Certificate::Conclusion c) {
  switch (c) {
    case Certificate::Conclusion::NonzeroDetectedByTau: return "NONZERO_DETECTED_BY_TAU";
    case Certificate::Conclusion::InKerTauNonzeroHomology: return "IN_KER_TAU_NONZERO_HOMOLOGY";
    case Certificate::Conclusion::InKerTauUndetected: return "IN_KER_TAU_UNDETECTED";
  }
  return "?";
}

Certificate certify(const ValidConfiguration& c) {
  const bool empty = c->cycle.empty();
  std::string verdict = empty ? "EMPTY_CYCLE" : describe(c, classify(c));
  MultiVector tau = empty ? tau0(c->genus) : tau_abelian(c);

  std::optional<MultiVector> gysin;
  std::string gysin_note;
  try {
    gysin = gysin_tau(c);
  } catch (const Unsupported& e) {
    gysin_note = e.what();
  }

  MultiVector star = tauJ_star(c);
  std::string star_note;
  if (cycle_has_separating_twist(c.get())) star_note = "tau_J vanishes on separating twists";
  const bool independent = taujstar_rank(c) == c->cycle.size();
  const bool agrees = independent == !star.is_zero();

  Certificate::Conclusion conclusion = Certificate::Conclusion::InKerTauUndetected;
  if (!tau.is_zero())
    conclusion = Certificate::Conclusion::NonzeroDetectedByTau;
  else if (!star.is_zero())
    conclusion = Certificate::Conclusion::InKerTauNonzeroHomology;
  return Certificate{verdict, tau, gysin, gysin_note, star, star_note, agrees, conclusion};
}

std::string report(const Certificate& cert) {
  std::string out;
  out += "verdict: " + cert.verdict + "\n";
  out += "tau: " + serialize(cert.tau) + "\n";
  out += "gysin: " + (cert.gysin ? serialize(*cert.gysin) : "n/a (" + cert.gysin_note + ")") + "\n";
  out += "taujstar: " + serialize(cert.taujstar);
  if (!cert.taujstar_note.empty()) out += " (" + cert.taujstar_note + ")";
  out += "\n";
  out += std::string("rank_check: ") + (cert.rank_check_agrees ? "AGREE" : "DISAGREE") + "\n";
  out += std::string("conclusion: ") + to_string(cert.conclusion) + "\n";
  return out;
}

Comparison compare(const Certificate& x, const Certificate& y) {
  Comparison cmp{x.tau == y.tau, std::nullopt};
  if (x.gysin && y.gysin) cmp.equal_gysin = *x.gysin == *y.gysin;
  return cmp;
}

std::string report(const Comparison& cmp) {
  std::string out = cmp.equal_tau ? "EQUAL_TAU\n" : "DIFFER_TAU\n";
  if (!cmp.equal_gysin)
    out += "GYSIN_NOT_APPLICABLE\n";
  else
    out += *cmp.equal_gysin ? "EQUAL_GYSIN\n" : "DIFFER_GYSIN\n";
  return out;
}

}  // namespace torelli
