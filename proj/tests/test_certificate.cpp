#include <doctest.h>

#include "helpers.hpp"
#include "torelli/commands.hpp"

using namespace torelli;

namespace {

ValidConfiguration fixture(const std::string& name) {
  return load_config(std::filesystem::path(TORELLI_DATA_DIR) / (name + ".cfg"));
}

}  // namespace

TEST_CASE("ring cycle is in the kernel of tau but nonzero") {
  auto cert = certify(fixture("fig7"));
  CHECK(cert.tau.is_zero());
  CHECK_FALSE(cert.taujstar.is_zero());
  CHECK(cert.conclusion == Certificate::Conclusion::InKerTauNonzeroHomology);
  CHECK_FALSE(cert.gysin.has_value());
  CHECK(cert.rank_check_agrees);
}

TEST_CASE("nested cycle is detected by tau") {
  auto cert = certify(fixture("fig5"));
  CHECK(cert.conclusion == Certificate::Conclusion::NonzeroDetectedByTau);
  CHECK(report(cert) ==
        "verdict: TRULY_NESTED f1<f2\n"
        "tau: a1^b1^a3^a4\n"
        "gysin: 2*a1^b1^a2^b2^a3^a4\n"
        "taujstar: (a1^b1^a3)^(a1^b1^a4) + (a1^b1^a3)^(a3^b3^a4)\n"
        "rank_check: AGREE\n"
        "conclusion: NONZERO_DETECTED_BY_TAU\n");
}

TEST_CASE("separating twists leave nothing detected") {
  auto cert = certify(fixture("sep_bp"));
  CHECK(cert.tau.is_zero());
  CHECK(cert.taujstar.is_zero());
  CHECK(cert.conclusion == Certificate::Conclusion::InKerTauUndetected);
}

TEST_CASE("genus-5 pair: same tau, different doubled class") {
  auto cmp = compare(certify(fixture("fig9a")), certify(fixture("fig9b")));
  CHECK(cmp.equal_tau);
  REQUIRE(cmp.equal_gysin.has_value());
  CHECK_FALSE(*cmp.equal_gysin);
  CHECK(report(cmp) == "EQUAL_TAU\nDIFFER_GYSIN\n");
  auto none = compare(certify(fixture("fig7")), certify(fixture("sep_bp")));
  CHECK(report(none) == "EQUAL_TAU\nGYSIN_NOT_APPLICABLE\n");
}

TEST_CASE("certificate text is stable") {
  auto first = render_certify(fixture("fig9a"), fixture("fig9b"));
  CHECK(first == render_certify(fixture("fig9a"), fixture("fig9b")));
  CHECK(first.find("[comparison]\nEQUAL_TAU\nDIFFER_GYSIN\n") != std::string::npos);
}
