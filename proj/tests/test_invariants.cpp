#include <doctest.h>

#include "helpers.hpp"
#include "torelli/commands.hpp"
#include "torelli/error.hpp"
#include "torelli/invariants.hpp"
#include "torelli/sp_action.hpp"
#include "torelli/subspace.hpp"
#include "torelli/symplectic.hpp"
#include "torelli/verify.hpp"

using namespace torelli;
using test::E;
using test::S;

namespace {

ValidConfiguration fixture(const std::string& name) {
  return load_config(std::filesystem::path(TORELLI_DATA_DIR) / (name + ".cfg"));
}

/// Exchanges pair indices i and j throughout a configuration.
Configuration swap_pairs(Configuration c, int i, int j) {
  auto swap = [&](int m) { return m == i ? j : (m == j ? i : m); };
  for (auto& r : c.regions) {
    for (auto& p : r.pairs) p = swap(p);
    std::sort(r.pairs.begin(), r.pairs.end());
  }
  for (auto& cv : c.curves)
    if (cv.class_index) cv.class_index = swap(*cv.class_index);
  return c;
}

}  // namespace

TEST_CASE("tau_0") {
  CHECK(S(tau0(2)) == "a1^b1 + a2^b2");
  CHECK(S(tau0(3)) == "a1^b1 + a2^b2 + a3^b3");
  for (int g = 2; g <= 5; ++g) CHECK(contract(tau0(g)) == MultiVector::scalar(Space::symplectic(g), g));
  CHECK_THROWS_AS(tau0(1), ContractViolation);
}

TEST_CASE("Johnson homomorphism of a bounding pair") {
  CHECK(S(tauJ_bp(fixture("bp_g2").get(), 0)) == "a1^b1^a2");
  auto ring = fixture("fig7");
  CHECK(S(tauJ_bp(ring.get(), 0)) == "a1^b1^a3");
  CHECK(S(tauJ_bp(ring.get(), 1)) == "a2^b2^a3");
  // Genus-0 far side: validation refuses it, the formula still gives 0.
  auto degenerate = parse_config(
      "genus 2\nbasepoint B\nregion A genus 0 pairs\nregion B genus 1 pairs 1\n"
      "curve x class a2 regions A B\ncurve y class a2 regions A B\nbp f curves x y\ncycle f\n");
  CHECK_FALSE(validate(degenerate).empty());
  CHECK(tauJ_bp(degenerate, 0).is_zero());
  CHECK_THROWS_AS(tauJ_bp(degenerate, 3), ContractViolation);
}

TEST_CASE("tau_1 equals the Johnson homomorphism") {
  for (const char* f : {"bp_g2", "bp_g3", "bp_g4", "bp_g5"}) {
    auto c = fixture(f);
    CHECK(tau_abelian(c) == tauJ_bp(c.get(), 0));
  }
}

TEST_CASE("product with a bounding pair") {
  CHECK(S(extend_by_bp(E("a1^b1", 2), 2)) == "a1^b1^a2");
  CHECK(extend_by_bp(E("a1^a2", 2), 2).is_zero());
  CHECK(extend_by_bp(MultiVector(Space::symplectic(3), 2), 1).is_zero());
  CHECK_THROWS_AS(extend_by_bp(E("a1", 2), 3), ContractViolation);
}

TEST_CASE("tau on abelian cycles") {
  CHECK(S(tau_abelian(fixture("fig5"))) == "a1^b1^a3^a4");
  CHECK(tau_abelian(fixture("fig7")).is_zero());
  CHECK(tau_abelian(fixture("fig4b")).is_zero());
  CHECK(tau_abelian(fixture("sep_bp")).is_zero());
  CHECK(tau_abelian(fixture("fig3a")).grade() == 5);
  CHECK(tau_abelian(fixture("fig7")).grade() == 4);
  CHECK_THROWS_AS(tau_abelian(fixture("surface_g2")), ContractViolation);
}

TEST_CASE("nested formula is the iterated product") {
  verify::Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    auto c = ValidConfiguration::from(verify::random_config(rng, true).config);
    auto k = classify(c);
    auto x = far_symplectic_form(c, k);
    for (auto b : k.order) x = extend_by_bp(x, c->class_of(c->bounding_pairs[b]));
    CHECK(tau_abelian(c) == x);
    CHECK(tau_abelian(c).grade() == static_cast<int>(c->cycle.size()) + 2);
  }
}

TEST_CASE("doubled classes") {
  CHECK(S(gysin_tau(fixture("surface_g2"))) == "2*a1^b1^a2^b2");
  CHECK(S(gysin_tau(fixture("fig6"))) == "2*a1^b1^a2^a3^a4^b4");
  CHECK(E("2*a1^b1^a4^b4^a2^a3", 4) == gysin_tau(fixture("fig6")));
  CHECK(gysin_tau(fixture("fig3a")).is_zero());
  CHECK(gysin_tau(fixture("fig3a")).grade() == 7);
  CHECK(gysin_tau(fixture("bp_g3")).is_zero());
  CHECK_THROWS_AS(gysin_tau(fixture("fig4b")), Unsupported);
  CHECK_THROWS_AS(gysin_tau(fixture("fig7")), Unsupported);
  CHECK_THROWS_AS(gysin_tau(fixture("sep_bp")), Unsupported);
}

TEST_CASE("doubled class parity on random cycles") {
  verify::Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    auto c = ValidConfiguration::from(verify::random_config(rng, true).config);
    auto v = gysin_tau(c);
    CHECK(v.grade() == static_cast<int>(c->cycle.size()) + 4);
    if (c->cycle.size() % 2) {
      CHECK(v.is_zero());
    } else {
      for (const auto& [m, coeff] : v.terms()) CHECK((is_integer(coeff) && coeff.get_num() % 2 == 0));
    }
  }
}

TEST_CASE("wedge of Johnson values") {
  auto ring = fixture("fig7");
  auto star = tauJ_star(ring);
  CHECK(S(star) == "(a1^b1^a3)^(a2^b2^a3)");
  CHECK(star.grade() == 2);
  CHECK(star.space().dimension() == 20);
  auto t = as_three_form(E("a1^b1^a3", 3));
  CHECK(wedge(t, t).is_zero());
  CHECK(tauJ_star(fixture("bp_g2")) == as_three_form(tauJ_bp(fixture("bp_g2").get(), 0)));
  CHECK(tauJ_star(fixture("sep_bp")).is_zero());
}

TEST_CASE("wedge vanishes exactly when the Johnson values are dependent") {
  verify::Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    auto c = ValidConfiguration::from(verify::random_config(rng, verify::draw(rng, 0, 1) == 1, 5).config);
    CHECK((taujstar_rank(c) == c->cycle.size()) == !tauJ_star(c).is_zero());
  }
}

TEST_CASE("pair swaps act on every invariant") {
  for (const char* f : {"fig5", "fig6", "fig3a", "fig9a"}) {
    auto c = fixture(f);
    const int g = c->genus;
    for (int i = 1; i <= g; ++i)
      for (int j = i + 1; j <= g; ++j) {
        CAPTURE(f);
        CAPTURE(i);
        CAPTURE(j);
        auto swapped = ValidConfiguration::from(swap_pairs(c.get(), i, j));
        auto m = pair_swap(g, i, j);
        CHECK(tau_abelian(swapped) == induced_action(m, tau_abelian(c)));
        CHECK(gysin_tau(swapped) == induced_action(m, gysin_tau(c)));
        for (std::size_t b = 0; b < c->bounding_pairs.size(); ++b)
          CHECK(tauJ_bp(swapped.get(), b) == induced_action(m, tauJ_bp(c.get(), b)));
      }
  }
}
