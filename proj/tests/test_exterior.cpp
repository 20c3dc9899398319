#include <doctest.h>

#include "helpers.hpp"
#include "torelli/error.hpp"
#include "torelli/symplectic.hpp"
#include "torelli/verify.hpp"

using namespace torelli;
using test::E;
using test::S;

TEST_CASE("wedge examples") {
  auto h = Space::symplectic(2);
  auto a1 = MultiVector::basis_vector(h, a_index(1));
  auto b1 = MultiVector::basis_vector(h, b_index(1));
  CHECK(S(wedge(a1, b1)) == "a1^b1");
  CHECK(wedge(a1, a1).is_zero());
  CHECK(S(wedge(E("a1+b2", 2), E("a2", 2))) == "a1^a2 - a2^b2");
  CHECK_THROWS_AS(wedge(a1, MultiVector::basis_vector(Space::symplectic(3), 0)), ContractViolation);
}

TEST_CASE("homogeneity and zero handling") {
  auto h = Space::symplectic(2);
  CHECK_THROWS_AS(E("a1", 2) + E("a1^b1", 2), ContractViolation);
  auto z = MultiVector(h, 3);
  CHECK(z.is_zero());
  CHECK(z.grade() == 3);
  CHECK(wedge(E("a1^b1^a2", 2), E("b2^a1", 2)).is_zero());  // grade 5 > 4
  auto x = E("a1^b1", 2) - E("a1^b1", 2);
  CHECK(x.size() == 0);
}

TEST_CASE("contraction examples") {
  CHECK(S(contract(omega_form(3))) == "3");
  CHECK(S(contract(E("a1^b1^a2", 3))) == "a2");
  CHECK(contract(E("a1^a2^a3^a4", 4)).is_zero());
  CHECK_THROWS_AS(contract(E("a1", 2)), ContractViolation);
  CHECK_THROWS_AS(contract(MultiVector::monomial(Space::generic(4), {0, 1})), Unsupported);
}

TEST_CASE("contraction agrees with the term-by-term oracle") {
  verify::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    int g = verify::draw(rng, 1, 5);
    auto x = verify::random_element(rng, g, verify::draw(rng, 2, 2 * g));
    CHECK(test::to_oracle(contract(x)) == oracle::contract(test::to_oracle(x)));
  }
}

TEST_CASE("wedge agrees with the inversion-count oracle") {
  verify::Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    int g = verify::draw(rng, 1, 4);
    int p = verify::draw(rng, 0, 2 * g);
    int q = verify::draw(rng, 0, 2 * g - p);
    auto x = verify::random_element(rng, g, p), y = verify::random_element(rng, g, q);
    CHECK(test::to_oracle(wedge(x, y)) == oracle::wedge(test::to_oracle(x), test::to_oracle(y)));
  }
}

TEST_CASE("omega and lefschetz") {
  CHECK(S(omega_form(1)) == "a1^b1");
  CHECK(S(omega_form(2)) == "a1^b1 + a2^b2");
  CHECK(S(wedge(omega_form(2), omega_form(2))) == "2*a1^b1^a2^b2");
  CHECK_THROWS_AS(omega_form(0), ContractViolation);
  auto h = Space::symplectic(2);
  CHECK(S(lefschetz(MultiVector::unit(h))) == "a1^b1 + a2^b2");
  CHECK(S(lefschetz(E("a1", 2))) == "a1^a2^b2");
  CHECK(lefschetz(E("a1^b1^a2", 2)).is_zero());
}

TEST_CASE("Kaehler commutator constant is g - k") {
  // Brute force over every basis monomial for g <= 4.
  for (int g = 1; g <= 4; ++g) {
    auto h = Space::symplectic(g);
    for (int k = 0; k <= 2 * g; ++k)
      for (const auto& m : all_monomials(2 * g, k)) {
        auto x = MultiVector::monomial(h, m);
        auto d = contract(lefschetz(x));
        if (k >= 2) d -= lefschetz(contract(x));
        CHECK(d == Scalar(g - k) * x);
      }
  }
}

TEST_CASE("graded anticommutativity and associativity") {
  verify::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    int g = verify::draw(rng, 1, 5);
    int p = verify::draw(rng, 0, 3), q = verify::draw(rng, 0, 3), r = verify::draw(rng, 0, 3);
    auto x = verify::random_element(rng, g, std::min(p, 2 * g));
    auto y = verify::random_element(rng, g, std::min(q, 2 * g));
    auto z = verify::random_element(rng, g, std::min(r, 2 * g));
    auto yx = wedge(y, x);
    if ((x.grade() * y.grade()) % 2) yx = -yx;
    CHECK(wedge(x, y) == yx);
    CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
  }
}

TEST_CASE("expression parser examples") {
  CHECK(E("a1^b1 + a2^b2", 2) == omega_form(2));
  CHECK(S(E("3*a1^b1 - 1/2*a1^b1", 2)) == "5/2*a1^b1");
  CHECK(S(E("C(a1^b1^a2)", 3)) == "a2");
  CHECK(S(E("L(L(1))", 2)) == "2*a1^b1^a2^b2");
  CHECK(S(E("a1^a1", 2)) == "0");
  CHECK(S(E("-a2^a1", 2)) == "a1^a2");
  CHECK(S(E("-(a1 + b1)", 1)) == "-a1 - b1");
  CHECK(S(E("C(a1^b1+a2^b2+a3^b3)", 3)) == "3");
}

TEST_CASE("expression parser errors carry positions") {
  try {
    parse_expr("a1 ^ ^ b1", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Syntax);
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
  try {
    parse_expr("a1 +\n  a7", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::OutOfRange);
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_expr("", 2), ParseError);
  CHECK_THROWS_AS(parse_expr("a1 + a1^b1", 2), ParseError);
  CHECK_THROWS_AS(parse_expr("C(a1)", 2), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0", 2), ParseError);
}

TEST_CASE("serialize and parse round-trip") {
  verify::Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    int g = verify::draw(rng, 1, 5);
    auto x = verify::random_element(rng, g, verify::draw(rng, 1, 2 * g));
    auto text = S(x);
    auto back = parse_expr(text, g);
    if (!x.is_zero()) CHECK(back == x);
    CHECK(S(back) == text);
  }
}

TEST_CASE("three-form labels") {
  auto t = Space::three_forms(3);
  CHECK(t.dimension() == 20);
  CHECK(t.label(0) == "(a1^b1^a2)");
  for (Index i = 0; i < 20; ++i) CHECK(three_form_rank(3, three_form_unrank(3, i)) == i);
  CHECK(t.label(19) == "(b2^a3^b3)");
}
