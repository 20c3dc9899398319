#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "torelli/commands.hpp"
#include "torelli/error.hpp"
#include "torelli/verify.hpp"

using namespace torelli;
using test::E;
using test::S;

namespace {

std::string fixture_text(const std::string& name) {
  return read_text_file(std::filesystem::path(TORELLI_DATA_DIR) / (name + ".cfg"));
}

ValidConfiguration fixture(const std::string& name) { return ValidConfiguration::from(parse_config(fixture_text(name))); }

ParseError parse_failure(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  throw;
}

bool mentions(const std::vector<std::string>& v, const std::string& word) {
  return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(word) != std::string::npos; });
}

}  // namespace

TEST_CASE("parse the nested genus-4 configuration") {
  auto c = parse_config(fixture_text("fig5"));
  CHECK(c.genus == 4);
  CHECK(c.regions.size() == 3);
  CHECK(c.curves.size() == 4);
  CHECK(c.bounding_pairs.size() == 2);
  CHECK(c.cycle.size() == 2);
  CHECK(validate(c).empty());
}

TEST_CASE("parse errors") {
  CHECK(parse_failure("").kind() == ParseError::Kind::Syntax);
  CHECK(parse_failure("# only a comment\n\n").kind() == ParseError::Kind::Syntax);

  auto dangling = parse_failure("genus 2\nregion R genus 2 pairs 1 2\nbp f curves c1 c2\n");
  CHECK(dangling.kind() == ParseError::Kind::DanglingReference);
  CHECK(dangling.line() == 3);
  CHECK(dangling.column() == 13);

  auto dup = parse_failure("genus 1\nregion R genus 1 pairs 1\ncurve R class a1 regions R R\n");
  CHECK(dup.kind() == ParseError::Kind::DuplicateId);
  CHECK(dup.line() == 3);

  auto syntax = parse_failure("genus 2\nregion R genus x pairs\n");
  CHECK(syntax.kind() == ParseError::Kind::Syntax);
  CHECK(syntax.line() == 2);
  CHECK(syntax.column() == 16);

  CHECK(parse_failure("genus 2\nfrobnicate\n").kind() == ParseError::Kind::Syntax);
  CHECK(parse_failure("genus 2\ncurve c class b1 regions R R\n").kind() == ParseError::Kind::Syntax);
  CHECK(parse_failure("genus 2\ngenus 3\n").kind() == ParseError::Kind::Syntax);
  // A bounding pair named where a curve is expected.
  CHECK(parse_failure("genus 1\nregion R genus 1 pairs 1\nbp f curves f f\n").kind() ==
        ParseError::Kind::DanglingReference);
}

TEST_CASE("forward references resolve") {
  auto c = parse_config("cycle f\nbp f curves x y\ncurve x class a1 regions A B\ncurve y class a1 regions A B\n"
                        "region A genus 0 pairs\nregion B genus 0 pairs\ngenus 1\nbasepoint A\n");
  CHECK(c.bounding_pairs.size() == 1);
  CHECK(c.cycle.size() == 1);
}

TEST_CASE("validation of the shipped fixtures") {
  for (const char* f : {"fig3a", "fig4b", "fig5", "fig6", "fig7", "fig9a", "fig9b", "bp_g2", "bp_g3", "bp_g4", "bp_g5",
                        "sep_bp", "sep_only", "surface_g2"}) {
    CAPTURE(f);
    CHECK(validate(parse_config(fixture_text(f))).empty());
  }
}

TEST_CASE("raising a region genus breaks Euler and index bookkeeping") {
  auto c = parse_config(fixture_text("fig5"));
  c.regions[0].genus += 1;
  auto v = validate(c);
  CHECK(mentions(v, "euler"));
  CHECK(mentions(v, "index partition"));
  CHECK_THROWS_AS(ValidConfiguration::from(c), InvalidConfiguration);
}

TEST_CASE("validation reports every violation") {
  auto c = parse_config(
      "genus 3\n"
      "region A genus 1 pairs 1\n"
      "region B genus 1 pairs 1\n"
      "region C genus 0 pairs\n"
      "curve x class a2 regions A B\n"
      "curve y class a3 regions A B\n"
      "bp f curves x y\n"
      "cycle f f\n");
  auto v = validate(c);
  CHECK(mentions(v, "basepoint"));
  CHECK(mentions(v, "claimed by regions"));
  CHECK(mentions(v, "connectivity"));
  CHECK(mentions(v, "not homologous"));
  CHECK(mentions(v, "more than once"));
  CHECK(v.size() >= 5);
}

TEST_CASE("homotopic curves and trivial separating curves are rejected") {
  auto homotopic = parse_config(
      "genus 2\nbasepoint B\nregion A genus 0 pairs\nregion B genus 1 pairs 1\n"
      "curve x class a2 regions A B\ncurve y class a2 regions A B\nbp f curves x y\n");
  CHECK(mentions(validate(homotopic), "homotopic"));

  auto trivial = parse_config(
      "genus 1\nbasepoint B\nregion A genus 0 pairs\nregion B genus 1 pairs 1\nsepcurve d regions A B\n");
  CHECK(mentions(validate(trivial), "trivial"));

  auto wrong_twist = parse_config(
      "genus 2\nbasepoint B\nregion F genus 1 pairs 1\nregion B genus 0 pairs\n"
      "curve x class a2 regions F B\ncurve y class a2 regions F B\nbp f curves x y\nsep t curve x\ncycle t\n");
  CHECK(mentions(validate(wrong_twist), "non-separating"));
}

TEST_CASE("classification of the shipped fixtures") {
  auto fig5 = fixture("fig5");
  auto k5 = classify(fig5);
  CHECK(describe(fig5, k5) == "TRULY_NESTED f1<f2");
  CHECK(fig5->class_of(fig5->bounding_pairs[k5.order[0]]) == 3);
  CHECK(to_string(classify(fixture("fig7")).verdict) == std::string("DEPENDENT_CLASSES"));
  CHECK(to_string(classify(fixture("fig4b")).verdict) == std::string("NOT_NESTED"));
  CHECK(to_string(classify(fixture("sep_bp")).verdict) == std::string("HAS_SEPARATING_TWIST"));
  CHECK(describe(fixture("fig3a"), classify(fixture("fig3a"))) == "TRULY_NESTED f1<f2<f3");
  for (const char* f : {"fig6", "fig9a", "fig9b"})
    CHECK(classify(fixture(f)).verdict == Classification::Verdict::TrulyNested);
}

TEST_CASE("declared cycle order is not trusted") {
  auto text = fixture_text("fig5");
  text.replace(text.find("cycle f1 f2"), 11, "cycle f2 f1");
  auto c = ValidConfiguration::from(parse_config(text));
  CHECK(describe(c, classify(c)) == "TRULY_NESTED f1<f2");
}

TEST_CASE("far and near symplectic forms") {
  auto fig5 = fixture("fig5");
  CHECK(S(far_symplectic_form(fig5, classify(fig5))) == "a1^b1");
  CHECK(S(near_symplectic_form(fig5, classify(fig5))) == "a2^b2");
  auto fig6 = fixture("fig6");
  CHECK(S(far_symplectic_form(fig6, classify(fig6))) == "a1^b1");
  CHECK(S(near_symplectic_form(fig6, classify(fig6))) == "a4^b4");
  auto a = fixture("fig9a"), b = fixture("fig9b");
  CHECK(S(near_symplectic_form(a, classify(a))) == "a5^b5");
  CHECK(S(near_symplectic_form(b, classify(b))) == "a2^b2");
  auto fig3a = fixture("fig3a");
  CHECK(near_symplectic_form(fig3a, classify(fig3a)).is_zero());
  auto fig7 = fixture("fig7");
  CHECK_THROWS_AS(far_symplectic_form(fig7, classify(fig7)), ContractViolation);
}

TEST_CASE("sides of a bounding pair count inner handles") {
  auto fig5 = fixture("fig5");
  auto [far, near] = split(fig5.get(), 1);
  CHECK(far.genus == 2);
  CHECK(S(far.form) == "a1^b1 + a3^b3");
  CHECK(near.genus == 1);
}

TEST_CASE("serialization round-trips") {
  for (const char* f : {"fig3a", "fig5", "fig7", "sep_bp", "surface_g2"}) {
    auto c = parse_config(fixture_text(f));
    auto text = serialize_config(c);
    CHECK(serialize_config(parse_config(text)) == text);
  }
  verify::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    auto rc = verify::random_config(rng, verify::draw(rng, 0, 1) == 1);
    auto back = parse_config(serialize_config(rc.config));
    CHECK(validate(back).empty());
  }
}

TEST_CASE("classification is invariant under relabeling") {
  verify::Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    auto rc = verify::random_config(rng, verify::draw(rng, 0, 1) == 1);
    std::vector<std::pair<std::string, std::string>> rename;
    auto other = verify::relabel(rc.config, rng, &rename);
    std::map<std::string, std::string> names(rename.begin(), rename.end());
    auto a = ValidConfiguration::from(rc.config);
    auto b = ValidConfiguration::from(other);
    auto ka = classify(a), kb = classify(b);
    CHECK(ka.verdict == kb.verdict);
    CHECK(ka.verdict == (rc.nested ? Classification::Verdict::TrulyNested : Classification::Verdict::NotNested));
    REQUIRE(ka.order.size() == kb.order.size());
    for (std::size_t j = 0; j < ka.order.size(); ++j)
      CHECK(names.at(a->bounding_pairs[ka.order[j]].id) == b->bounding_pairs[kb.order[j]].id);
  }
}

TEST_CASE("nesting order is a strict total order") {
  verify::Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    auto rc = verify::random_config(rng, true);
    auto c = ValidConfiguration::from(rc.config);
    auto k = classify(c);
    REQUIRE(k.verdict == Classification::Verdict::TrulyNested);
    // Each later pair puts every earlier pair on its far side, never the reverse.
    for (std::size_t x = 0; x < k.order.size(); ++x)
      for (std::size_t y = x + 1; y < k.order.size(); ++y) {
        auto outer = split(c.get(), k.order[y]).first;
        auto inner = split(c.get(), k.order[x]).first;
        for (auto e : c->bounding_pairs[k.order[x]].curves)
          for (auto r : c->curves[e].ends) CHECK(outer.regions[r]);
        bool reverse = true;
        for (auto e : c->bounding_pairs[k.order[y]].curves)
          for (auto r : c->curves[e].ends) reverse = reverse && inner.regions[r];
        CHECK_FALSE(reverse);
      }
  }
}
