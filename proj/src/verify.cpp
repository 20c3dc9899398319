#include "torelli/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "torelli/commands.hpp"
#include "torelli/error.hpp"
#include "torelli/expression.hpp"
#include "torelli/representation.hpp"
#include "torelli/symplectic.hpp"

#ifndef TORELLI_DATA_DIR
#define TORELLI_DATA_DIR "fixtures"
#endif

namespace torelli::verify {

Context default_context() {
  Context ctx;
  ctx.data_dir = TORELLI_DATA_DIR;
  ctx.golden_dir = ctx.data_dir / "golden";
  return ctx;
}

int draw(Rng& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = Rng::max() - Rng::max() % span;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return lo + static_cast<int>(x % span);
}

MultiVector random_element(Rng& rng, int genus, int grade) {
  auto h = Space::symplectic(genus);
  MultiVector x(h, grade);
  const int terms = draw(rng, 1, 4);
  std::vector<Index> labels(static_cast<std::size_t>(2 * genus));
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<Index>(i);
  for (int t = 0; t < terms; ++t) {
    shuffle(labels, rng);
    std::vector<Index> pick(labels.begin(), labels.begin() + grade);
    int num = draw(rng, -5, 5);
    if (num == 0) num = 1;
    Scalar c = Scalar(num) / draw(rng, 1, 3);
    x += MultiVector::monomial(h, pick, c);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Random configurations

RandomConfig random_config(Rng& rng, bool nested, int max_genus) {
  for (;;) {
    const int nodes = draw(rng, 2, 5);
    std::vector<int> parent(nodes, -1);
    for (int v = 1; v < nodes; ++v) parent[v] = draw(rng, 0, v - 1);
    std::vector<int> children(nodes, 0);
    for (int v = 1; v < nodes; ++v) ++children[parent[v]];
    std::vector<int> handles(nodes);
    for (int v = 0; v < nodes; ++v) handles[v] = (v > 0 && children[v] == 0) ? draw(rng, 1, 2) : draw(rng, 0, 1);
    // Extra genus-1 regions hung off separating curves.
    std::vector<int> pendant_at;
    const int pendants = draw(rng, 0, 2) == 0 ? 1 : 0;
    for (int p = 0; p < pendants; ++p) pendant_at.push_back(draw(rng, 0, nodes - 1));

    int genus = static_cast<int>(pendant_at.size()) + nodes - 1;
    for (int h : handles) genus += h;
    if (genus > max_genus || genus < 2) continue;

    std::vector<int> indices(genus);
    for (int i = 0; i < genus; ++i) indices[i] = i + 1;
    shuffle(indices, rng);
    std::size_t next = 0;

    Configuration c;
    c.genus = genus;
    for (int v = 0; v < nodes; ++v) {
      Region r{"r" + std::to_string(v), handles[v], {}};
      for (int i = 0; i < handles[v]; ++i) r.pairs.push_back(indices[next++]);
      std::sort(r.pairs.begin(), r.pairs.end());
      c.regions.push_back(std::move(r));
    }
    c.basepoint = 0;
    std::vector<int> edge_class(nodes, 0);
    for (int v = 1; v < nodes; ++v) {
      edge_class[v] = indices[next++];
      const std::size_t a = c.curves.size();
      for (const char* name : {"alpha", "beta"})
        c.curves.push_back({std::string(name) + std::to_string(v), edge_class[v],
                            {static_cast<std::size_t>(v), static_cast<std::size_t>(parent[v])}});
      c.bounding_pairs.push_back({"f" + std::to_string(v), {a, a + 1}});
    }
    for (std::size_t p = 0; p < pendant_at.size(); ++p) {
      const std::size_t region = c.regions.size();
      c.regions.push_back({"p" + std::to_string(p), 1, {indices[next++]}});
      c.curves.push_back({"delta" + std::to_string(p), std::nullopt,
                          {static_cast<std::size_t>(pendant_at[p]), region}});
      c.separating_twists.push_back({"t" + std::to_string(p), c.curves.size() - 1});
    }

    auto ancestor_or_self = [&](int a, int v) {
      for (; v >= 0; v = parent[v])
        if (v == a) return true;
      return false;
    };
    auto depth = [&](int v) {
      int d = 0;
      for (; parent[v] >= 0; v = parent[v]) ++d;
      return d;
    };

    std::vector<int> chosen;
    if (nested) {
      int v = draw(rng, 1, nodes - 1);
      for (int u = v; u > 0; u = parent[u])
        if (u == v || draw(rng, 0, 1)) chosen.push_back(u);
    } else {
      for (int v = 1; v < nodes; ++v)
        if (draw(rng, 0, 1)) chosen.push_back(v);
      if (chosen.empty()) chosen.push_back(draw(rng, 1, nodes - 1));
    }
    std::sort(chosen.begin(), chosen.end(), [&](int x, int y) { return depth(x) > depth(y); });
    bool on_one_path = true;
    for (std::size_t i = 0; i + 1 < chosen.size(); ++i)
      if (!ancestor_or_self(chosen[i + 1], chosen[i])) on_one_path = false;

    RandomConfig out{c, on_one_path, {}, MultiVector(Space::symplectic(genus), 2)};
    for (int v : chosen) {
      out.config.cycle.push_back({Generator::Kind::BoundingPair, static_cast<std::size_t>(v - 1)});
      out.order.push_back("f" + std::to_string(v));
    }
    if (on_one_path) {
      // Far side of the deepest pair: its subtree with hung handles and the
      // classes of pairs inside the subtree.
      const int top = chosen.front();
      auto add_pair = [&](int m) { out.far_form.add_term({a_index(m), b_index(m)}, 1); };
      for (int v = 0; v < nodes; ++v) {
        if (!ancestor_or_self(top, v)) continue;
        for (int m : c.regions[v].pairs) add_pair(m);
        if (v != top) add_pair(edge_class[v]);
      }
      for (std::size_t p = 0; p < pendant_at.size(); ++p)
        if (ancestor_or_self(top, pendant_at[p])) add_pair(c.regions[nodes + p].pairs[0]);
    }
    shuffle(out.config.cycle, rng);
    std::vector<std::pair<std::string, std::string>> ignored;
    out.config = relabel(out.config, rng, &ignored);
    // Keep the expected order in terms of the new names.
    std::map<std::string, std::string> names(ignored.begin(), ignored.end());
    for (auto& id : out.order) id = names.at(id);
    return out;
  }
}

namespace {

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  shuffle(p, rng);
  return p;
}

}  // namespace

Configuration relabel(const Configuration& c, Rng& rng, std::vector<std::pair<std::string, std::string>>* rename) {
  // new position -> old index, and its inverse
  auto inverse = [](const std::vector<std::size_t>& p) {
    std::vector<std::size_t> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
    return q;
  };
  const auto pr = random_permutation(c.regions.size(), rng);
  const auto pc = random_permutation(c.curves.size(), rng);
  const auto pb = random_permutation(c.bounding_pairs.size(), rng);
  const auto ps = random_permutation(c.separating_twists.size(), rng);
  const auto qr = inverse(pr), qc = inverse(pc), qb = inverse(pb), qs = inverse(ps);

  std::size_t total = c.regions.size() + c.curves.size() + c.bounding_pairs.size() + c.separating_twists.size();
  auto tags = random_permutation(total, rng);
  std::size_t t = 0;
  std::map<std::string, std::string> names;
  auto fresh = [&](const std::string& old) {
    auto name = "x" + std::to_string(tags[t++]);
    names[old] = name;
    if (rename) rename->push_back({old, name});
    return name;
  };

  Configuration out;
  out.genus = c.genus;
  for (auto i : pr) out.regions.push_back({fresh(c.regions[i].id), c.regions[i].genus, c.regions[i].pairs});
  if (c.basepoint) out.basepoint = qr[*c.basepoint];
  for (auto i : pc) {
    const auto& cv = c.curves[i];
    Curve n{fresh(cv.id), cv.class_index, {qr[cv.ends[0]], qr[cv.ends[1]]}};
    if (draw(rng, 0, 1)) std::swap(n.ends[0], n.ends[1]);
    out.curves.push_back(std::move(n));
  }
  for (auto i : pb) {
    const auto& bp = c.bounding_pairs[i];
    BoundingPair n{fresh(bp.id), {qc[bp.curves[0]], qc[bp.curves[1]]}};
    if (draw(rng, 0, 1)) std::swap(n.curves[0], n.curves[1]);
    out.bounding_pairs.push_back(std::move(n));
  }
  for (auto i : ps) out.separating_twists.push_back({fresh(c.separating_twists[i].id), qc[c.separating_twists[i].curve]});
  for (const auto& g : c.cycle)
    out.cycle.push_back({g.kind, g.kind == Generator::Kind::BoundingPair ? qb[g.index] : qs[g.index]});
  shuffle(out.cycle, rng);
  return out;
}

// ---------------------------------------------------------------------------
// Suite

namespace {

MultiVector expr(const std::string& text, int genus) { return parse_expr(text, genus); }

ValidConfiguration fixture(const Context& ctx, const std::string& name) {
  return load_config(ctx.data_dir / (name + ".cfg"));
}

Outcome same(const MultiVector& expected, const MultiVector& actual) {
  return {expected == actual, serialize(expected), serialize(actual)};
}

Outcome same(const std::string& expected, const std::string& actual) { return {expected == actual, expected, actual}; }

/// Conjunction of several comparisons.
Outcome all(std::vector<Outcome> parts) {
  Outcome out{true, {}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) {
      out.expected += "; ";
      out.actual += "; ";
    }
    out.pass = out.pass && parts[i].pass;
    out.expected += parts[i].expected;
    out.actual += parts[i].actual;
  }
  return out;
}

/// Property check over `cases` random trials; reports the first failure.
Outcome property(int cases, const std::function<std::optional<std::string>(Rng&)>& trial, std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    if (auto failure = trial(rng)) return {false, std::to_string(cases) + " cases hold", "case " + std::to_string(i) + ": " + *failure};
  }
  return {true, std::to_string(cases) + " cases hold", std::to_string(cases) + " cases hold"};
}

MultiVector fold_from(const ValidConfiguration& c, const Classification& k, MultiVector start) {
  for (auto b : k.order) start = extend_by_bp(start, c->class_of(c->bounding_pairs[b]));
  return start;
}

std::string omega_text(int count) {
  std::string s;
  for (int i = 1; i <= count; ++i) s += (i > 1 ? "+" : "") + std::string("a") + std::to_string(i) + "^b" + std::to_string(i);
  return s;
}

struct GoldenSpec {
  std::vector<std::string> fixtures;
  std::string command;
  std::string body;
};

GoldenSpec read_golden(const std::filesystem::path& path) {
  GoldenSpec g;
  std::istringstream in(read_text_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# fixture: ", 0) == 0)
      g.fixtures.push_back(line.substr(11));
    else if (line.rfind("# command: ", 0) == 0)
      g.command = line.substr(11);
    else if (line.rfind("#", 0) == 0)
      continue;
    else
      g.body += line + "\n";
  }
  return g;
}

std::string render(const Context& ctx, const GoldenSpec& g) {
  auto load = [&](const std::string& f) { return load_config(ctx.data_dir / f); };
  if (g.fixtures.empty()) throw std::runtime_error("golden file names no fixture");
  if (g.command == "certify" && g.fixtures.size() == 2) return render_certify(load(g.fixtures[0]), load(g.fixtures[1]));
  if (g.fixtures.size() != 1) throw std::runtime_error("golden file names too many fixtures");
  auto c = load(g.fixtures[0]);
  if (g.command == "eval") return render_eval(c);
  if (g.command == "gysin") return render_gysin(c);
  if (g.command == "taujstar") return render_taujstar(c);
  if (g.command == "certify") return render_certify(c);
  throw std::runtime_error("unknown golden command '" + g.command + "'");
}

class SuiteBuilder {
 public:
  void add(std::string id, std::string ref, int criterion, std::vector<std::string> tags,
           std::function<Outcome(const Context&)> fn) {
    if (criterion > 0) tags.push_back("c" + std::to_string(criterion));
    checks_.push_back({std::move(id), std::move(ref), std::move(tags), criterion, std::move(fn)});
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

void tau0_checks(SuiteBuilder& s) {
  for (int g = 2; g <= 5; ++g)
    s.add("c1.tau0.g" + std::to_string(g), "tau_0 of the point class is the symplectic form", 1, {"tau0"},
          [g](const Context&) { return same(expr(omega_text(g), g), tau0(g)); });
}

void johnson_checks(SuiteBuilder& s) {
  struct Case {
    const char* fixture;
    int genus;
    int far_genus;
    int cls;
  };
  for (auto cs : {Case{"bp_g2", 2, 1, 2}, Case{"bp_g3", 3, 2, 3}, Case{"bp_g4", 4, 3, 4}, Case{"bp_g5", 5, 3, 4}}) {
    s.add(std::string("c2.johnson.") + cs.fixture,
          "Johnson homomorphism of one bounding pair, and tau_1 agrees with it", 2, {"johnson"},
          [cs](const Context& ctx) {
            auto c = fixture(ctx, cs.fixture);
            auto expected = expr("(" + omega_text(cs.far_genus) + ")^a" + std::to_string(cs.cls), cs.genus);
            auto tj = tauJ_bp(c.get(), 0);
            return all({same(expected, tj), same(tj, tau_abelian(c))});
          });
  }
}

void nested_checks(SuiteBuilder& s) {
  struct Case {
    const char* fixture;
    int genus;
    const char* tau;
  };
  for (auto cs : {Case{"fig3a", 4, "a1^b1^a2^a3^a4"}, Case{"fig5", 4, "a1^b1^a3^a4"}, Case{"fig6", 4, "a1^b1^a2^a3"},
                  Case{"fig9a", 5, "a1^b1^a3^a4"}, Case{"fig9b", 5, "a1^b1^a3^a4"}}) {
    s.add(std::string("c3.nested.") + cs.fixture,
          "nested abelian cycle formula equals the iterated product with bounding pairs", 3, {"nested"},
          [cs](const Context& ctx) {
            auto c = fixture(ctx, cs.fixture);
            auto k = classify(c);
            auto tau = tau_abelian(c);
            return all({same("TRULY_NESTED", to_string(k.verdict)), same(fold_from(c, k, far_symplectic_form(c, k)), tau),
                        same(expr(cs.tau, cs.genus), tau)});
          });
  }
  s.add("c3.nested.random_chains", "nested formula on 50 random nested chains of genus <= 6", 3, {"nested", "random"},
        [](const Context&) {
          return property(
              50,
              [](Rng& rng) -> std::optional<std::string> {
                auto rc = random_config(rng, true, 6);
                auto c = ValidConfiguration::from(rc.config);
                auto k = classify(c);
                if (k.verdict != Classification::Verdict::TrulyNested) return std::string("not classified nested");
                std::vector<std::string> order;
                for (auto b : k.order) order.push_back(c->bounding_pairs[b].id);
                if (order != rc.order) return "order " + describe(c, k);
                MultiVector expected = rc.far_form;
                for (const auto& id : rc.order)
                  expected = wedge(expected, MultiVector::basis_vector(expected.space(),
                                                                       a_index(c->class_of(c->bounding_pairs[*c->find_bounding_pair(id)]))));
                auto tau = tau_abelian(c);
                if (!(tau == expected)) return "tau " + serialize(tau) + " expected " + serialize(expected);
                return std::nullopt;
              },
              0x6e657374u);
        });
}

void vanishing_checks(SuiteBuilder& s) {
  struct Case {
    const char* fixture;
    const char* verdict;
  };
  for (auto cs : {Case{"fig7", "DEPENDENT_CLASSES"}, Case{"fig4b", "NOT_NESTED"}, Case{"sep_bp", "HAS_SEPARATING_TWIST"},
                  Case{"sep_only", "HAS_SEPARATING_TWIST"}}) {
    s.add(std::string("c4.vanishing.") + cs.fixture, "tau vanishes on cycles that are not truly nested", 4,
          {"vanishing"}, [cs](const Context& ctx) {
            auto c = fixture(ctx, cs.fixture);
            auto tau = tau_abelian(c);
            const int grade = static_cast<int>(c->cycle.size()) + 2;
            return all({same(cs.verdict, to_string(classify(c).verdict)),
                        same(MultiVector(Space::symplectic(c->genus), grade), tau),
                        same(std::to_string(grade), std::to_string(tau.grade()))});
          });
  }
}

void certificate_checks(SuiteBuilder& s) {
  s.add("c5.certificate.fig7", "ring cycle lies in the kernel of tau yet is nonzero in homology", 5,
        {"certificate", "taujstar"}, [](const Context& ctx) {
          auto cert = certify(fixture(ctx, "fig7"));
          auto expected = wedge(as_three_form(expr("a1^b1^a3", 3)), as_three_form(expr("a2^b2^a3", 3)));
          return all({same(MultiVector(Space::symplectic(3), 4), cert.tau), same(expected, cert.taujstar),
                      same("(a1^b1^a3)^(a2^b2^a3)", serialize(cert.taujstar)),
                      same("nonzero", cert.taujstar.is_zero() ? "zero" : "nonzero"),
                      same("IN_KER_TAU_NONZERO_HOMOLOGY", to_string(cert.conclusion))});
        });
}

void chain_checks(SuiteBuilder& s) {
  s.add("c6.chain.contract", "contraction chain of the genus-4 nested cycle: C_4 tau = a3^a4", 6, {"contraction"},
        [](const Context& ctx) { return same(expr("a3^a4", 4), contract(tau_abelian(fixture(ctx, "fig5")))); });
  s.add("c6.chain.contract_twice", "contraction chain: C_2 C_4 tau = 0", 6, {"contraction"}, [](const Context& ctx) {
    return same(MultiVector(Space::symplectic(4), 0), contract_power(tau_abelian(fixture(ctx, "fig5")), 2));
  });
  s.add("c6.chain.nu", "pair-swap image nu differs from tau by a primitive element a1^a2^a3^a4", 6, {"contraction"},
        [](const Context& ctx) {
          auto tau = tau_abelian(fixture(ctx, "fig5"));
          auto h = Space::symplectic(4);
          auto t = [&](const std::string& v) { return transvection(expr(v, 4)); };
          // Fixes every a, sends b1 to b1 + a2 and b2 to b2 + a1.
          auto m = t("a1+a2").inverse() * t("a1") * t("a2");
          auto nu = induced_action(m, tau);
          auto diff = nu - tau;
          return all({same(expr("b1+a2", 4), m.column(b_index(1))), same(expr("b2+a1", 4), m.column(b_index(2))),
                      same(expr("a1^(b1+a2)^a3^a4", 4), nu), same(expr("a1^a2^a3^a4", 4), diff),
                      same(MultiVector(h, 2), contract(diff))});
        });
}

void gysin_checks(SuiteBuilder& s) {
  s.add("c7.gysin_chain.value", "doubled class of the genus-4 nested pair, canonically sorted", 7,
        {"gysin", "contraction"}, [](const Context& ctx) {
          auto c = fixture(ctx, "fig6");
          auto v = gysin_tau(c);
          return all({same(expr("2*a1^b1^a4^b4^a2^a3", 4), v), same("2*a1^b1^a2^a3^a4^b4", serialize(v))});
        });
  s.add("c7.gysin_chain.contractions", "C_6 then C_4 of the doubled class gives 4*a2^a3, killed by C_2", 7,
        {"gysin", "contraction"}, [](const Context& ctx) {
          auto v = gysin_tau(fixture(ctx, "fig6"));
          auto twice = contract_power(v, 2);
          return all({same(expr("4*a2^a3", 4), twice), same(MultiVector(Space::symplectic(4), 0), contract(twice))});
        });
  s.add("c8.gysin_parity.odd", "doubled classes of odd cycles vanish (k = 1 and k = 3)", 8, {"gysin"},
        [](const Context& ctx) {
          auto one = gysin_tau(fixture(ctx, "bp_g2"));
          auto three = gysin_tau(fixture(ctx, "fig3a"));
          return all({same(MultiVector(Space::symplectic(2), 5), one), same(MultiVector(Space::symplectic(4), 7), three)});
        });
  s.add("c8.gysin_parity.empty", "doubled class of the bare surface is omega^omega", 8, {"gysin"},
        [](const Context& ctx) {
          auto v = gysin_tau(fixture(ctx, "surface_g2"));
          auto w = omega_form(2);
          return all({same(wedge(w, w), v), same(expr("2*a1^b1^a2^b2", 2), v)});
        });
  s.add("c8.gysin_parity.even_coefficients", "even nested doubled classes have even integer coefficients", 8,
        {"gysin"}, [](const Context& ctx) {
          std::vector<Outcome> parts;
          for (const char* f : {"fig5", "fig6", "fig9a", "fig9b"}) {
            auto v = gysin_tau(fixture(ctx, f));
            bool even = !v.is_zero();
            for (const auto& [m, c] : v.terms()) even = even && is_integer(c) && c.get_num() % 2 == 0;
            parts.push_back(same(std::string(f) + " even", std::string(f) + (even ? " even" : " odd")));
          }
          return all(parts);
        });
  s.add("c9.gysin_distinguishes.fig9", "equal tau but different doubled classes for the two genus-5 cycles", 9,
        {"gysin", "certificate"}, [](const Context& ctx) {
          auto x = certify(fixture(ctx, "fig9a"));
          auto y = certify(fixture(ctx, "fig9b"));
          auto cmp = compare(x, y);
          return all({same("EQUAL_TAU\nDIFFER_GYSIN\n", report(cmp)),
                      same(expr("2*a1^b1^a5^b5^a3^a4", 5), x.gysin.value_or(MultiVector(Space::symplectic(5), 6))),
                      same(expr("2*a1^b1^a2^b2^a3^a4", 5), y.gysin.value_or(MultiVector(Space::symplectic(5), 6)))});
        });
}

void span_checks(SuiteBuilder& s) {
  struct Case {
    std::string id;
    int genus;
    std::string element;
    std::size_t dim;
    std::string targets;
  };
  std::vector<Case> cases{{"g3.a1b1a2", 3, "a1^b1^a2", 20, "V(l1) 6 + V(l3) 14"},
                          {"g4.a1b1a3a4", 4, "a1^b1^a3^a4", 69, "V(l2) 27 + V(l4) 42"}};
  // At genus 1 the grade exceeds the genus and there is no decomposition target.
  for (int g = 1; g <= 4; ++g)
    cases.push_back({"g" + std::to_string(g) + ".omega", g, omega_text(g), 1, g >= 2 ? "V(l0) 1" : ""});
  for (const auto& cs : cases) {
    s.add("c10.span." + cs.id, "Sp-span of " + cs.element + " at genus " + std::to_string(cs.genus), 10, {"span"},
          [cs](const Context& ctx) {
            auto r = span_with_targets(expr(cs.element, cs.genus), ctx.span_budget);
            std::string targets;
            for (const auto& t : r.targets)
              targets += (targets.empty() ? "" : " + ") + std::string("V(l") + std::to_string(t.weight) + ") " +
                         std::to_string(t.dimension);
            auto want = "dim " + std::to_string(cs.dim) + (cs.targets.empty() ? "" : " = " + cs.targets + " MATCH");
            auto got = "dim " + std::to_string(r.basis.dimension());
            if (!r.targets.empty()) got += " = " + targets + (r.matches() ? " MATCH" : " MISMATCH");
            if (r.escalated) got += " (extended generators)";
            return same(want, got);
          });
  }
}

void decomposition_checks(SuiteBuilder& s) {
  s.add("c11.decomposition.sum", "irreducible dimensions add up to C(2g,k) for k <= g <= 5", 11, {"decomposition"},
        [](const Context&) {
          std::vector<std::string> bad;
          for (int g = 1; g <= 5; ++g)
            for (int k = 0; k <= g; ++k) {
              std::uint64_t sum = 0;
              for (int r = k; r >= 0; r -= 2) sum += irrep_dimension(g, r);
              if (sum != binomial(2 * g, k)) bad.push_back("(" + std::to_string(g) + "," + std::to_string(k) + ")");
            }
          return same("all equal", bad.empty() ? "all equal" : "differs at " + bad.front());
        });
  s.add("c11.decomposition.nullity", "dim V(l_k) equals the exact nullity of C_k for k <= g <= 4", 11,
        {"decomposition", "contraction"}, [](const Context&) {
          std::string expected, actual;
          for (int g = 1; g <= 4; ++g)
            for (int k = 0; k <= g; ++k) {
              expected += std::to_string(irrep_dimension(g, k)) + " ";
              actual += std::to_string(contraction_nullity(g, k)) + " ";
            }
          return same(expected, actual);
        });
  s.add("c12.injectivity", "C_{g+1} has zero kernel for g = 2, 3, 4", 12, {"contraction"}, [](const Context&) {
    std::string actual;
    for (int g = 2; g <= 4; ++g) actual += std::to_string(contraction_nullity(g, g + 1)) + " ";
    return same("0 0 0 ", actual);
  });
}

void property_checks(SuiteBuilder& s) {
  s.add("c13.property.anticommutativity", "x^y = (-1)^(pq) y^x on random sparse elements, g <= 5", 13,
        {"property", "exterior"}, [](const Context&) {
          return property(
              300,
              [](Rng& rng) -> std::optional<std::string> {
                int g = draw(rng, 1, 5);
                int p = draw(rng, 0, 2 * g), q = draw(rng, 0, 2 * g - p);
                auto x = random_element(rng, g, p), y = random_element(rng, g, q);
                auto rhs = wedge(y, x);
                if ((p * q) % 2) rhs = -rhs;
                if (!(wedge(x, y) == rhs)) return serialize(x) + " and " + serialize(y);
                return std::nullopt;
              },
              0x616e7469u);
        });
  s.add("c13.property.associativity", "(x^y)^z = x^(y^z) on random triples", 13, {"property", "exterior"},
        [](const Context&) {
          return property(
              300,
              [](Rng& rng) -> std::optional<std::string> {
                int g = draw(rng, 1, 5);
                int p = draw(rng, 0, 3), q = draw(rng, 0, 3), r = draw(rng, 0, 3);
                p = std::min(p, 2 * g), q = std::min(q, 2 * g), r = std::min(r, 2 * g);
                auto x = random_element(rng, g, p), y = random_element(rng, g, q), z = random_element(rng, g, r);
                if (!(wedge(wedge(x, y), z) == wedge(x, wedge(y, z))))
                  return serialize(x) + ", " + serialize(y) + ", " + serialize(z);
                return std::nullopt;
              },
              0x6173736fu);
        });
  s.add("c13.property.equivariance", "contraction commutes with random products of transvections, g <= 4", 13,
        {"property", "contraction"}, [](const Context&) {
          std::map<int, std::vector<SpMatrix>> gens;
          for (int g = 1; g <= 4; ++g) gens.emplace(g, standard_generators(g));
          return property(
              250,
              [&](Rng& rng) -> std::optional<std::string> {
                int g = draw(rng, 1, 4);
                const auto& gs = gens.at(g);
                SpMatrix m = SpMatrix::identity(g);
                for (int i = draw(rng, 1, 3); i > 0; --i) m = m * gs[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(gs.size()) - 1))];
                auto x = random_element(rng, g, draw(rng, 2, std::min(6, 2 * g)));
                if (!(contract(induced_action(m, x)) == induced_action(m, contract(x)))) return serialize(x);
                return std::nullopt;
              },
              0x65717569u);
        });
  s.add("c13.property.kahler", "C(omega^x) - omega^C(x) = (g-k) x on every basis monomial, g <= 4", 13,
        {"property", "contraction"}, [](const Context&) {
          std::size_t cases = 0;
          for (int g = 1; g <= 4; ++g) {
            auto h = Space::symplectic(g);
            for (int k = 0; k <= 2 * g; ++k) {
              std::optional<Scalar> lambda;
              for (const auto& m : all_monomials(2 * g, k)) {
                ++cases;
                auto x = MultiVector::monomial(h, m);
                auto lx = contract(lefschetz(x));
                auto d = k >= 2 ? lx - lefschetz(contract(x)) : lx;
                Scalar l = d.coefficient(m);
                if (!(d == l * x) || (lambda && *lambda != l))
                  return Outcome{false, "constant per (g,k)", "no constant at " + serialize(x)};
                lambda = l;
              }
              if (lambda && *lambda != g - k)
                return Outcome{false, std::to_string(g - k), "constant " + to_string(*lambda) + " at (g,k) = (" +
                                                                 std::to_string(g) + "," + std::to_string(k) + ")"};
            }
          }
          auto msg = "g-k on " + std::to_string(cases) + " monomials";
          return Outcome{true, msg, msg};
        });
  s.add("c13.property.expr_roundtrip", "serialize and parse are mutually inverse on random elements", 13,
        {"property", "exterior"}, [](const Context&) {
          return property(
              300,
              [](Rng& rng) -> std::optional<std::string> {
                int g = draw(rng, 1, 5);
                auto x = random_element(rng, g, draw(rng, 0, 2 * g));
                auto text = serialize(x);
                auto back = parse_expr(text, g);
                // "0" does not record a grade, so zero only round-trips as zero.
                bool same_value = x.is_zero() ? back.is_zero() : back == x;
                if (!same_value || serialize(back) != text) return text;
                return std::nullopt;
              },
              0x72747269u);
        });
  s.add("c13.property.config_roundtrip", "random valid configurations survive serialize then parse", 13,
        {"property", "surface"}, [](const Context&) {
          return property(
              200,
              [](Rng& rng) -> std::optional<std::string> {
                auto rc = random_config(rng, draw(rng, 0, 1) == 1);
                auto text = serialize_config(rc.config);
                auto back = parse_config(text);
                auto v = validate(back);
                if (!v.empty()) return v.front();
                if (serialize_config(back) != text) return text;
                return std::nullopt;
              },
              0x63666774u);
        });
  s.add("c13.property.classify_relabel", "classification ignores id names, declaration order and cycle order", 13,
        {"property", "surface"}, [](const Context&) {
          return property(
              200,
              [](Rng& rng) -> std::optional<std::string> {
                auto rc = random_config(rng, draw(rng, 0, 2) > 0);
                std::vector<std::pair<std::string, std::string>> rename;
                auto other = relabel(rc.config, rng, &rename);
                std::map<std::string, std::string> names(rename.begin(), rename.end());
                auto a = ValidConfiguration::from(rc.config);
                auto b = ValidConfiguration::from(other);
                auto ka = classify(a), kb = classify(b);
                auto expected = rc.nested ? Classification::Verdict::TrulyNested : Classification::Verdict::NotNested;
                if (ka.verdict != expected) return "verdict " + describe(a, ka);
                if (kb.verdict != ka.verdict) return "relabeled verdict " + describe(b, kb);
                for (std::size_t i = 0; i < ka.order.size(); ++i)
                  if (names.at(a->bounding_pairs[ka.order[i]].id) != b->bounding_pairs[kb.order[i]].id)
                    return "order " + describe(a, ka) + " vs " + describe(b, kb);
                return std::nullopt;
              },
              0x636c6173u);
        });
}

void golden_checks(SuiteBuilder& s, const Context& ctx) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(ctx.golden_dir, ec))
    if (e.path().extension() == ".txt") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::vector<std::string> tags{"golden"};
    std::string command = "?";
    try {
      command = read_golden(path).command;
      tags.push_back(command);
    } catch (const std::exception&) {
    }
    s.add("golden." + path.stem().string(), "golden " + command + " output", 0, tags, [path](const Context& c) {
      auto g = read_golden(path);
      return same(g.body, render(c, g));
    });
  }
}

}  // namespace

std::vector<Check> build_suite(const Context& ctx) {
  SuiteBuilder s;
  tau0_checks(s);
  johnson_checks(s);
  nested_checks(s);
  vanishing_checks(s);
  certificate_checks(s);
  chain_checks(s);
  gysin_checks(s);
  span_checks(s);
  decomposition_checks(s);
  property_checks(s);
  golden_checks(s, ctx);
  return s.take();
}

bool matches(const Check& check, std::string_view filter) {
  if (filter.empty()) return true;
  for (const auto& t : check.tags)
    if (t == filter) return true;
  return check.id.find(filter) != std::string::npos;
}

std::vector<Entry> run(const std::vector<Check>& checks, const Context& ctx) {
  std::vector<Entry> out;
  for (const auto& check : checks) {
    Entry e{check.id, check.ref, check.criterion, false, {}, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      auto o = check.run(ctx);
      e.pass = o.pass;
      e.expected = std::move(o.expected);
      e.actual = std::move(o.actual);
    } catch (const std::exception& ex) {
      e.pass = false;
      e.actual = std::string("error: ") + ex.what();
    }
    e.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace torelli::verify
