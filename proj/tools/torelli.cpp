// torelli: command-line front end.
//
// Exit codes: 0 success, 1 verification failure (or span mismatch / time
// budget exceeded), 2 parse or usage error, 3 invalid configuration,
// 4 unsupported request or contract violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>

#include "torelli/commands.hpp"
#include "torelli/error.hpp"
#include "torelli/expression.hpp"
#include "torelli/representation.hpp"
#include "torelli/verify.hpp"

namespace {

using namespace torelli;

enum Exit { kOk = 0, kFail = 1, kParse = 2, kInvalid = 3, kUnsupported = 4 };

struct Options {
  int genus = 0;
  int grade = -1;
  std::string expression;
  std::vector<std::string> paths;
  std::string filter;
  double time_budget = 600;
  std::string output = "text";
  std::string data_dir;
  std::string golden_dir;
  bool timings = false;
};

std::chrono::milliseconds budget_of(const Options& o) {
  return std::chrono::milliseconds(static_cast<long long>(o.time_budget * 1000));
}

int cmd_expr(const Options& o) {
  std::cout << serialize(parse_expr(o.expression, o.genus)) << '\n';
  return kOk;
}

int cmd_span(const Options& o) {
  std::optional<MultiVector> x;
  if (std::filesystem::is_regular_file(o.expression)) {
    auto c = load_config(o.expression);
    if (o.genus != 0 && o.genus != c->genus) throw ContractViolation("--genus disagrees with the configuration");
    x = tau_abelian(c);
  } else {
    if (o.genus < 1) throw CLI::ValidationError("--genus", "required for an expression");
    x = parse_expr(o.expression, o.genus);
  }
  if (o.grade >= 0 && o.grade != x->grade())
    throw CLI::ValidationError("--grade", "element has grade " + std::to_string(x->grade()));

  SpanResult r = [&] {
    try {
      return span_with_targets(*x, budget_of(o));
    } catch (const TimeBudgetExceeded& e) {
      std::cout << "FAIL " << e.what() << '\n';
      std::exit(kFail);
    }
  }();
  if (r.escalated) std::cerr << "note: standard generators fell short of the target; used extended generators\n";
  std::cout << "dim " << r.basis.dimension();
  if (r.targets.empty()) {
    if (x->grade() > x->space().genus()) std::cout << " (no decomposition target for grade > genus)";
    std::cout << '\n';
    return kOk;
  }
  std::cout << " =";
  for (std::size_t i = 0; i < r.targets.size(); ++i)
    std::cout << (i ? " +" : "") << " V(l" << r.targets[i].weight << ") " << r.targets[i].dimension;
  std::cout << (r.matches() ? " MATCH" : " MISMATCH") << '\n';
  return r.matches() ? kOk : kFail;
}

int cmd_verify(const Options& o) {
  auto ctx = verify::default_context();
  if (!o.data_dir.empty()) {
    ctx.data_dir = o.data_dir;
    ctx.golden_dir = ctx.data_dir / "golden";
  }
  if (!o.golden_dir.empty()) ctx.golden_dir = o.golden_dir;
  ctx.span_budget = budget_of(o);

  std::vector<verify::Check> selected;
  for (auto& check : verify::build_suite(ctx))
    if (verify::matches(check, o.filter)) selected.push_back(std::move(check));
  if (selected.empty()) {
    std::cerr << "no checks match filter '" << o.filter << "'\n";
    return kParse;
  }

  std::size_t failed = 0;
  for (const auto& check : selected) {
    auto e = verify::run({check}, ctx).front();
    if (!e.pass) ++failed;
    if (o.output == "structured") {
      nlohmann::ordered_json j{{"check", e.id}, {"ref", e.ref}, {"status", e.pass ? "PASS" : "FAIL"},
                               {"expected", e.expected}, {"actual", e.actual}};
      if (o.timings) j["elapsed_ms"] = e.elapsed_ms;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << (e.pass ? "PASS " : "FAIL ") << e.id << "  " << e.ref;
      if (o.timings) std::cout << "  [" << static_cast<long long>(e.elapsed_ms) << " ms]";
      std::cout << '\n';
      if (!e.pass) std::cout << "  expected: " << e.expected << "\n  actual:   " << e.actual << '\n';
    }
    std::cout.flush();
  }
  if (o.output != "structured")
    std::cout << selected.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Johnson invariants of abelian cycles in the Torelli group"};
  app.require_subcommand(1);
  Options o;

  auto* expr = app.add_subcommand("expr", "evaluate an expression over H and print its canonical form");
  expr->add_option("--genus", o.genus, "genus g of H")->required()->check(CLI::PositiveNumber);
  expr->add_option("expression", o.expression, "expression text")->required();

  auto* eval = app.add_subcommand("eval", "classify a configuration and print tau of its cycle");
  auto* gysin = app.add_subcommand("gysin", "print tau of the doubled class");
  auto* taujstar = app.add_subcommand("taujstar", "print the wedge of Johnson values in ^k(^3 H)");
  for (auto* sub : {eval, gysin, taujstar}) sub->add_option("config", o.paths, "configuration file")->required()->expected(1);

  auto* cert = app.add_subcommand("certify", "certificate for one configuration, or a comparison of two");
  cert->add_option("config", o.paths, "configuration file(s)")->required()->expected(1, 2);

  auto* span = app.add_subcommand("span", "dimension of the Sp-span of an element or of a cycle's tau");
  span->add_option("element", o.expression, "expression or configuration file")->required();
  span->add_option("--genus", o.genus, "genus g of H")->check(CLI::PositiveNumber);
  span->add_option("--grade", o.grade, "expected grade of the element")->check(CLI::NonNegativeNumber);
  span->add_option("--time-budget", o.time_budget, "seconds before giving up")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "run the reproduction suite");
  ver->add_option("--filter", o.filter, "run only checks with this tag or id substring");
  ver->add_option("--output", o.output, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  ver->add_option("--time-budget", o.time_budget, "seconds allowed per span computation")->check(CLI::PositiveNumber);
  ver->add_option("--data-dir", o.data_dir, "directory holding the fixtures");
  ver->add_option("--golden-dir", o.golden_dir, "directory holding the golden files");
  ver->add_flag("--timings", o.timings, "report elapsed time per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (*expr) return cmd_expr(o);
    if (*eval) {
      std::cout << render_eval(load_config(o.paths[0]));
      return kOk;
    }
    if (*gysin) {
      std::cout << render_gysin(load_config(o.paths[0]));
      return kOk;
    }
    if (*taujstar) {
      std::cout << render_taujstar(load_config(o.paths[0]));
      return kOk;
    }
    if (*cert) {
      if (o.paths.size() == 2)
        std::cout << render_certify(load_config(o.paths[0]), load_config(o.paths[1]));
      else
        std::cout << render_certify(load_config(o.paths[0]));
      return kOk;
    }
    if (*span) return cmd_span(o);
    if (*ver) return cmd_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidConfiguration& e) {
    std::cerr << "invalid configuration:\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << '\n';
    return kInvalid;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kOk;
}
