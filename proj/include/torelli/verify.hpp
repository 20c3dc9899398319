#pragma once

// Reproduction suite: every closed-form identity, vanishing statement and
// dimension count the toolkit claims, run at small genus with exact values.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "torelli/surface.hpp"

namespace torelli::verify {

struct Context {
  std::filesystem::path data_dir;    ///< holds the *.cfg fixtures
  std::filesystem::path golden_dir;  ///< holds the golden *.txt files
  std::chrono::milliseconds span_budget{600'000};
};

/// Shipped fixture and golden locations baked in at build time.
Context default_context();

struct Outcome {
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct Check {
  std::string id;
  std::string ref;                ///< what the check reproduces
  std::vector<std::string> tags;  ///< includes "c<N>" for acceptance criterion N
  int criterion = 0;              ///< 0 for golden-file checks
  std::function<Outcome(const Context&)> run;
};

struct Entry {
  std::string id;
  std::string ref;
  int criterion = 0;
  bool pass = false;
  std::string expected;
  std::string actual;
  double elapsed_ms = 0;
};

/// Criterion checks followed by one check per golden file in ctx.golden_dir.
std::vector<Check> build_suite(const Context& ctx);

/// Empty filter matches everything; otherwise a tag equal to the filter or
/// an id containing it.
bool matches(const Check& check, std::string_view filter);

/// Runs checks in order. An exception inside a check is a FAIL whose actual
/// value is the exception message.
std::vector<Entry> run(const std::vector<Check>& checks, const Context& ctx);

// ---------------------------------------------------------------------------
// Deterministic randomness shared with the unit tests.

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] by rejection; identical on every platform.
int draw(Rng& rng, int lo, int hi);

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(i) - 1))]);
}

/// Sparse homogeneous element: 1-4 terms with small rational coefficients.
MultiVector random_element(Rng& rng, int genus, int grade);

/// Random valid configuration: a rooted tree of regions whose edges are
/// bounding pairs, with optional handles hung off separating curves. Ids,
/// declaration order and cycle order are shuffled.
struct RandomConfig {
  Configuration config;
  bool nested = false;
  std::vector<std::string> order;  ///< expected nesting order when nested
  MultiVector far_form;            ///< expected omega_0 when nested
};

/// `nested` forces the cycle onto one root path. Genus stays <= max_genus.
RandomConfig random_config(Rng& rng, bool nested, int max_genus = 6);

/// Same configuration with ids renamed, declarations permuted and the cycle
/// reordered. `rename` maps old id to new id.
Configuration relabel(const Configuration& c, Rng& rng, std::vector<std::pair<std::string, std::string>>* rename);

}  // namespace torelli::verify
