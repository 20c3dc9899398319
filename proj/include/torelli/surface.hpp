#pragma once

// Curve configurations on the marked surface S_{g,*} in standard position.
//
// The surface is cut along every curve. Each piece is a region: a vertex of
// the region multigraph. Each curve is an edge joining the regions on its two
// sides. A non-separating curve carries the class a_m; a separating curve
// carries no class.
//
// Text form, one statement per line, '#' starts a comment:
//   genus INT
//   basepoint REGION_ID
//   region REGION_ID genus INT pairs INT*
//   curve CURVE_ID class aINT regions REGION_ID REGION_ID
//   sepcurve CURVE_ID regions REGION_ID REGION_ID
//   bp BP_ID curves CURVE_ID CURVE_ID
//   sep SEP_ID curve CURVE_ID
//   cycle GEN_ID+
// Ids share one namespace. References may point forward.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torelli/exterior.hpp"

namespace torelli {

struct Region {
  std::string id;
  int genus = 0;
  std::vector<int> pairs;
};

struct Curve {
  std::string id;
  std::optional<int> class_index;  ///< nullopt for a separating curve
  std::size_t ends[2] = {0, 0};    ///< region indices
  bool separating() const { return !class_index.has_value(); }
};

struct BoundingPair {
  std::string id;
  std::size_t curves[2] = {0, 0};  ///< curve indices
};

struct SeparatingTwist {
  std::string id;
  std::size_t curve = 0;
};

struct Generator {
  enum class Kind { BoundingPair, SeparatingTwist };
  Kind kind;
  std::size_t index;  ///< into bounding_pairs or separating_twists
  bool operator==(const Generator&) const = default;
};

struct Configuration {
  int genus = 0;
  std::optional<std::size_t> basepoint;  ///< region index
  std::vector<Region> regions;
  std::vector<Curve> curves;
  std::vector<BoundingPair> bounding_pairs;
  std::vector<SeparatingTwist> separating_twists;
  std::vector<Generator> cycle;

  const std::string& generator_id(const Generator& g) const;
  std::optional<std::size_t> find_bounding_pair(std::string_view id) const;
  int class_of(const BoundingPair& bp) const;
};

/// Throws ParseError: Syntax (including empty input), DanglingReference,
/// DuplicateId. Topology is not checked here.
Configuration parse_config(std::string_view text);

/// Canonical text; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const Configuration& c);

/// Every violated configuration invariant, in a stable order. Empty means ok.
std::vector<std::string> validate(const Configuration& c);

/// A configuration that passed validate. Only obtainable through from().
class ValidConfiguration {
 public:
  /// Throws InvalidConfiguration listing all violations.
  static ValidConfiguration from(Configuration c);
  const Configuration& get() const noexcept { return c_; }
  const Configuration* operator->() const noexcept { return &c_; }

 private:
  explicit ValidConfiguration(Configuration c) : c_(std::move(c)) {}
  Configuration c_;
};

/// One side of the surface cut along a bounding pair.
struct Side {
  std::vector<bool> regions;  ///< membership by region index
  int genus = 0;
  MultiVector form;           ///< symplectic form of the side, grade 2
};

/// Far side (away from the basepoint) and near side of a bounding pair.
/// Throws ContractViolation when the two curves do not jointly separate, or
/// when the side genus disagrees with its symplectic pairs.
std::pair<Side, Side> split(const Configuration& c, std::size_t bp_index);

struct Classification {
  enum class Verdict { TrulyNested, DependentClasses, NotNested, HasSeparatingTwist };
  Verdict verdict;
  /// Bounding-pair indices, farthest from the basepoint first. Only set for
  /// TrulyNested.
  std::vector<std::size_t> order;
};

const char* to_string(Classification::Verdict v);

Classification classify(const ValidConfiguration& c);

/// e.g. "TRULY_NESTED f1<f2" or "NOT_NESTED".
std::string describe(const ValidConfiguration& c, const Classification& k);

/// omega_0: form of the far side of the first pair in the nesting order.
/// ContractViolation unless the classification is TrulyNested.
MultiVector far_symplectic_form(const ValidConfiguration& c, const Classification& k);

/// omega^0: form of the basepoint side of the last pair in the nesting order.
MultiVector near_symplectic_form(const ValidConfiguration& c, const Classification& k);

}  // namespace torelli
