#include "torelli/surface.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "torelli/error.hpp"
#include "torelli/symplectic.hpp"

namespace torelli {

const std::string& Configuration::generator_id(const Generator& g) const {
  return g.kind == Generator::Kind::BoundingPair ? bounding_pairs.at(g.index).id : separating_twists.at(g.index).id;
}

std::optional<std::size_t> Configuration::find_bounding_pair(std::string_view id) const {
  for (std::size_t i = 0; i < bounding_pairs.size(); ++i)
    if (bounding_pairs[i].id == id) return i;
  return std::nullopt;
}

int Configuration::class_of(const BoundingPair& bp) const {
  const auto& c = curves.at(bp.curves[0]);
  if (c.separating()) throw ContractViolation("bounding pair " + bp.id + " uses a separating curve");
  return *c.class_index;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  std::string text;
  int column;
};

enum class IdKind { Region, Curve, BoundingPair, SeparatingTwist };

const char* kind_name(IdKind k) {
  switch (k) {
    case IdKind::Region: return "region";
    case IdKind::Curve: return "curve";
    case IdKind::BoundingPair: return "bounding pair";
    case IdKind::SeparatingTwist: return "separating twist";
  }
  return "?";
}

struct Reference {
  std::string id;
  int line;
  int column;
  std::vector<IdKind> accepted;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

class ConfigParser {
 public:
  Configuration run(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    bool any_statement = false;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      line_ = line_no;
      auto tokens = tokenize(text.substr(pos, end - pos));
      if (!tokens.empty()) {
        statement(tokens);
        any_statement = true;
      }
      pos = end + 1;
    }
    if (!any_statement) throw ParseError(ParseError::Kind::Syntax, 1, 1, "empty configuration");
    if (!genus_line_) throw ParseError(ParseError::Kind::Syntax, 1, 1, "missing 'genus' statement");
    resolve();
    return std::move(c_);
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(ParseError::Kind::Syntax, line_, t.column, msg);
  }
  [[noreturn]] void fail_end(const std::vector<Token>& ts, const std::string& msg) const {
    const auto& last = ts.back();
    throw ParseError(ParseError::Kind::Syntax, line_, last.column + static_cast<int>(last.text.size()), msg);
  }

  int integer(const Token& t) const {
    int value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (t.text.empty() || !std::isdigit(static_cast<unsigned char>(t.text[0])) || ec != std::errc() || ptr != last)
      fail(t, "expected a non-negative integer, found '" + t.text + "'");
    return value;
  }

  void keyword(const std::vector<Token>& ts, std::size_t i, const char* word) const {
    if (i >= ts.size()) fail_end(ts, std::string("expected '") + word + "'");
    if (ts[i].text != word) fail(ts[i], std::string("expected '") + word + "', found '" + ts[i].text + "'");
  }

  const Token& at(const std::vector<Token>& ts, std::size_t i, const char* what) const {
    if (i >= ts.size()) fail_end(ts, std::string("expected ") + what);
    return ts[i];
  }

  void exact_length(const std::vector<Token>& ts, std::size_t n) const {
    if (ts.size() > n) fail(ts[n], "unexpected token '" + ts[n].text + "'");
    if (ts.size() < n) fail_end(ts, "statement is incomplete");
  }

  void declare(const Token& t, IdKind kind, std::size_t index) {
    auto [it, inserted] = ids_.try_emplace(t.text, Declared{kind, index, line_});
    if (!inserted) {
      throw ParseError(ParseError::Kind::DuplicateId, line_, t.column,
                       "id '" + t.text + "' already declared on line " + std::to_string(it->second.line));
    }
  }

  std::size_t refer(const Token& t, std::vector<IdKind> accepted) {
    refs_.push_back({t.text, line_, t.column, std::move(accepted)});
    return refs_.size() - 1;
  }

  void statement(const std::vector<Token>& ts) {
    const auto& head = ts[0].text;
    if (head == "genus") {
      if (genus_line_) fail(ts[0], "'genus' given twice");
      exact_length(ts, 2);
      c_.genus = integer(ts[1]);
      genus_line_ = line_;
    } else if (head == "basepoint") {
      if (basepoint_ref_) fail(ts[0], "'basepoint' given twice");
      exact_length(ts, 2);
      basepoint_ref_ = refer(ts[1], {IdKind::Region});
    } else if (head == "region") {
      const auto& id = at(ts, 1, "region id");
      keyword(ts, 2, "genus");
      Region r{id.text, integer(at(ts, 3, "region genus")), {}};
      keyword(ts, 4, "pairs");
      for (std::size_t i = 5; i < ts.size(); ++i) r.pairs.push_back(integer(ts[i]));
      declare(id, IdKind::Region, c_.regions.size());
      c_.regions.push_back(std::move(r));
    } else if (head == "curve" || head == "sepcurve") {
      const bool sep = head == "sepcurve";
      const auto& id = at(ts, 1, "curve id");
      Curve curve{id.text, std::nullopt, {0, 0}};
      std::size_t i = 2;
      if (!sep) {
        keyword(ts, 2, "class");
        const auto& cls = at(ts, 3, "class");
        if (cls.text.size() < 2 || cls.text[0] != 'a')
          fail(cls, "expected a class of the form aINT, found '" + cls.text + "'");
        curve.class_index = integer(Token{cls.text.substr(1), cls.column + 1});
        i = 4;
      }
      keyword(ts, i, "regions");
      exact_length(ts, i + 3);
      PendingCurve pending{refer(ts[i + 1], {IdKind::Region}), refer(ts[i + 2], {IdKind::Region})};
      declare(id, IdKind::Curve, c_.curves.size());
      c_.curves.push_back(std::move(curve));
      curve_refs_.push_back(pending);
    } else if (head == "bp") {
      const auto& id = at(ts, 1, "bounding pair id");
      keyword(ts, 2, "curves");
      exact_length(ts, 5);
      bp_refs_.push_back({refer(ts[3], {IdKind::Curve}), refer(ts[4], {IdKind::Curve})});
      declare(id, IdKind::BoundingPair, c_.bounding_pairs.size());
      c_.bounding_pairs.push_back({id.text, {0, 0}});
    } else if (head == "sep") {
      const auto& id = at(ts, 1, "separating twist id");
      keyword(ts, 2, "curve");
      exact_length(ts, 4);
      sep_refs_.push_back(refer(ts[3], {IdKind::Curve}));
      declare(id, IdKind::SeparatingTwist, c_.separating_twists.size());
      c_.separating_twists.push_back({id.text, 0});
    } else if (head == "cycle") {
      if (cycle_seen_) fail(ts[0], "'cycle' given twice");
      cycle_seen_ = true;
      if (ts.size() < 2) fail_end(ts, "expected at least one generator id");
      for (std::size_t i = 1; i < ts.size(); ++i)
        cycle_refs_.push_back(refer(ts[i], {IdKind::BoundingPair, IdKind::SeparatingTwist}));
    } else {
      fail(ts[0], "unknown statement '" + head + "'");
    }
  }

  std::pair<IdKind, std::size_t> lookup(std::size_t ref_index) const {
    const auto& ref = refs_[ref_index];
    auto it = ids_.find(ref.id);
    if (it == ids_.end())
      throw ParseError(ParseError::Kind::DanglingReference, ref.line, ref.column, "undeclared id '" + ref.id + "'");
    if (std::find(ref.accepted.begin(), ref.accepted.end(), it->second.kind) == ref.accepted.end()) {
      throw ParseError(ParseError::Kind::DanglingReference, ref.line, ref.column,
                       "'" + ref.id + "' is a " + kind_name(it->second.kind) + ", expected a " +
                           kind_name(ref.accepted.front()));
    }
    return {it->second.kind, it->second.index};
  }

  void resolve() {
    if (basepoint_ref_) c_.basepoint = lookup(*basepoint_ref_).second;
    for (std::size_t i = 0; i < c_.curves.size(); ++i) {
      c_.curves[i].ends[0] = lookup(curve_refs_[i].ends[0]).second;
      c_.curves[i].ends[1] = lookup(curve_refs_[i].ends[1]).second;
    }
    for (std::size_t i = 0; i < c_.bounding_pairs.size(); ++i) {
      c_.bounding_pairs[i].curves[0] = lookup(bp_refs_[i].ends[0]).second;
      c_.bounding_pairs[i].curves[1] = lookup(bp_refs_[i].ends[1]).second;
    }
    for (std::size_t i = 0; i < c_.separating_twists.size(); ++i)
      c_.separating_twists[i].curve = lookup(sep_refs_[i]).second;
    for (auto r : cycle_refs_) {
      auto [kind, index] = lookup(r);
      c_.cycle.push_back({kind == IdKind::BoundingPair ? Generator::Kind::BoundingPair
                                                       : Generator::Kind::SeparatingTwist,
                          index});
    }
  }

  struct Declared {
    IdKind kind;
    std::size_t index;
    int line;
  };
  struct PendingCurve {
    std::size_t ends[2];
  };

  Configuration c_;
  int line_ = 0;
  std::optional<int> genus_line_;
  std::optional<std::size_t> basepoint_ref_;
  bool cycle_seen_ = false;
  std::map<std::string, Declared> ids_;
  std::vector<Reference> refs_;
  std::vector<PendingCurve> curve_refs_;
  std::vector<PendingCurve> bp_refs_;
  std::vector<std::size_t> sep_refs_;
  std::vector<std::size_t> cycle_refs_;
};

}  // namespace

Configuration parse_config(std::string_view text) { return ConfigParser().run(text); }

std::string serialize_config(const Configuration& c) {
  std::ostringstream out;
  out << "genus " << c.genus << '\n';
  if (c.basepoint) out << "basepoint " << c.regions.at(*c.basepoint).id << '\n';
  for (const auto& r : c.regions) {
    out << "region " << r.id << " genus " << r.genus << " pairs";
    for (int p : r.pairs) out << ' ' << p;
    out << '\n';
  }
  for (const auto& cv : c.curves) {
    if (cv.separating())
      out << "sepcurve " << cv.id;
    else
      out << "curve " << cv.id << " class a" << *cv.class_index;
    out << " regions " << c.regions.at(cv.ends[0]).id << ' ' << c.regions.at(cv.ends[1]).id << '\n';
  }
  for (const auto& bp : c.bounding_pairs)
    out << "bp " << bp.id << " curves " << c.curves.at(bp.curves[0]).id << ' ' << c.curves.at(bp.curves[1]).id
        << '\n';
  for (const auto& s : c.separating_twists) out << "sep " << s.id << " curve " << c.curves.at(s.curve).id << '\n';
  if (!c.cycle.empty()) {
    out << "cycle";
    for (const auto& g : c.cycle) out << ' ' << c.generator_id(g);
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Graph helpers

namespace {

/// Component label per region after deleting the given curve-edges.
std::vector<int> components(const Configuration& c, const std::set<std::size_t>& removed, int* count = nullptr) {
  const std::size_t n = c.regions.size();
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t e = 0; e < c.curves.size(); ++e) {
    if (removed.count(e)) continue;
    adj[c.curves[e].ends[0]].push_back(c.curves[e].ends[1]);
    adj[c.curves[e].ends[1]].push_back(c.curves[e].ends[0]);
  }
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

std::vector<int> degrees(const Configuration& c) {
  std::vector<int> d(c.regions.size(), 0);
  for (const auto& cv : c.curves) {
    ++d[cv.ends[0]];
    ++d[cv.ends[1]];
  }
  return d;
}

bool is_bridge(const Configuration& c, std::size_t edge) {
  int count = 0;
  components(c, {edge}, &count);
  return count > 1;
}

/// Genus of the subsurface made of the flagged regions, bounded by `boundary`
/// curve incidences. Returns nullopt when the Euler count is not realizable.
std::optional<int> side_genus(const Configuration& c, const std::vector<bool>& side, const std::vector<int>& deg,
                              const std::set<std::size_t>& removed) {
  long chi = 0;
  for (std::size_t r = 0; r < c.regions.size(); ++r)
    if (side[r]) chi += 2 - 2L * c.regions[r].genus - deg[r];
  long boundary = 0;
  for (auto e : removed)
    for (auto end : c.curves[e].ends)
      if (side[end]) ++boundary;
  long twice = 2 - chi - boundary;
  if (twice < 0 || twice % 2 != 0) return std::nullopt;
  return static_cast<int>(twice / 2);
}

struct SideSplit {
  std::optional<Side> far;
  std::optional<Side> near;
  std::string problem;  ///< empty on success
};

// Handles of a side: its regions' pairs, plus one for each class carried by
// a non-separating curve lying inside the side, other than the cutting class.
SideSplit split_impl(const Configuration& c, std::size_t bp_index) {
  SideSplit out;
  const auto& bp = c.bounding_pairs.at(bp_index);
  if (!c.basepoint) {
    out.problem = "no basepoint region";
    return out;
  }
  const std::set<std::size_t> removed{bp.curves[0], bp.curves[1]};
  if (removed.size() != 2) {
    out.problem = "bounding pair " + bp.id + " names the same curve twice";
    return out;
  }
  for (auto e : removed)
    if (c.curves[e].separating()) {
      out.problem = "bounding pair " + bp.id + " uses separating curve " + c.curves[e].id;
      return out;
    }
  const int cut_class = *c.curves[bp.curves[0]].class_index;
  int count = 0;
  auto label = components(c, removed, &count);
  if (count != 2) {
    out.problem = "curves of bounding pair " + bp.id + (count < 2 ? " do not jointly separate the surface"
                                                                   : " cut the surface into more than two pieces");
    return out;
  }
  const auto deg = degrees(c);
  const int base_label = label[*c.basepoint];
  const auto h = Space::symplectic(std::max(c.genus, 1));
  auto build = [&](bool near) -> std::optional<Side> {
    std::vector<bool> member(c.regions.size());
    for (std::size_t r = 0; r < member.size(); ++r) member[r] = (label[r] == base_label) == near;
    auto genus = side_genus(c, member, deg, removed);
    if (!genus) {
      out.problem = "Euler count of a side of " + bp.id + " is not realizable";
      return std::nullopt;
    }
    std::set<int> handles;
    int handle_count = 0;
    for (std::size_t r = 0; r < member.size(); ++r)
      if (member[r]) {
        handles.insert(c.regions[r].pairs.begin(), c.regions[r].pairs.end());
        handle_count += static_cast<int>(c.regions[r].pairs.size());
      }
    std::set<int> inner_classes;
    for (std::size_t e = 0; e < c.curves.size(); ++e) {
      const auto& cv = c.curves[e];
      if (removed.count(e) || cv.separating() || *cv.class_index == cut_class) continue;
      if (member[cv.ends[0]] && member[cv.ends[1]]) inner_classes.insert(*cv.class_index);
    }
    handle_count += static_cast<int>(inner_classes.size());
    handles.insert(inner_classes.begin(), inner_classes.end());
    if (handle_count != *genus || static_cast<int>(handles.size()) != handle_count) {
      out.problem = std::string(near ? "near" : "far") + " side of " + bp.id + " has genus " +
                    std::to_string(*genus) + " but carries " + std::to_string(handle_count) + " symplectic pairs";
      return std::nullopt;
    }
    MultiVector form(h, 2);
    for (int m : handles) {
      if (m < 1 || m > c.genus) {
        out.problem = "pair index " + std::to_string(m) + " outside 1.." + std::to_string(c.genus);
        return std::nullopt;
      }
      form.add_term({a_index(m), b_index(m)}, 1);
    }
    return Side{member, *genus, form};
  };
  out.far = build(false);
  if (!out.far) return out;
  out.near = build(true);
  return out;
}

}  // namespace

std::pair<Side, Side> split(const Configuration& c, std::size_t bp_index) {
  auto s = split_impl(c, bp_index);
  if (!s.problem.empty()) throw ContractViolation(s.problem);
  return {*s.far, *s.near};
}

// ---------------------------------------------------------------------------
// Validation

std::vector<std::string> validate(const Configuration& c) {
  std::vector<std::string> v;
  auto report = [&](std::string msg) { v.push_back(std::move(msg)); };
  const int g = c.genus;
  if (g < 1) report("genus must be at least 1");
  if (!c.basepoint) report("basepoint: no basepoint region declared");
  if (c.regions.empty()) report("no regions declared");

  bool indices_ok = true;
  for (const auto& r : c.regions) {
    if (static_cast<int>(r.pairs.size()) != r.genus) {
      report("index partition: region " + r.id + " has genus " + std::to_string(r.genus) + " but carries " +
             std::to_string(r.pairs.size()) + " pair indices");
    }
    for (int p : r.pairs)
      if (p < 1 || p > g) {
        report("index range: region " + r.id + " pair index " + std::to_string(p) + " outside 1.." +
               std::to_string(g));
        indices_ok = false;
      }
  }
  std::set<int> classes;
  for (const auto& cv : c.curves) {
    if (cv.separating()) {
      if (cv.ends[0] == cv.ends[1]) report("separating curve " + cv.id + " has the same region on both sides");
      continue;
    }
    if (*cv.class_index < 1 || *cv.class_index > g) {
      report("index range: curve " + cv.id + " class a" + std::to_string(*cv.class_index) + " outside a1..a" +
             std::to_string(g));
      indices_ok = false;
    }
    classes.insert(*cv.class_index);
  }

  const auto deg = degrees(c);
  long euler = 0;
  for (std::size_t r = 0; r < c.regions.size(); ++r) euler += 2 - 2L * c.regions[r].genus - deg[r];
  if (euler != 2 - 2L * g)
    report("euler: regions sum to " + std::to_string(euler) + ", expected 2-2g = " + std::to_string(2 - 2L * g));

  std::map<int, std::string> owner;
  for (const auto& r : c.regions)
    for (int p : r.pairs) {
      auto [it, inserted] = owner.try_emplace(p, r.id);
      if (!inserted) {
        report("index partition: pair " + std::to_string(p) + " claimed by regions " + it->second + " and " + r.id);
        indices_ok = false;
      }
      if (classes.count(p)) {
        report("index partition: index " + std::to_string(p) + " is both a pair of region " + r.id +
               " and a curve class");
        indices_ok = false;
      }
    }
  for (int m = 1; m <= g; ++m)
    if (!owner.count(m) && !classes.count(m)) {
      report("index partition: index " + std::to_string(m) + " is neither a region pair nor a curve class");
      indices_ok = false;
    }

  int count = 0;
  components(c, {}, &count);
  const bool connected = count == 1;
  if (!c.regions.empty() && !connected)
    report("connectivity: region graph has " + std::to_string(count) + " components");

  for (std::size_t i = 0; i < c.bounding_pairs.size(); ++i) {
    const auto& bp = c.bounding_pairs[i];
    const auto& c0 = c.curves[bp.curves[0]];
    const auto& c1 = c.curves[bp.curves[1]];
    if (bp.curves[0] == bp.curves[1]) {
      report("bounding pair " + bp.id + " names curve " + c0.id + " twice");
      continue;
    }
    if (c0.separating() || c1.separating()) {
      report("bounding pair " + bp.id + " uses a separating curve");
      continue;
    }
    if (*c0.class_index != *c1.class_index) {
      report("bounding pair " + bp.id + ": curves " + c0.id + " and " + c1.id + " are not homologous");
      continue;
    }
    if (!connected || !c.basepoint) continue;
    bool bridge = false;
    for (auto e : bp.curves)
      if (is_bridge(c, e)) {
        report("bounding pair " + bp.id + ": curve " + c.curves[e].id + " separates the surface by itself");
        bridge = true;
      }
    if (bridge || !indices_ok) continue;
    auto s = split_impl(c, i);
    if (!s.problem.empty()) {
      report("bounding pair " + bp.id + ": " + s.problem);
      continue;
    }
    if (s.far->genus < 1) report("bounding pair " + bp.id + ": far side has genus 0, so its curves are homotopic");
  }

  for (std::size_t e = 0; e < c.curves.size(); ++e) {
    const auto& cv = c.curves[e];
    if (!cv.separating() || cv.ends[0] == cv.ends[1] || !connected) continue;
    if (!is_bridge(c, e)) {
      report("separating curve " + cv.id + " does not separate the region graph");
      continue;
    }
    auto label = components(c, {e});
    for (int side = 0; side < 2; ++side) {
      std::vector<bool> member(c.regions.size());
      for (std::size_t r = 0; r < member.size(); ++r) member[r] = label[r] == label[cv.ends[side]];
      auto genus = side_genus(c, member, deg, {e});
      if (!genus || *genus < 1)
        report("separating curve " + cv.id + ": side at region " + c.regions[cv.ends[side]].id +
               " has genus 0, so the curve is trivial");
    }
  }

  for (const auto& s : c.separating_twists)
    if (!c.curves[s.curve].separating())
      report("separating twist " + s.id + " uses non-separating curve " + c.curves[s.curve].id);

  std::set<std::pair<int, std::size_t>> seen;
  for (const auto& gen : c.cycle)
    if (!seen.insert({static_cast<int>(gen.kind), gen.index}).second)
      report("cycle lists generator " + c.generator_id(gen) + " more than once");
  return v;
}

ValidConfiguration ValidConfiguration::from(Configuration c) {
  auto violations = validate(c);
  if (!violations.empty()) throw InvalidConfiguration(std::move(violations));
  return ValidConfiguration(std::move(c));
}

// ---------------------------------------------------------------------------
// Classification

const char* to_string(Classification::Verdict v) {
  switch (v) {
    case Classification::Verdict::TrulyNested: return "TRULY_NESTED";
    case Classification::Verdict::DependentClasses: return "DEPENDENT_CLASSES";
    case Classification::Verdict::NotNested: return "NOT_NESTED";
    case Classification::Verdict::HasSeparatingTwist: return "HAS_SEPARATING_TWIST";
  }
  return "?";
}

Classification classify(const ValidConfiguration& vc) {
  const auto& c = vc.get();
  using V = Classification::Verdict;
  std::vector<std::size_t> bps;
  for (const auto& gen : c.cycle) {
    if (gen.kind == Generator::Kind::SeparatingTwist) return {V::HasSeparatingTwist, {}};
    bps.push_back(gen.index);
  }
  std::set<int> classes;
  for (auto b : bps)
    if (!classes.insert(c.class_of(c.bounding_pairs[b])).second) return {V::DependentClasses, {}};

  // separates[j][i]: cutting along bp j leaves every end of bp i's curves off
  // the basepoint side.
  const std::size_t k = bps.size();
  std::vector<std::vector<bool>> separates(k, std::vector<bool>(k, false));
  for (std::size_t j = 0; j < k; ++j) {
    auto [far, near] = split(c, bps[j]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == j) continue;
      bool all_far = true;
      for (auto e : c.bounding_pairs[bps[i]].curves)
        for (auto end : c.curves[e].ends)
          if (near.regions[end]) all_far = false;
      separates[j][i] = all_far;
    }
  }
  std::vector<std::size_t> rank(k);
  std::iota(rank.begin(), rank.end(), 0);
  auto score = [&](std::size_t j) { return std::count(separates[j].begin(), separates[j].end(), true); };
  std::stable_sort(rank.begin(), rank.end(), [&](auto x, auto y) { return score(x) < score(y); });
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (!separates[rank[b]][rank[a]]) return {V::NotNested, {}};
  Classification out{V::TrulyNested, {}};
  for (auto r : rank) out.order.push_back(bps[r]);
  return out;
}

std::string describe(const ValidConfiguration& vc, const Classification& k) {
  std::string s = to_string(k.verdict);
  if (k.verdict == Classification::Verdict::TrulyNested && !k.order.empty()) {
    s += ' ';
    for (std::size_t i = 0; i < k.order.size(); ++i) {
      if (i) s += '<';
      s += vc->bounding_pairs[k.order[i]].id;
    }
  }
  return s;
}

namespace {

void require_nested(const Classification& k) {
  if (k.verdict != Classification::Verdict::TrulyNested || k.order.empty())
    throw ContractViolation("symplectic forms of the end subsurfaces need a truly nested cycle");
}

}  // namespace

MultiVector far_symplectic_form(const ValidConfiguration& c, const Classification& k) {
  require_nested(k);
  return split(c.get(), k.order.front()).first.form;
}

MultiVector near_symplectic_form(const ValidConfiguration& c, const Classification& k) {
  require_nested(k);
  return split(c.get(), k.order.back()).second.form;
}

}  // namespace torelli
