#include "torelli/commands.hpp"

#include <fstream>
#include <sstream>

#include "torelli/expression.hpp"

namespace torelli {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ValidConfiguration load_config(const std::filesystem::path& path) {
  return ValidConfiguration::from(parse_config(read_text_file(path)));
}

std::string render_eval(const ValidConfiguration& c) {
  if (c->cycle.empty()) return "EMPTY_CYCLE\n" + serialize(tau0(c->genus)) + "\n";
  return describe(c, classify(c)) + "\n" + serialize(tau_abelian(c)) + "\n";
}

std::string render_gysin(const ValidConfiguration& c) { return serialize(gysin_tau(c)) + "\n"; }

std::string render_taujstar(const ValidConfiguration& c) { return serialize(tauJ_star(c)) + "\n"; }

std::string render_certify(const ValidConfiguration& c) { return report(certify(c)); }

std::string render_certify(const ValidConfiguration& first, const ValidConfiguration& second) {
  auto x = certify(first);
  auto y = certify(second);
  return "[first]\n" + report(x) + "[second]\n" + report(y) + "[comparison]\n" + report(compare(x, y));
}

}  // namespace torelli
