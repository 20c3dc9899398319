#pragma once

// Text renderings shared by the command-line tool and the golden checks.

#include <filesystem>
#include <string>

#include "torelli/certificate.hpp"

namespace torelli {

/// Reads and validates a configuration file. Throws std::runtime_error if the
/// file cannot be read, ParseError or InvalidConfiguration otherwise.
ValidConfiguration load_config(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Verdict line, then the tau value.
std::string render_eval(const ValidConfiguration& c);
std::string render_gysin(const ValidConfiguration& c);
std::string render_taujstar(const ValidConfiguration& c);
std::string render_certify(const ValidConfiguration& c);
/// Both certificates, then the comparison lines.
std::string render_certify(const ValidConfiguration& first, const ValidConfiguration& second);

}  // namespace torelli
