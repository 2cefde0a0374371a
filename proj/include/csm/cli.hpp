#pragma once

// Command-line front end. Everything is reachable through run_cli so the
// tests can drive it without spawning processes.

#include <iosfwd>
#include <string>
#include <vector>

#include "csm/counting.hpp"
#include "csm/error.hpp"
#include "csm/rotation_words.hpp"

namespace csm {

enum class ExitCode : int { ok = 0, usage = 2, unsupported = 3, internal_mismatch = 4 };

ExitCode exit_code_for(Errc e) noexcept;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string word_to_json(const RotationWord& w);
RotationWord word_from_json(const std::string& text);

std::string table_to_csv(const DirichletTable& t);
std::string table_to_json(const DirichletTable& t);
/// "1 + 2/7^s + 2/13^s"
std::string table_to_series(const DirichletTable& t);

}  // namespace csm
