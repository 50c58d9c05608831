#pragma once

#include <string>
#include <vector>

#include "pstr/json_io.hpp"

namespace pstr {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct CommandResult {
  int exit_code = kExitOk;
  /// Machine-readable record; carries an "error" field iff exit_code != 0.
  Json payload;
  /// Human-readable rendering (help text for --help).
  std::string text;
  bool as_json = false;

  /// What the binary prints: the JSON dump with --json, the text otherwise.
  std::string render() const;
};

/// Runs one subcommand. `args` excludes the program name.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace pstr
