#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "logcave/report.hpp"

namespace logcave {

/// Exit codes: 0 clean, 1 violations or a failed check, 2 tool error.
enum ExitCode { kExitClean = 0, kExitViolations = 1, kExitError = 2 };

struct CommandResult {
  Json document;
  int exit_code = kExitClean;
  std::optional<std::string> out_path;
  int jobs = 1;
  /// Set when the command asked to print help instead of running.
  std::optional<std::string> help;
};

/// Parses and runs one command (args[0] is the program name) without writing any file.
/// Throws std::invalid_argument for bad usage and lets computation errors propagate.
CommandResult execute(const std::vector<std::string>& args);

/// Full entry point: runs the command, attaches the manifest, writes the report to --out
/// (JSON and CSV) or prints the JSON, and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logcave
