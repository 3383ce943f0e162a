#pragma once

#include <string>
#include <vector>

namespace orbi {

inline constexpr const char* kVersion = "orbi 1.0.0";

/// Exit codes of the command-line interface.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitInternalError = 3,
  kExitObstructed = 10,
};

struct CommandOutput {
  int exit_code = kExitOk;
  std::string out;  // report (written to --out instead when given)
  std::string err;
};

/// Runs one command line; args[0] is the program name. Never throws.
CommandOutput run_command(const std::vector<std::string>& args);

}  // namespace orbi
