#pragma once

#include <ostream>
#include <string>

namespace branchlaw::cli {

// Exit codes beyond the ErrorKind values (3..8).
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 9;

struct RunConfig {
  std::string command;
  std::string group;
  std::string table;
  int check_degree = 5;
  bool oracles = true;
  bool key_relation = true;
  std::string specialize;
  std::string format = "text";
  std::string out;
  int threads = 0;
};

/// Parses argv and runs one subcommand. Documents go to `out` (or --out),
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace branchlaw::cli
