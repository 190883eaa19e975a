#pragma once

#include <string>
#include <vector>

namespace klasika::cli {

enum class Status { Ok, Error };

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  Status status = Status::Ok;
  int exit_code = kExitOk;
  /// The complete `--json` object (always filled, one line, no newline).
  std::string payload_json;
  /// Rendered summary for text mode.
  std::string human_text;
  /// Whether --json was requested.
  bool json = false;

  /// What the tool prints on stdout.
  std::string stdout_text() const;
  /// What the tool prints on stderr (text-mode errors only).
  std::string stderr_text() const;
};

/// Runs one command. `args` excludes the program name. Never throws for bad
/// input: every failure becomes a Status::Error result.
CommandResult run(const std::vector<std::string>& args);

/// Usage summary.
std::string usage();

}  // namespace klasika::cli
