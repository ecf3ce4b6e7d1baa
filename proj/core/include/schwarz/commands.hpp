#pragma once

#include <string>

#include "schwarz/report.hpp"

namespace schwarz {

/// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

struct CommandOutput {
  std::string text;
  int exit_code = kExitPass;
};

VerificationReport cmd_norm(const RunConfig& config);
VerificationReport cmd_classify(const RunConfig& config);
/// config.theorem_id selects one verifier or "all".
VerificationReport cmd_verify(const RunConfig& config);
/// cmd_verify("all") restricted to seeded random targets.
VerificationReport cmd_random_suite(const RunConfig& config);
/// Rows r = k / grid_radial, k = 0 .. grid_radial - 1.
std::string cmd_growth(const RunConfig& config);
std::string cmd_profile(const RunConfig& config);

/// Dispatches on config.command and renders in config.format. Library errors
/// propagate; the CLI maps them to exit codes.
CommandOutput run_command(const RunConfig& requested);

}  // namespace schwarz
