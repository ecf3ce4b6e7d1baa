#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schwarz/json_util.hpp"

namespace schwarz {

std::string tool_version();

struct RunConfig {
  std::string command;
  /// Gallery name or JSON descriptor text; empty selects the default targets.
  std::string function_spec;
  bool spec_is_json = false;
  double c = 2.0;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  int grid_radial = 256;
  int grid_angular = 256;
  std::string output_path;
  /// "json" or "csv"; empty picks the command default.
  std::string format;
  std::string which;
  double theta = 0.0;
  int random = 0;
  std::string theorem_id = "all";
  unsigned workers = 0;
  bool timing = false;
};

/// Reproducible part of the configuration (workers and timing are omitted:
/// they never change the numbers).
Json to_json(const RunConfig& config);

struct ReportEntry {
  Json body;
  bool passed = true;
};

struct VerificationReport {
  std::string tool_version;
  RunConfig config;
  std::vector<ReportEntry> results;
  long long wall_time_ms = 0;

  bool overall_pass() const;
};

Json to_json(const VerificationReport& report);

/// Copy of j with every floating-point number rounded to 12 significant
/// digits and non-finite numbers replaced by null. Subtrees under the keys
/// "descriptor" and "function_spec" are kept verbatim.
Json round_numbers(const Json& j);

/// Pretty-printed JSON with rounded numbers and a trailing newline.
std::string format_json(const Json& j);

/// %.12g, with "nan"/"inf"/"-inf" spelled out; "" for an absent value.
std::string format_number(double x);

}  // namespace schwarz
