#include "schwarz/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifndef SCHWARZ_VERSION
#define SCHWARZ_VERSION "0.0.0"
#endif

namespace schwarz {

std::string tool_version() { return std::string("schwarz ") + SCHWARZ_VERSION; }

Json to_json(const RunConfig& c) {
  Json spec = nullptr;
  if (!c.function_spec.empty()) {
    spec = c.spec_is_json ? Json::parse(c.function_spec) : Json(c.function_spec);
  }
  return Json{{"command", c.command},
              {"function_spec", spec},
              {"c", c.c},
              {"seed", c.seed},
              {"samples", c.samples},
              {"grid", {{"radial", c.grid_radial}, {"angular", c.grid_angular}}},
              {"output_path", c.output_path},
              {"format", c.format},
              {"which", c.which},
              {"theta", c.theta},
              {"random", c.random},
              {"theorem_id", c.theorem_id}};
}

bool VerificationReport::overall_pass() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

Json to_json(const VerificationReport& report) {
  Json results = Json::array();
  for (const auto& r : report.results) results.push_back(r.body);
  return Json{{"tool_version", report.tool_version},
              {"config_echo", to_json(report.config)},
              {"results", std::move(results)},
              {"wall_time_ms", report.wall_time_ms},
              {"overall_pass", report.overall_pass()}};
}

Json round_numbers(const Json& j) {
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& e : j) out.push_back(round_numbers(e));
    return out;
  }
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
      const bool verbatim = it.key() == "descriptor" || it.key() == "function_spec";
      out[it.key()] = verbatim ? it.value() : round_numbers(it.value());
    }
    return out;
  }
  return j;
}

std::string format_json(const Json& j) { return round_numbers(j).dump(2) + "\n"; }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace schwarz
