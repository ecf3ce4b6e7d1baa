#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "schwarz/function.hpp"
#include "schwarz/json_util.hpp"

namespace schwarz {

enum class NormKind { pre_schwarzian, schwarzian };

std::string_view to_string(NormKind kind);
/// Accepts "pre_schwarzian" (or "pre") and "schwarzian".
NormKind parse_norm_kind(std::string_view name);

struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;
};

struct SearchOptions {
  int radial = 256;
  int angular = 256;
  int starts = 8;
  int max_iterations = 200;
  double r_max = 1.0 - 1e-6;
  unsigned workers = 0;
};

struct NormEstimate {
  double value = 0.0;
  PolarPoint argmax;
  bool boundary_attained = false;
  int radial = 0;
  int angular = 0;
  int refinement_iterations = 0;
  double certified_lower = 0.0;
  std::optional<double> extrapolated;
};

Json to_json(const NormEstimate& e);

/// (1-|z|^2)|P_f(z)| or (1-|z|^2)^2 |S_f(z)|.
double weighted_modulus(const AnalyticFunction& f, Complex z, NormKind kind);

struct ProfilePoint {
  double r;
  std::optional<double> value;  // empty where f' vanishes
};

std::vector<ProfilePoint> radial_profile(const AnalyticFunction& f, double theta, int samples,
                                         NormKind kind, double r_max = 1.0 - 1e-6);

/// Sup of the weighted modulus over the disk: polar grid, Nelder-Mead from the
/// best cells, then a four-node Neville extrapolation toward r = 1 along the
/// best ray. Output does not depend on options.workers.
NormEstimate hyperbolic_norm(const AnalyticFunction& f, NormKind kind,
                             const SearchOptions& options = {});

}  // namespace schwarz
