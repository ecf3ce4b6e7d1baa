#pragma once

#include <functional>

namespace schwarz {

struct QuadratureResult {
  double value;
  double error_estimate;
  int evaluations;
};

/// Adaptive Simpson with Richardson correction on [a, b]. The tolerance is
/// absolute and is halved at each bisection; recursion stops at max_depth.
QuadratureResult adaptive_simpson(const std::function<double(double)>& integrand, double a,
                                  double b, double tolerance = 1e-12, int max_depth = 30);

}  // namespace schwarz
