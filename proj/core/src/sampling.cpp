#include "schwarz/sampling.hpp"

#include <cmath>
#include <numbers>

#include "schwarz/error.hpp"

namespace schwarz {

double radical_inverse(std::uint64_t index, unsigned base) {
  double inv = 1.0 / base;
  double scale = inv;
  double result = 0.0;
  while (index > 0) {
    result += static_cast<double>(index % base) * scale;
    index /= base;
    scale *= inv;
  }
  return result;
}

std::vector<Complex> disk_samples(std::size_t count, double max_radius) {
  std::vector<Complex> pts;
  pts.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    const double u = radical_inverse(i, 2);
    const double v = radical_inverse(i, 3);
    const double r = max_radius * (1.0 - (1.0 - u) * (1.0 - u));
    pts.push_back(std::polar(r, 2.0 * std::numbers::pi * v));
  }
  return pts;
}

std::vector<double> clustered_radii(int count, double r_max) {
  if (count < 2) throw InvalidArgument("clustered_radii: need at least two radii");
  std::vector<double> r(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    r[static_cast<std::size_t>(i)] =
        r_max * std::sin(0.5 * std::numbers::pi * static_cast<double>(i) / (count - 1));
  }
  r.back() = r_max;
  return r;
}

}  // namespace schwarz
