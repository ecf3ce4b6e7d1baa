#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "schwarz/jet.hpp"

namespace schwarz {

// Outermost radius used by membership and bound sampling.
inline constexpr double kSampleRadiusCap = 1.0 - 1e-4;

/// Radical inverse of `index` in `base` (van der Corput / Halton component).
double radical_inverse(std::uint64_t index, unsigned base);

/// Low-discrepancy points in the disk |z| <= max_radius from the (2,3) Halton
/// sequence. Radii follow r = max_radius * (1 - (1-u)^2), which puts more mass
/// near the rim where class violations live.
std::vector<Complex> disk_samples(std::size_t count, double max_radius = kSampleRadiusCap);

/// count radii on [0, r_max], r_i = r_max sin(pi i / (2 (count-1))): dense near r_max.
std::vector<double> clustered_radii(int count, double r_max);

/// Uniform doubles in [0,1) from a 64-bit engine output (53-bit mantissa).
inline double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace schwarz
