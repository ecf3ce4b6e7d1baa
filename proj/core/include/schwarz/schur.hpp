#pragma once

#include <cstdint>
#include <vector>

#include "schwarz/jet.hpp"
#include "schwarz/json_util.hpp"

namespace schwarz {

// Modulus cap for randomly drawn Blaschke zeros.
inline constexpr double kRandomZeroCap = 0.95;

/// Analytic self-map of the unit disk: a constant of modulus <= 1 or a finite
/// Blaschke product rotation * prod (z - a_k) / (1 - conj(a_k) z).
class SchurFunction {
 public:
  enum class Kind { constant, blaschke };

  static SchurFunction constant(Complex value);
  static SchurFunction blaschke(std::vector<Complex> zeros, Complex rotation = 1.0);
  /// Seed-deterministic product of `degree` factors with zeros uniform in
  /// |z| <= kRandomZeroCap and a uniform unimodular rotation. With
  /// vanish_at_origin the first zero is placed at 0.
  static SchurFunction random_blaschke(std::uint64_t seed, int degree,
                                       bool vanish_at_origin = false);

  Kind kind() const noexcept { return kind_; }
  const std::vector<Complex>& zeros() const noexcept { return zeros_; }
  /// Rotation factor for products, the value itself for constants.
  Complex rotation() const noexcept { return rotation_; }
  int degree() const noexcept { return static_cast<int>(zeros_.size()); }

  /// Defined on the closed disk (|z| <= 1).
  Complex operator()(Complex z) const;
  TaylorJet jet_at(Complex z, int order) const;
  /// 1 - |s(z)|^2 without the cancellation of the naive formula near |z| = 1.
  double defect(Complex z) const;

  Json to_json() const;
  static SchurFunction from_json(const Json& j);

 private:
  SchurFunction(Kind kind, std::vector<Complex> zeros, Complex rotation)
      : kind_(kind), zeros_(std::move(zeros)), rotation_(rotation) {}

  Kind kind_;
  std::vector<Complex> zeros_;
  Complex rotation_;
};

}  // namespace schwarz
