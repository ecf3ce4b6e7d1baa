#include "schwarz/schur.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "schwarz/error.hpp"
#include "schwarz/sampling.hpp"

namespace schwarz {

SchurFunction SchurFunction::constant(Complex value) {
  if (std::abs(value) > 1.0 + 1e-12) {
    throw InvalidArgument("SchurFunction::constant: modulus exceeds 1");
  }
  return {Kind::constant, {}, value};
}

SchurFunction SchurFunction::blaschke(std::vector<Complex> zeros, Complex rotation) {
  if (std::abs(std::abs(rotation) - 1.0) > 1e-12) {
    throw InvalidArgument("SchurFunction::blaschke: rotation must be unimodular");
  }
  for (const auto& a : zeros) {
    if (!(std::abs(a) < 1.0)) {
      throw InvalidArgument("SchurFunction::blaschke: zeros must lie in the open disk");
    }
  }
  return {Kind::blaschke, std::move(zeros), rotation};
}

SchurFunction SchurFunction::random_blaschke(std::uint64_t seed, int degree,
                                             bool vanish_at_origin) {
  if (degree < 0) throw InvalidArgument("random_blaschke: negative degree");
  std::mt19937_64 rng(seed);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const Complex rotation = std::polar(1.0, two_pi * unit_interval(rng()));
  std::vector<Complex> zeros;
  zeros.reserve(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k) {
    const double u = unit_interval(rng());
    const double v = unit_interval(rng());
    if (k == 0 && vanish_at_origin) {
      zeros.emplace_back(0.0, 0.0);
      continue;
    }
    zeros.push_back(std::polar(kRandomZeroCap * std::sqrt(u), two_pi * v));
  }
  return blaschke(std::move(zeros), rotation);
}

Complex SchurFunction::operator()(Complex z) const {
  if (kind_ == Kind::constant) return rotation_;
  Complex value = rotation_;
  for (const auto& a : zeros_) value *= (z - a) / (1.0 - std::conj(a) * z);
  return value;
}

double SchurFunction::defect(Complex z) const {
  if (kind_ == Kind::constant) return 1.0 - std::norm(rotation_);
  // 1 - prod x_k = sum_k (1 - x_k) prod_{j<k} x_j, and for one factor
  // 1 - |b_a(z)|^2 = (1 - |a|^2)(1 - |z|^2) / |1 - conj(a) z|^2.
  const double rz = std::abs(z);
  const double dz = (1.0 - rz) * (1.0 + rz);
  double prefix = 1.0;
  double sum = 0.0;
  for (const auto& a : zeros_) {
    const double ra = std::abs(a);
    const double d = (1.0 - ra) * (1.0 + ra) * dz / std::norm(1.0 - std::conj(a) * z);
    sum += d * prefix;
    prefix *= 1.0 - d;
  }
  return sum;
}

TaylorJet SchurFunction::jet_at(Complex z, int order) const {
  TaylorJet acc = TaylorJet::constant(z, rotation_, order);
  if (kind_ == Kind::constant) return acc;
  for (const auto& a : zeros_) {
    std::vector<Complex> num(static_cast<std::size_t>(order) + 1);
    std::vector<Complex> den(static_cast<std::size_t>(order) + 1);
    num[0] = z - a;
    den[0] = 1.0 - std::conj(a) * z;
    if (order >= 1) {
      num[1] = 1.0;
      den[1] = -std::conj(a);
    }
    acc = jet_mul(acc, jet_div(TaylorJet(z, std::move(num)), TaylorJet(z, std::move(den))));
  }
  return acc;
}

Json SchurFunction::to_json() const {
  if (kind_ == Kind::constant) {
    return Json{{"kind", "constant"}, {"value", complex_to_json(rotation_)}};
  }
  Json zs = Json::array();
  for (const auto& a : zeros_) zs.push_back(complex_to_json(a));
  return Json{{"kind", "blaschke"}, {"zeros", zs}, {"rotation", complex_to_json(rotation_)}};
}

SchurFunction SchurFunction::from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "constant") return constant(complex_from_json(j.at("value")));
  if (kind == "blaschke") {
    std::vector<Complex> zs;
    for (const auto& a : j.value("zeros", Json::array())) zs.push_back(complex_from_json(a));
    return blaschke(std::move(zs), complex_from_json(j.value("rotation", Json(1.0))));
  }
  throw InvalidArgument("unknown Schur function kind: " + kind);
}

}  // namespace schwarz
