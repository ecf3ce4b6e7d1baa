#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schwarz/jet.hpp"
#include "schwarz/json_util.hpp"
#include "schwarz/schur.hpp"

namespace schwarz {

/// Throws InvalidArgument unless 0 < c <= 3.
void validate_class_parameter(double c);

/// Selects F(c), or F0(c) (the members with f''(0) = 0).
struct ClassSpec {
  explicit ClassSpec(double c, bool zero_second_derivative = false);

  double c;
  bool zero_second_derivative;
};

/// f defined through 1 + z f''/f' = 1 + multiplier * w / (1 - w) with
/// w(z) = z^power * schur(z), f(0) = 0, f'(0) = 1. For a Schur function and
/// power >= 1 this is a member of F(multiplier); power >= 2 forces f''(0) = 0.
struct Subordination {
  double multiplier;
  int power;
  SchurFunction schur;

  Complex omega(Complex z) const;
  /// w(z) / z.
  Complex phi(Complex z) const;
};

namespace detail {
class FunctionImpl;
}

/// P_f and S_f at one point.
struct PointDerivatives {
  Complex pre_schwarzian;
  Complex schwarzian;
};

/// Immutable analytic map on the open unit disk, queryable for Taylor jets at
/// any interior point. Copies share the underlying representation.
class AnalyticFunction {
 public:
  explicit AnalyticFunction(std::shared_ptr<const detail::FunctionImpl> impl);

  /// Jet of f at z to the given order. Throws DomainError for |z| >= 1.
  TaylorJet jet_at(Complex z, int order) const;
  /// Jet of P_f = f''/f' at z. Throws DivisionBySingular where f' vanishes.
  TaylorJet preschwarzian_jet(Complex z, int order) const;
  Complex operator()(Complex z) const;
  /// Jets at r e^{i theta} for ascending radii; path-continued members reuse
  /// one continuation pass for the whole ray.
  std::vector<TaylorJet> jets_on_ray(double theta, std::span<const double> radii,
                                     int order) const;

  /// P_f and S_f from a closed form that takes 1 - |z| from |z| directly, so
  /// the relative accuracy holds up next to the unit circle. Empty for
  /// functions without such a form.
  std::optional<PointDerivatives> closed_form_derivatives(Complex z) const;

  /// True for the Möbius sub-gallery (Schwarzian identically zero).
  bool is_mobius() const;
  /// (a, b, c, d) for the Möbius sub-gallery, else empty.
  std::optional<std::array<Complex, 4>> mobius_coefficients() const;
  /// f(0) = 0 and f'(0) = 1 to 1e-12.
  bool class_a() const noexcept { return class_a_; }
  /// True when membership in F(c) holds by construction.
  bool certified_member(double c) const;
  /// Subordination data for path-continued members, else null.
  const Subordination* subordination() const;

  Json descriptor() const;
  std::string label() const;

 private:
  std::shared_ptr<const detail::FunctionImpl> impl_;
  bool class_a_ = false;
};

AnalyticFunction make_identity();
AnalyticFunction make_koebe();
/// (1 + z) / (1 - z).
AnalyticFunction make_half_plane();
/// (a z + b) / (c z + d); rejects |ad - bc| <= 1e-13.
AnalyticFunction make_mobius(Complex a, Complex b, Complex c, Complex d);
AnalyticFunction make_polynomial(std::vector<Complex> coeffs);

/// ((1 - z)^(1-c) - 1) / (c - 1), and -log(1 - z) for |c - 1| < 1e-8.
AnalyticFunction make_extremal_fc(double c);
/// Integral of (1 - t^2)^(-c/2) from 0 to z.
AnalyticFunction make_extremal_fc_star(double c);
/// Analytic member with f'(z) = (1 - lambda z^2)^(-c/2), |lambda| = 1.
AnalyticFunction make_extremal_fc_lambda(double c, Complex lambda);

/// No range restriction on the multiplier: values above the target class
/// parameter give deliberate non-members.
AnalyticFunction make_subordinate(Subordination data);

/// Seeded member of F(c) (w = z s) or F0(c) (w = z^2 s) with s a random
/// Blaschke product of the given degree (0..8).
AnalyticFunction random_member(const ClassSpec& spec, std::uint64_t seed, int degree);

AnalyticFunction compose(const AnalyticFunction& outer, const AnalyticFunction& inner);
/// e^{-i alpha} f(e^{i alpha} z).
AnalyticFunction rotate(const AnalyticFunction& f, double alpha);

/// Gallery by name: identity, koebe, half_plane, mobius, fc, f2, fc_star,
/// fc_lambda (lambda = -1). `c` parametrizes the extremal families.
AnalyticFunction make_gallery(std::string_view name, double c = 2.0);

/// Inverse of AnalyticFunction::descriptor(). Accepts parameters either under
/// "params" or at top level.
AnalyticFunction function_from_json(const Json& descriptor);

}  // namespace schwarz
