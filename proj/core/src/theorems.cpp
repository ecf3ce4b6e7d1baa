#include "schwarz/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "schwarz/error.hpp"
#include "schwarz/quadrature.hpp"
#include "schwarz/sampling.hpp"
#include "schwarz/schwarzian.hpp"

namespace schwarz {
namespace {

constexpr double kGrowthRadius = 0.99;
constexpr double kCollision = 1e-10;
constexpr double kNehariNecessary = 6.0;
constexpr double kNehariSufficient = 2.0;
constexpr double kBecker = 1.0;

void require_class_a(const AnalyticFunction& f, const char* who) {
  if (!f.class_a()) throw InvalidArgument(std::string(who) + ": f must satisfy f(0)=0, f'(0)=1");
}

}  // namespace

std::string_view to_string(MembershipStatus status) {
  switch (status) {
    case MembershipStatus::member_by_construction:
      return "member_by_construction";
    case MembershipStatus::empirically_consistent:
      return "empirically_consistent";
    case MembershipStatus::violated:
      return "violated";
  }
  return "violated";
}

Json to_json(const MembershipVerdict& v) {
  return Json{{"status", to_string(v.status)},
              {"witness", v.witness ? Json{{"re", v.witness->real()}, {"im", v.witness->imag()}} : Json(nullptr)},
              {"margin", v.margin}};
}

MembershipVerdict membership_status(const AnalyticFunction& f, double c, std::size_t samples) {
  validate_class_parameter(c);
  require_class_a(f, "membership_status");
  if (samples < 100) throw InvalidArgument("membership_status: need at least 100 samples");

  double worst = std::numeric_limits<double>::infinity();
  Complex where{0.0, 0.0};
  for (const Complex z : disk_samples(samples)) {
    double m;
    try {
      m = (1.0 + z * preschwarzian_at(f, z)).real() - (1.0 - 0.5 * c);
      if (std::isnan(m)) m = -std::numeric_limits<double>::infinity();
    } catch (const DivisionBySingular&) {
      m = -std::numeric_limits<double>::infinity();
    }
    if (m < worst) {
      worst = m;
      where = z;
    }
  }

  MembershipVerdict v;
  v.margin = worst;
  if (worst < -kMembershipTolerance) {
    v.status = MembershipStatus::violated;
    v.witness = where;
  } else if (f.certified_member(c)) {
    v.status = MembershipStatus::member_by_construction;
  } else {
    v.status = MembershipStatus::empirically_consistent;
  }
  return v;
}

Json to_json(const BoundReport& r) {
  return Json{{"theorem_id", r.theorem_id},
              {"samples", r.samples},
              {"worst_margin", r.worst_margin},
              {"worst_point", {{"re", r.worst_point.real()}, {"im", r.worst_point.imag()}}},
              {"passed", r.passed}};
}

MarginAccumulator::MarginAccumulator(std::string theorem_id) {
  r_.theorem_id = std::move(theorem_id);
}

void MarginAccumulator::add(double margin, Complex at) {
  if (std::isnan(margin)) margin = -std::numeric_limits<double>::infinity();
  ++r_.samples;
  if (empty_ || margin < r_.worst_margin) {
    r_.worst_margin = margin;
    r_.worst_point = at;
    empty_ = false;
  }
}

BoundReport MarginAccumulator::report() const {
  BoundReport out = r_;
  out.passed = !empty_ && out.worst_margin >= -kInequalitySlack;
  return out;
}

Complex recover_phi(const AnalyticFunction& f, double c, Complex z) {
  const Complex p = preschwarzian_at(f, z);
  const Complex den = z * p + c;
  if (std::abs(den) <= kSingularThreshold) throw DivisionBySingular("recover_phi: zP + c = 0");
  return p / den;
}

double thm21_ii_margin(const AnalyticFunction& f, double c, Complex z) {
  const Complex p = preschwarzian_at(f, z);
  const double lhs = (1.0 + z * p).real();
  const double rhs = 1.0 - 0.5 * c + (1.0 - std::norm(z)) * std::norm(p) / (2.0 * c);
  return lhs - rhs;
}

double thm21_iii_margin(const AnalyticFunction& f, double c, Complex z) {
  const Complex p = preschwarzian_at(f, z);
  return c - std::abs((1.0 - std::norm(z)) * p - c * std::conj(z));
}

namespace {

template <class Margin>
BoundReport sampled(const char* id, std::size_t samples, Margin&& margin) {
  MarginAccumulator acc(id);
  for (const Complex z : disk_samples(samples)) {
    double m;
    try {
      m = margin(z);
    } catch (const DivisionBySingular&) {
      m = -std::numeric_limits<double>::infinity();
    }
    acc.add(m, z);
  }
  return acc.report();
}

}  // namespace

BoundReport verify_thm21_ii(const AnalyticFunction& f, double c, std::size_t samples) {
  validate_class_parameter(c);
  return sampled("thm2.1.ii", samples, [&](Complex z) { return thm21_ii_margin(f, c, z); });
}

BoundReport verify_thm21_iii(const AnalyticFunction& f, double c, std::size_t samples) {
  validate_class_parameter(c);
  return sampled("thm2.1.iii", samples, [&](Complex z) { return thm21_iii_margin(f, c, z); });
}

GrowthBounds growth_distortion_bounds(double c, double r) {
  validate_class_parameter(c);
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("growth_distortion_bounds: r must lie in [0, 1)");
  const double e = -0.5 * c;
  GrowthBounds b;
  b.distortion_low = std::pow(1.0 + r * r, e);
  b.distortion_high = std::pow(1.0 - r * r, e);
  b.growth_low = adaptive_simpson([e](double t) { return std::pow(1.0 + t * t, e); }, 0.0, r).value;
  b.growth_high = adaptive_simpson([e](double t) { return std::pow(1.0 - t * t, e); }, 0.0, r).value;
  return b;
}

BoundReport verify_growth_distortion(const AnalyticFunction& f, double c, std::size_t samples) {
  validate_class_parameter(c);
  require_class_a(f, "verify_growth_distortion");
  const auto rays = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(std::max<std::size_t>(samples, 1)))));
  const std::size_t per_ray = (std::max<std::size_t>(samples, 1) + rays - 1) / rays;

  std::vector<double> radii(per_ray);
  std::vector<GrowthBounds> bounds(per_ray);
  for (std::size_t k = 0; k < per_ray; ++k) {
    radii[k] = kGrowthRadius * static_cast<double>(k + 1) / static_cast<double>(per_ray);
    bounds[k] = growth_distortion_bounds(c, radii[k]);
  }

  MarginAccumulator acc("thm2.2");
  for (std::size_t a = 0; a < rays; ++a) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(rays);
    const auto jets = f.jets_on_ray(theta, radii, 1);
    for (std::size_t k = 0; k < per_ray; ++k) {
      const double fz = std::abs(jets[k][0]);
      const double fp = std::abs(jets[k][1]);
      const GrowthBounds& b = bounds[k];
      const double m = std::min({fp - b.distortion_low, b.distortion_high - fp, fz - b.growth_low,
                                 b.growth_high - fz});
      acc.add(m, jets[k].center());
    }
  }
  return acc.report();
}

namespace {

// Norm-level bounds carry the search tolerance inside the margin.
BoundReport norm_report(const char* id, const NormEstimate& e, double bound) {
  MarginAccumulator acc(id);
  acc.add(bound + kNormTolerance - e.value, std::polar(e.argmax.r, e.argmax.theta));
  BoundReport r = acc.report();
  r.samples = static_cast<std::size_t>(e.radial) * static_cast<std::size_t>(e.angular);
  return r;
}

}  // namespace

BoundReport verify_thm23(const AnalyticFunction& f, double c, const SearchOptions& options) {
  validate_class_parameter(c);
  return norm_report("thm2.3", hyperbolic_norm(f, NormKind::pre_schwarzian, options), c);
}

BoundReport verify_thm24(const AnalyticFunction& f, double c, const SearchOptions& options) {
  validate_class_parameter(c);
  return norm_report("thm2.4", hyperbolic_norm(f, NormKind::schwarzian, options),
                     0.5 * c * (4.0 - c));
}

double gamma_of(const AnalyticFunction& f, double c) {
  validate_class_parameter(c);
  return std::abs(2.0 * f.jet_at(Complex{0.0, 0.0}, 2)[2]) / c;
}

double thm25_bound(double c, double gamma) {
  return c * (1.0 + (1.0 - 0.5 * c) * (1.0 + gamma) / (1.0 - gamma));
}

BoundReport verify_thm25(const AnalyticFunction& f, double c, std::size_t samples,
                         const SearchOptions& options) {
  validate_class_parameter(c);
  require_class_a(f, "verify_thm25");
  if (gamma_of(f, c) >= kGammaCap) {
    throw GammaDegenerate("verify_thm25: gamma = " + std::to_string(gamma_of(f, c)) + " is not below 1");
  }
  return verify_thm25(f, c, hyperbolic_norm(f, NormKind::schwarzian, options), samples);
}

BoundReport verify_thm25(const AnalyticFunction& f, double c, const NormEstimate& schwarzian_norm,
                         std::size_t samples) {
  validate_class_parameter(c);
  require_class_a(f, "verify_thm25");
  const double gamma = gamma_of(f, c);
  if (gamma >= kGammaCap) {
    throw GammaDegenerate("verify_thm25: gamma = " + std::to_string(gamma) + " is not below 1");
  }
  const double bound = thm25_bound(c, gamma);
  MarginAccumulator acc("thm2.5");
  for (const Complex z : disk_samples(samples)) {
    double m;
    try {
      m = bound - weighted_modulus(f, z, NormKind::schwarzian);
    } catch (const DivisionBySingular&) {
      m = -std::numeric_limits<double>::infinity();
    }
    acc.add(m, z);
  }
  const NormEstimate& e = schwarzian_norm;
  acc.add(bound - e.certified_lower, std::polar(e.argmax.r, e.argmax.theta));
  return acc.report();
}

double lemmaA_margin(const SchurFunction& phi, Complex z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("lemmaA_margin: point outside the open unit disk");
  const double w = std::abs(phi(z));
  if (w >= 1.0 - 1e-12) throw DomainError("lemmaA_margin: |phi(z)| too close to 1");
  const double g = std::abs(phi(Complex{0.0, 0.0}));
  const double r = std::abs(z);
  const double rhs = (g + r) * (g + r) / (phi.defect(Complex{0.0, 0.0}) * (1.0 - r) * (1.0 + r));
  return rhs - w * w / phi.defect(z);
}

Complex psi_value(const SchurFunction& phi, Complex z) {
  const Complex den = 1.0 - z * phi(z);
  if (std::abs(den) <= kSingularThreshold) throw DivisionBySingular("psi: 1 - z phi(z) = 0");
  return (std::conj(z) - phi(z)) / den;
}

double psi_identity_residual(const SchurFunction& phi, Complex z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("psi_identity_residual: point outside the disk");
  const Complex p = phi(z);
  const Complex den = 1.0 - z * p;
  if (std::abs(den) <= kSingularThreshold) throw DivisionBySingular("psi: 1 - z phi(z) = 0");
  const Complex psi = (std::conj(z) - p) / den;
  const double w = (1.0 - std::abs(z)) * (1.0 + std::abs(z));
  const double lhs = w * w / std::norm(den);
  const double rhs = (1.0 - std::norm(psi)) * w / phi.defect(z);
  return std::abs(lhs - rhs);
}

BoundReport verify_lemmaA(const SchurFunction& phi, std::size_t samples) {
  MarginAccumulator acc("lemmaA");
  for (const Complex z : disk_samples(samples)) acc.add(lemmaA_margin(phi, z), z);
  return acc.report();
}

BoundReport verify_psi(const SchurFunction& phi, std::size_t samples) {
  MarginAccumulator acc("psi");
  for (const Complex z : disk_samples(samples)) {
    const double m = std::abs(psi_value(phi, z)) < 1.0 ? -psi_identity_residual(phi, z) : -1.0;
    acc.add(m, z);
  }
  return acc.report();
}

UnivalencePredicates univalence_predicates(const NormEstimate& pre_norm,
                                           const NormEstimate& schwarzian_norm) {
  UnivalencePredicates u;
  u.pre_norm = pre_norm;
  u.schwarzian_norm = schwarzian_norm;
  const double s = schwarzian_norm.value;
  u.nehari_necessary_ok = s <= kNehariNecessary + kNormTolerance;
  u.nehari_sufficient = s <= kNehariSufficient + kNormTolerance;
  u.becker_sufficient = pre_norm.value <= kBecker + kNormTolerance;
  if (s < kNehariSufficient - kNormTolerance) u.ahlfors_weill_k = 0.5 * s;
  return u;
}

UnivalencePredicates univalence_predicates(const AnalyticFunction& f,
                                           const SearchOptions& options) {
  return univalence_predicates(hyperbolic_norm(f, NormKind::pre_schwarzian, options),
                               hyperbolic_norm(f, NormKind::schwarzian, options));
}

bool univalence_bruteforce(const AnalyticFunction& f, int gridsize, double radius) {
  if (gridsize < 1 || gridsize > 200) throw InvalidArgument("univalence_bruteforce: gridsize must be in [1, 200]");
  if (!(radius > 0.0 && radius < 1.0)) throw InvalidArgument("univalence_bruteforce: radius must lie in (0, 1)");
  const auto n = static_cast<std::size_t>(gridsize);
  std::vector<double> radii(n);
  for (std::size_t k = 0; k < n; ++k) {
    radii[k] = radius * static_cast<double>(k + 1) / static_cast<double>(n);
  }
  std::vector<Complex> images;
  images.reserve(n * n + 1);
  images.push_back(f(Complex{0.0, 0.0}));
  for (std::size_t a = 0; a < n; ++a) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(n);
    for (const auto& j : f.jets_on_ray(theta, radii, 0)) images.push_back(j[0]);
  }
  std::sort(images.begin(), images.end(), [](Complex x, Complex y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size() && images[j].real() - images[i].real() <= kCollision; ++j) {
      if (std::abs(images[j] - images[i]) <= kCollision) return false;
    }
  }
  return true;
}

AnalyticFunction manufacture_nonmember(const AnalyticFunction& member, double c,
                                       std::size_t samples) {
  const Subordination* s = member.subordination();
  if (s == nullptr) throw InvalidArgument("manufacture_nonmember: member has no subordination data");
  for (double t : {1.25, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 16.0, 32.0}) {
    AnalyticFunction g = make_subordinate(Subordination{t * s->multiplier, s->power, s->schur});
    if (membership_status(g, c, samples).status == MembershipStatus::violated) return g;
  }
  throw Error("manufacture_nonmember: no violation found for " + member.label());
}

}  // namespace schwarz
