#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "schwarz/function.hpp"
#include "schwarz/norms.hpp"
#include "schwarz/schur.hpp"

namespace schwarz {

inline constexpr double kEqualityTolerance = 1e-8;
inline constexpr double kInequalitySlack = 1e-9;
inline constexpr double kNormTolerance = 1e-6;
inline constexpr double kMembershipTolerance = 1e-10;
inline constexpr double kGammaCap = 1.0 - 1e-9;

enum class MembershipStatus { member_by_construction, empirically_consistent, violated };

std::string_view to_string(MembershipStatus status);

struct MembershipVerdict {
  MembershipStatus status = MembershipStatus::empirically_consistent;
  std::optional<Complex> witness;
  /// Smallest sampled Re(1 + z f''/f') - (1 - c/2); -inf where f' vanishes.
  double margin = 0.0;
};

Json to_json(const MembershipVerdict& v);

/// Samples the defining inequality of F(c) on a Halton disk set with radii up
/// to kSampleRadiusCap. Requires a class-A function.
MembershipVerdict membership_status(const AnalyticFunction& f, double c,
                                    std::size_t samples = 1000);

struct BoundReport {
  std::string theorem_id;
  std::size_t samples = 0;
  double worst_margin = 0.0;
  Complex worst_point{0.0, 0.0};
  bool passed = true;
};

Json to_json(const BoundReport& r);

/// Folds sampled margins into a BoundReport. Smaller margins win; ties keep
/// the first point offered.
class MarginAccumulator {
 public:
  explicit MarginAccumulator(std::string theorem_id);
  void add(double margin, Complex at);
  BoundReport report() const;

 private:
  BoundReport r_;
  bool empty_ = true;
};

/// (f''/f') / (z f''/f' + c).
Complex recover_phi(const AnalyticFunction& f, double c, Complex z);

/// Re(1 + zP) - [1 - c/2 + (1-|z|^2)|P|^2 / (2c)].
double thm21_ii_margin(const AnalyticFunction& f, double c, Complex z);
/// c - |(1-|z|^2) P - c conj(z)|.
double thm21_iii_margin(const AnalyticFunction& f, double c, Complex z);

BoundReport verify_thm21_ii(const AnalyticFunction& f, double c, std::size_t samples = 1000);
BoundReport verify_thm21_iii(const AnalyticFunction& f, double c, std::size_t samples = 1000);

struct GrowthBounds {
  double distortion_low;
  double distortion_high;
  double growth_low;
  double growth_high;
};

/// (1+r^2)^(-c/2) <= |f'| <= (1-r^2)^(-c/2) and the radial integrals of the
/// same two functions for |f|.
GrowthBounds growth_distortion_bounds(double c, double r);

/// Checks all four bounds on rays through the origin, radii up to 0.99.
BoundReport verify_growth_distortion(const AnalyticFunction& f, double c,
                                     std::size_t samples = 1000);

/// ||P_f|| <= c. Norm-level reports use margin bound + kNormTolerance - norm.
BoundReport verify_thm23(const AnalyticFunction& f, double c, const SearchOptions& options = {});
/// ||S_f|| <= c(4-c)/2.
BoundReport verify_thm24(const AnalyticFunction& f, double c, const SearchOptions& options = {});

/// |f''(0)| / c.
double gamma_of(const AnalyticFunction& f, double c);
/// c (1 + (1 - c/2)(1 + gamma)/(1 - gamma)).
double thm25_bound(double c, double gamma);
/// Pointwise bound on (1-|z|^2)^2 |S_f| at the samples and at the Schwarzian
/// norm argmax. Throws GammaDegenerate when gamma >= 1 - 1e-9.
BoundReport verify_thm25(const AnalyticFunction& f, double c, std::size_t samples = 1000,
                         const SearchOptions& options = {});
/// As above with a Schwarzian norm estimate computed by the caller.
BoundReport verify_thm25(const AnalyticFunction& f, double c, const NormEstimate& schwarzian_norm,
                         std::size_t samples = 1000);

/// (g + |z|)^2 / ((1 - g^2)(1 - |z|^2)) - |phi|^2 / (1 - |phi|^2), g = |phi(0)|.
double lemmaA_margin(const SchurFunction& phi, Complex z);
/// (conj(z) - phi) / (1 - z phi).
Complex psi_value(const SchurFunction& phi, Complex z);
/// |(1-|z|^2)^2 / |1 - z phi|^2 - (1 - |Psi|^2)(1 - |z|^2) / (1 - |phi|^2)|.
double psi_identity_residual(const SchurFunction& phi, Complex z);

BoundReport verify_lemmaA(const SchurFunction& phi, std::size_t samples = 1000);
/// Margin is -residual; a point with |Psi| >= 1 counts as margin -1.
BoundReport verify_psi(const SchurFunction& phi, std::size_t samples = 1000);

struct UnivalencePredicates {
  bool nehari_necessary_ok = false;
  bool nehari_sufficient = false;
  bool becker_sufficient = false;
  std::optional<double> ahlfors_weill_k;
  NormEstimate pre_norm;
  NormEstimate schwarzian_norm;
};

UnivalencePredicates univalence_predicates(const NormEstimate& pre_norm,
                                           const NormEstimate& schwarzian_norm);
UnivalencePredicates univalence_predicates(const AnalyticFunction& f,
                                           const SearchOptions& options = {});

/// No two nodes of a gridsize x gridsize polar grid (plus the centre) inside
/// `radius` have images within 1e-10. gridsize <= 200.
bool univalence_bruteforce(const AnalyticFunction& f, int gridsize, double radius = 0.98);

/// Scales the multiplier of a subordination-defined member (which scales its
/// second Taylor coefficient by the same factor) until membership_status
/// reports a violation for c.
AnalyticFunction manufacture_nonmember(const AnalyticFunction& member, double c,
                                       std::size_t samples = 1000);

}  // namespace schwarz
