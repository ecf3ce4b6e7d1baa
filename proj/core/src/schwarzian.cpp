#include "schwarz/schwarzian.hpp"

#include <cmath>

#include "schwarz/error.hpp"

namespace schwarz {

Complex preschwarzian_at(const AnalyticFunction& f, Complex z) {
  return f.preschwarzian_jet(z, 0)[0];
}

Complex schwarzian_at(const AnalyticFunction& f, Complex z) {
  if (f.is_mobius()) {
    if (!(std::abs(z) < 1.0)) throw DomainError("schwarzian_at: point outside the open unit disk");
    return {0.0, 0.0};
  }
  return schwarzian_from_preschwarzian(f.preschwarzian_jet(z, 1));
}

DerivativePoint derivative_point(const AnalyticFunction& f, Complex z) {
  DerivativePoint out{z, std::nullopt, std::nullopt, false};
  try {
    const TaylorJet p = f.preschwarzian_jet(z, 1);
    out.pre_schwarzian = p[0];
    out.schwarzian = f.is_mobius() ? Complex{0.0, 0.0} : schwarzian_from_preschwarzian(p);
    out.local_univalence_ok = std::isfinite(std::abs(*out.pre_schwarzian)) &&
                              std::isfinite(std::abs(*out.schwarzian));
    if (!out.local_univalence_ok) {
      out.pre_schwarzian.reset();
      out.schwarzian.reset();
    }
  } catch (const DivisionBySingular&) {
  }
  return out;
}

Complex schwarzian_from_jet(const TaylorJet& f) {
  if (f.order() < 3) throw InvalidArgument("schwarzian_from_jet: order must be at least 3");
  const Complex d1 = f[1];
  if (std::abs(d1) <= kSingularThreshold) throw DivisionBySingular("schwarzian_from_jet: f' = 0");
  const Complex d2 = 2.0 * f[2];
  const Complex d3 = 6.0 * f[3];
  const Complex p = d2 / d1;
  return d3 / d1 - 1.5 * p * p;
}

Complex schwarzian_from_preschwarzian(const TaylorJet& p) {
  if (p.order() < 1) throw InvalidArgument("schwarzian_from_preschwarzian: order must be at least 1");
  return p[1] - 0.5 * p[0] * p[0];
}

double composition_rule_residual(const AnalyticFunction& f, const AnalyticFunction& phi,
                                 Complex z) {
  const TaylorJet pj = phi.jet_at(z, 3);
  const Complex w = pj[0];
  if (!(std::abs(w) < 1.0)) throw DomainError("composition_rule_residual: phi(z) leaves the disk");
  const TaylorJet composed = jet_compose(f.jet_at(w, 3), pj);
  const Complex lhs = schwarzian_from_jet(composed);
  const Complex dphi = pj[1];
  const Complex rhs = schwarzian_at(f, w) * dphi * dphi + schwarzian_at(phi, z);
  return std::abs(lhs - rhs);
}

double ode_residual(const AnalyticFunction& f, Complex z) {
  const TaylorJet fp = jet_differentiate(f.jet_at(z, 3));
  const TaylorJet u = jet_pow(fp, -0.5);
  const Complex u2 = 2.0 * u[2];
  return std::abs(u2 + 0.5 * schwarzian_at(f, z) * u[0]);
}

}  // namespace schwarz
