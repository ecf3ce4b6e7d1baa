#pragma once

#include <optional>

#include "schwarz/function.hpp"
#include "schwarz/jet.hpp"

namespace schwarz {

struct DerivativePoint {
  Complex z;
  std::optional<Complex> pre_schwarzian;
  std::optional<Complex> schwarzian;
  bool local_univalence_ok = false;
};

/// f''/f' at z.
Complex preschwarzian_at(const AnalyticFunction& f, Complex z);
/// P' - P^2/2 at z; exactly zero for the Möbius sub-gallery.
Complex schwarzian_at(const AnalyticFunction& f, Complex z);

/// Both derivatives at z, or empty values where f' vanishes.
DerivativePoint derivative_point(const AnalyticFunction& f, Complex z);

/// Schwarzian from a jet of f of order >= 3 via f'''/f' - (3/2)(f''/f')^2.
Complex schwarzian_from_jet(const TaylorJet& f);
/// Schwarzian from a jet of P of order >= 1.
Complex schwarzian_from_preschwarzian(const TaylorJet& p);

/// |S_{f o phi}(z) - S_f(phi(z)) phi'(z)^2 - S_phi(z)|, the left side taken
/// from the composed jet.
double composition_rule_residual(const AnalyticFunction& f, const AnalyticFunction& phi,
                                 Complex z);

/// |u'' + (S_f / 2) u| at z with u = (f')^(-1/2).
double ode_residual(const AnalyticFunction& f, Complex z);

}  // namespace schwarz
