#pragma once

#include <complex>
#include <span>
#include <vector>

namespace schwarz {

using Complex = std::complex<double>;

inline constexpr int kDefaultJetOrder = 32;

// |leading coefficient| at or below this is treated as an exact zero by
// division, log and pow.
inline constexpr double kSingularThreshold = 1e-13;

/// Truncated Taylor expansion sum_k coeffs[k] (w - center)^k of an analytic
/// germ at a point of the unit disk. coeffs[k] = f^(k)(center) / k!.
///
/// Jets are immutable values; every operation below returns a new jet.
class TaylorJet {
 public:
  TaylorJet(Complex center, std::vector<Complex> coeffs);

  static TaylorJet constant(Complex center, Complex value, int order);
  /// The coordinate function w -> w expanded at `center`.
  static TaylorJet variable(Complex center, int order);

  Complex center() const noexcept { return center_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  /// k-th derivative at the center, k! * coeffs[k].
  Complex derivative(int k) const;

  /// Value of the truncated polynomial at center + offset.
  Complex evaluate(Complex offset) const noexcept;

  TaylorJet truncated(int order) const;

 private:
  Complex center_;
  std::vector<Complex> coeffs_;
};

TaylorJet jet_add(const TaylorJet& a, const TaylorJet& b);
TaylorJet jet_sub(const TaylorJet& a, const TaylorJet& b);
TaylorJet jet_scale(const TaylorJet& a, Complex factor);
TaylorJet jet_shift(const TaylorJet& a, Complex addend);
TaylorJet jet_mul(const TaylorJet& a, const TaylorJet& b);
TaylorJet jet_div(const TaylorJet& a, const TaylorJet& b);
TaylorJet jet_exp(const TaylorJet& a);
/// Principal branch at the leading coefficient.
TaylorJet jet_log(const TaylorJet& a);
/// Principal branch, a^p = exp(p log a).
TaylorJet jet_pow(const TaylorJet& a, double exponent);
/// Antiderivative vanishing at the origin. Center must be 0.
TaylorJet jet_integrate(const TaylorJet& a);
/// Antiderivative at any center, taking `value_at_center` there.
TaylorJet jet_antiderivative(const TaylorJet& a, Complex value_at_center);
TaylorJet jet_differentiate(const TaylorJet& a);
/// outer o inner. inner[0] must coincide with outer.center(); the result is
/// centered at inner.center().
TaylorJet jet_compose(const TaylorJet& outer, const TaylorJet& inner);

inline TaylorJet operator+(const TaylorJet& a, const TaylorJet& b) { return jet_add(a, b); }
inline TaylorJet operator-(const TaylorJet& a, const TaylorJet& b) { return jet_sub(a, b); }
inline TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) { return jet_mul(a, b); }
inline TaylorJet operator/(const TaylorJet& a, const TaylorJet& b) { return jet_div(a, b); }
inline TaylorJet operator*(Complex s, const TaylorJet& a) { return jet_scale(a, s); }
inline TaylorJet operator+(Complex s, const TaylorJet& a) { return jet_shift(a, s); }
inline TaylorJet operator-(Complex s, const TaylorJet& a) { return jet_shift(jet_scale(a, -1.0), s); }

}  // namespace schwarz
