#include "schwarz/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schwarz/error.hpp"

namespace schwarz {
namespace {

void require_same_center(const TaylorJet& a, const TaylorJet& b, const char* op) {
  if (a.center() != b.center()) {
    throw CenterMismatch(std::string(op) + ": jets expanded at different centers");
  }
}

void require_regular_leading(const TaylorJet& a, const char* op) {
  if (std::abs(a[0]) <= kSingularThreshold) {
    throw DivisionBySingular(std::string(op) + ": leading coefficient below singular threshold");
  }
}

std::size_t shared_size(const TaylorJet& a, const TaylorJet& b) {
  return static_cast<std::size_t>(std::min(a.order(), b.order())) + 1;
}

}  // namespace

TaylorJet::TaylorJet(Complex center, std::vector<Complex> coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw InvalidArgument("TaylorJet: at least one coefficient required");
  }
  if (!(std::abs(center_) < 1.0)) {
    throw DomainError("TaylorJet: center must lie in the open unit disk");
  }
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidArgument("TaylorJet: non-finite coefficient");
    }
  }
}

TaylorJet TaylorJet::constant(Complex center, Complex value, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(std::max(order, 0)) + 1);
  c[0] = value;
  return {center, std::move(c)};
}

TaylorJet TaylorJet::variable(Complex center, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(std::max(order, 0)) + 1);
  c[0] = center;
  if (order >= 1) c[1] = 1.0;
  return {center, std::move(c)};
}

Complex TaylorJet::derivative(int k) const {
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return (*this)[k] * factorial;
}

Complex TaylorJet::evaluate(Complex offset) const noexcept {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * offset + *it;
  return acc;
}

TaylorJet TaylorJet::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw InvalidArgument("TaylorJet::truncated: order out of range");
  }
  return {center_, std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + order + 1)};
}

TaylorJet jet_add(const TaylorJet& a, const TaylorJet& b) {
  require_same_center(a, b, "jet_add");
  std::vector<Complex> c(shared_size(a, b));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs()[k] + b.coeffs()[k];
  return {a.center(), std::move(c)};
}

TaylorJet jet_sub(const TaylorJet& a, const TaylorJet& b) {
  require_same_center(a, b, "jet_sub");
  std::vector<Complex> c(shared_size(a, b));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs()[k] - b.coeffs()[k];
  return {a.center(), std::move(c)};
}

TaylorJet jet_scale(const TaylorJet& a, Complex factor) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= factor;
  return {a.center(), std::move(c)};
}

TaylorJet jet_shift(const TaylorJet& a, Complex addend) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  c[0] += addend;
  return {a.center(), std::move(c)};
}

TaylorJet jet_mul(const TaylorJet& a, const TaylorJet& b) {
  require_same_center(a, b, "jet_mul");
  const auto n = shared_size(a, b);
  const auto x = a.coeffs();
  const auto y = b.coeffs();
  std::vector<Complex> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex s = 0.0;
    for (std::size_t j = 0; j <= k; ++j) s += x[j] * y[k - j];
    c[k] = s;
  }
  return {a.center(), std::move(c)};
}

TaylorJet jet_div(const TaylorJet& a, const TaylorJet& b) {
  require_same_center(a, b, "jet_div");
  require_regular_leading(b, "jet_div");
  const auto n = shared_size(a, b);
  const auto x = a.coeffs();
  const auto y = b.coeffs();
  std::vector<Complex> q(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex s = x[k];
    for (std::size_t j = 1; j <= k; ++j) s -= y[j] * q[k - j];
    q[k] = s / y[0];
  }
  return {a.center(), std::move(q)};
}

TaylorJet jet_exp(const TaylorJet& a) {
  const auto x = a.coeffs();
  std::vector<Complex> e(x.size());
  e[0] = std::exp(x[0]);
  for (std::size_t k = 1; k < e.size(); ++k) {
    Complex s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * x[j] * e[k - j];
    e[k] = s / static_cast<double>(k);
  }
  return {a.center(), std::move(e)};
}

TaylorJet jet_log(const TaylorJet& a) {
  require_regular_leading(a, "jet_log");
  const auto x = a.coeffs();
  std::vector<Complex> l(x.size());
  l[0] = std::log(x[0]);
  for (std::size_t k = 1; k < l.size(); ++k) {
    Complex s = 0.0;
    for (std::size_t j = 1; j < k; ++j) s += static_cast<double>(j) * l[j] * x[k - j];
    l[k] = (x[k] - s / static_cast<double>(k)) / x[0];
  }
  return {a.center(), std::move(l)};
}

TaylorJet jet_pow(const TaylorJet& a, double exponent) {
  require_regular_leading(a, "jet_pow");
  const auto x = a.coeffs();
  std::vector<Complex> p(x.size());
  p[0] = std::exp(exponent * std::log(x[0]));
  // k a0 p_k = sum_{j=1..k} ((exponent + 1) j - k) a_j p_{k-j}
  for (std::size_t k = 1; k < p.size(); ++k) {
    Complex s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      s += ((exponent + 1.0) * static_cast<double>(j) - static_cast<double>(k)) * x[j] * p[k - j];
    }
    p[k] = s / (static_cast<double>(k) * x[0]);
  }
  return {a.center(), std::move(p)};
}

TaylorJet jet_antiderivative(const TaylorJet& a, Complex value_at_center) {
  const auto x = a.coeffs();
  std::vector<Complex> c(x.size() + 1);
  c[0] = value_at_center;
  for (std::size_t k = 0; k < x.size(); ++k) c[k + 1] = x[k] / static_cast<double>(k + 1);
  return {a.center(), std::move(c)};
}

TaylorJet jet_integrate(const TaylorJet& a) {
  if (a.center() != Complex{0.0, 0.0}) {
    throw InvalidArgument("jet_integrate: antiderivative is anchored at the origin only");
  }
  return jet_antiderivative(a, 0.0);
}

TaylorJet jet_differentiate(const TaylorJet& a) {
  if (a.order() < 1) {
    throw InvalidArgument("jet_differentiate: order-0 jet carries no derivative");
  }
  const auto x = a.coeffs();
  std::vector<Complex> d(x.size() - 1);
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = static_cast<double>(k + 1) * x[k + 1];
  return {a.center(), std::move(d)};
}

TaylorJet jet_compose(const TaylorJet& outer, const TaylorJet& inner) {
  const Complex anchor = inner[0];
  const double scale = std::max(1.0, std::abs(anchor));
  if (std::abs(anchor - outer.center()) > 1e-12 * scale) {
    throw CenterMismatch("jet_compose: inner value at its center differs from outer center");
  }
  const int n = std::min(outer.order(), inner.order());
  const TaylorJet delta = jet_shift(inner.truncated(n), -anchor);
  const auto oc = outer.coeffs();
  TaylorJet acc = TaylorJet::constant(inner.center(), oc[static_cast<std::size_t>(n)], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = jet_shift(jet_mul(acc, delta), oc[static_cast<std::size_t>(k)]);
  }
  return acc;
}

}  // namespace schwarz
