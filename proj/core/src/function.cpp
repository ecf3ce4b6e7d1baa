#include "schwarz/function.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <utility>

#include "schwarz/error.hpp"

namespace schwarz {
namespace {

// Continuation of path-defined members: a step never leaves the disk of
// radius kStepRatio * (1 - |z|) around the current node, so a jet of order
// kContinuationOrder converges geometrically with ratio <= kStepRatio.
constexpr double kStepRatio = 0.3;
constexpr int kContinuationOrder = kDefaultJetOrder;

std::string fmt_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string fmt_complex(Complex z) {
  if (z.imag() == 0.0) return fmt_number(z.real());
  return "(" + fmt_number(z.real()) + (z.imag() < 0 ? "" : "+") + fmt_number(z.imag()) + "i)";
}

void require_disk(Complex z, const char* what) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError(std::string(what) + ": point outside the open unit disk");
  }
}

}  // namespace

void validate_class_parameter(double c) {
  if (!(c > 0.0 && c <= 3.0)) {
    throw InvalidArgument("class parameter c must lie in (0, 3], got " + fmt_number(c));
  }
}

ClassSpec::ClassSpec(double c_, bool zero_second_derivative_)
    : c(c_), zero_second_derivative(zero_second_derivative_) {
  validate_class_parameter(c);
}

Complex Subordination::omega(Complex z) const {
  return std::pow(z, power) * schur(z);
}

Complex Subordination::phi(Complex z) const {
  return std::pow(z, power - 1) * schur(z);
}

namespace detail {

class FunctionImpl {
 public:
  virtual ~FunctionImpl() = default;

  virtual TaylorJet jet(Complex z, int order) const = 0;

  virtual TaylorJet pre_jet(Complex z, int order) const {
    const TaylorJet fp = jet_differentiate(jet(z, order + 2));
    return jet_div(jet_differentiate(fp), fp);
  }

  virtual Complex value(Complex z) const { return jet(z, 0)[0]; }

  virtual std::vector<TaylorJet> ray_jets(double theta, std::span<const double> radii,
                                          int order) const {
    std::vector<TaylorJet> out;
    out.reserve(radii.size());
    for (double r : radii) out.push_back(jet(std::polar(r, theta), order));
    return out;
  }

  virtual std::optional<PointDerivatives> closed_form_derivatives(Complex /*z*/) const {
    return std::nullopt;
  }

  virtual bool mobius() const { return false; }
  // (a, b, c, d) of a Möbius map.
  virtual std::optional<std::array<Complex, 4>> mobius_coefficients() const { return std::nullopt; }
  virtual bool certified_member(double /*c*/) const { return false; }
  virtual const Subordination* subordination() const { return nullptr; }
  virtual Json descriptor() const = 0;
  virtual std::string label() const = 0;
};

}  // namespace detail

namespace {

using detail::FunctionImpl;

double disk_defect(Complex z) {
  const double r = std::abs(z);
  return (1.0 - r) * (1.0 + r);
}

// 1 - omega given 1 - |omega|^2, as (1 - rho) + rho (1 - e^{i psi}).
Complex one_minus(Complex omega, double defect) {
  const double rho = std::sqrt(std::max(0.0, 1.0 - defect));
  const double psi = std::arg(omega);
  const double h = std::sin(0.5 * psi);
  const Complex q{defect / (1.0 + rho) + 2.0 * rho * h * h, -rho * std::sin(psi)};
  if (q == Complex(0.0, 0.0)) throw DivisionBySingular("1 - omega vanishes");
  return q;
}

class MobiusImpl final : public FunctionImpl {
 public:
  MobiusImpl(Complex a, Complex b, Complex c, Complex d, std::string name)
      : a_(a), b_(b), c_(c), d_(d), name_(std::move(name)) {
    if (std::abs(a * d - b * c) <= kSingularThreshold) {
      throw InvalidArgument("mobius: ad - bc vanishes");
    }
  }

  TaylorJet jet(Complex z, int order) const override {
    return jet_div(numerator(z, order), denominator(z, order));
  }

  TaylorJet pre_jet(Complex z, int order) const override {
    // f''/f' = -2c / (cz + d)
    return jet_div(TaylorJet::constant(z, -2.0 * c_, order), denominator(z, order));
  }

  Complex value(Complex z) const override {
    const Complex den = c_ * z + d_;
    if (std::abs(den) <= kSingularThreshold) throw DivisionBySingular("mobius: pole");
    return (a_ * z + b_) / den;
  }

  bool mobius() const override { return true; }
  std::optional<std::array<Complex, 4>> mobius_coefficients() const override {
    return std::array<Complex, 4>{a_, b_, c_, d_};
  }

  bool certified_member(double /*c*/) const override { return name_ == "identity"; }

  Json descriptor() const override {
    if (name_ != "mobius") return Json{{"kind", name_}, {"params", Json::object()}};
    return Json{{"kind", "mobius"},
                {"params",
                 {{"a", complex_to_json(a_)},
                  {"b", complex_to_json(b_)},
                  {"c", complex_to_json(c_)},
                  {"d", complex_to_json(d_)}}}};
  }

  std::string label() const override {
    if (name_ != "mobius") return name_;
    return "mobius(" + fmt_complex(a_) + "," + fmt_complex(b_) + "," + fmt_complex(c_) + "," +
           fmt_complex(d_) + ")";
  }

 private:
  TaylorJet numerator(Complex z, int order) const {
    std::vector<Complex> n(static_cast<std::size_t>(order) + 1);
    n[0] = a_ * z + b_;
    if (order >= 1) n[1] = a_;
    return {z, std::move(n)};
  }

  TaylorJet denominator(Complex z, int order) const {
    std::vector<Complex> d(static_cast<std::size_t>(order) + 1);
    d[0] = c_ * z + d_;
    if (order >= 1) d[1] = c_;
    return {z, std::move(d)};
  }

  Complex a_, b_, c_, d_;
  std::string name_;
};

class KoebeImpl final : public FunctionImpl {
 public:
  TaylorJet jet(Complex z, int order) const override {
    const auto w = TaylorJet::variable(z, order);
    const auto one_minus = 1.0 - w;
    return jet_div(w, jet_mul(one_minus, one_minus));
  }
  // f' = (1 + z) / (1 - z)^3, so P = 1/(1 + z) + 3/(1 - z).
  TaylorJet pre_jet(Complex z, int order) const override {
    const auto w = TaylorJet::variable(z, order);
    const auto one = TaylorJet::constant(z, 1.0, order);
    return jet_add(jet_div(one, 1.0 + w), jet_div(jet_scale(one, 3.0), 1.0 - w));
  }
  // P = (4 + 2z) / (1 - z^2), S = -6 / (1 - z^2)^2.
  std::optional<PointDerivatives> closed_form_derivatives(Complex z) const override {
    const double r = std::abs(z);
    const Complex q = one_minus(z * z, disk_defect(z) * (1.0 + r * r));
    return PointDerivatives{(4.0 + 2.0 * z) / q, -6.0 / (q * q)};
  }
  Json descriptor() const override { return Json{{"kind", "koebe"}, {"params", Json::object()}}; }
  std::string label() const override { return "koebe"; }
};

class FcImpl final : public FunctionImpl {
 public:
  explicit FcImpl(double c) : c_(c) { validate_class_parameter(c); }

  TaylorJet jet(Complex z, int order) const override {
    const auto one_minus = 1.0 - TaylorJet::variable(z, order);
    if (log_limit()) return jet_scale(jet_log(one_minus), -1.0);
    return jet_scale(jet_shift(jet_pow(one_minus, 1.0 - c_), -1.0), 1.0 / (c_ - 1.0));
  }

  TaylorJet pre_jet(Complex z, int order) const override {
    // 1 + z f''/f' = (1 + (c-1) z) / (1 - z), i.e. f''/f' = c / (1 - z).
    return jet_div(TaylorJet::constant(z, c_, order), 1.0 - TaylorJet::variable(z, order));
  }

  std::optional<PointDerivatives> closed_form_derivatives(Complex z) const override {
    const Complex q = one_minus(z, disk_defect(z));
    return PointDerivatives{c_ / q, c_ * (1.0 - 0.5 * c_) / (q * q)};
  }

  bool certified_member(double c) const override { return c >= c_; }

  Json descriptor() const override { return Json{{"kind", "fc"}, {"params", {{"c", c_}}}}; }
  std::string label() const override { return "fc(c=" + fmt_number(c_) + ")"; }

 private:
  bool log_limit() const { return std::abs(c_ - 1.0) < 1e-8; }
  double c_;
};

class PolynomialImpl final : public FunctionImpl {
 public:
  explicit PolynomialImpl(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidArgument("polynomial: empty coefficient list");
  }

  TaylorJet jet(Complex z, int order) const override {
    // Repeated synthetic division by (w - z) yields the Taylor shift.
    std::vector<Complex> c = coeffs_;
    const std::size_t n = c.size() - 1;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = n - 1; i + 1 > j; --i) c[i] += z * c[i + 1];
    }
    c.resize(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
    return {z, std::move(c)};
  }

  Json descriptor() const override {
    Json cs = Json::array();
    for (const auto& a : coeffs_) cs.push_back(complex_to_json(a));
    return Json{{"kind", "polynomial"}, {"params", {{"coeffs", cs}}}};
  }

  std::string label() const override {
    std::string s = "polynomial[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ",";
      s += fmt_complex(coeffs_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<Complex> coeffs_;
};

/// Members given by their pre-Schwarzian P = m w / (z (1 - w)); f' and f are
/// recovered by analytic continuation of log f' = int P along [0, z].
class SubordinateImpl final : public FunctionImpl {
 public:
  SubordinateImpl(Subordination data, Json descriptor, std::string label)
      : data_(std::move(data)), descriptor_(std::move(descriptor)), label_(std::move(label)) {
    if (data_.power < 1) throw InvalidArgument("subordinate: power must be at least 1");
    if (!(data_.multiplier > 0.0)) throw InvalidArgument("subordinate: multiplier must be positive");
  }

  TaylorJet pre_jet(Complex z, int order) const override {
    const TaylorJet s = data_.schur.jet_at(z, order);
    const TaylorJet w = TaylorJet::variable(z, order);
    TaylorJet zpow = TaylorJet::constant(z, 1.0, order);
    for (int k = 1; k < data_.power; ++k) zpow = jet_mul(zpow, w);
    const TaylorJet phi = jet_mul(zpow, s);
    const TaylorJet omega = jet_mul(w, phi);
    return jet_div(jet_scale(phi, data_.multiplier), 1.0 - omega);
  }

  // With q = 1 - omega: P = m phi / q and
  // S = m (phi' q + (1 - m/2) phi^2 + z phi phi') / q^2.
  std::optional<PointDerivatives> closed_form_derivatives(Complex z) const override {
    const TaylorJet s = data_.schur.jet_at(z, 1);
    const int p = data_.power;
    Complex zp1 = 1.0, zp2 = 0.0;
    for (int k = 1; k < p; ++k) {
      zp2 = zp1;
      zp1 *= z;
    }
    const Complex phi = zp1 * s[0];
    const Complex dphi = static_cast<double>(p - 1) * zp2 * s[0] + zp1 * s[1];
    const double r2 = std::norm(z);
    double geometric = 0.0, r2p = 1.0;
    for (int k = 0; k < p; ++k) {
      geometric += r2p;
      r2p *= r2;
    }
    const double defect = disk_defect(z) * geometric + r2p * data_.schur.defect(z);
    const Complex q = one_minus(z * phi, defect);
    const double m = data_.multiplier;
    return PointDerivatives{m * phi / q,
                            m * (dphi * q + (1.0 - 0.5 * m) * phi * phi + z * phi * dphi) / (q * q)};
  }

  TaylorJet jet(Complex z, int order) const override {
    State st;
    advance(st, z);
    return finish(st, order);
  }

  std::vector<TaylorJet> ray_jets(double theta, std::span<const double> radii,
                                  int order) const override {
    if (!std::is_sorted(radii.begin(), radii.end())) {
      return FunctionImpl::ray_jets(theta, radii, order);
    }
    std::vector<TaylorJet> out;
    out.reserve(radii.size());
    State st;
    for (double r : radii) {
      const Complex target = std::polar(r, theta);
      advance(st, target);
      out.push_back(finish(st, order));
    }
    return out;
  }

  bool certified_member(double c) const override { return c >= data_.multiplier; }
  const Subordination* subordination() const override { return &data_; }
  Json descriptor() const override { return descriptor_; }
  std::string label() const override { return label_; }

 private:
  struct State {
    Complex z{0.0, 0.0};
    Complex log_fp{0.0, 0.0};
    Complex f{0.0, 0.0};
  };

  bool closed_log() const {
    return data_.schur.kind() == SchurFunction::Kind::constant && data_.power <= 2;
  }

  // Jet of log f' at z. For constant Schur data the logarithm is explicit:
  // -m log(1 - l z) (power 1) or -(m/2) log(1 - l z^2) (power 2).
  TaylorJet log_fp_jet(Complex z, Complex carried, int order) const {
    if (closed_log()) {
      const Complex lam = data_.schur.rotation();
      const TaylorJet w = TaylorJet::variable(z, order);
      const TaylorJet inner = data_.power == 1 ? w : jet_mul(w, w);
      const TaylorJet base = 1.0 - jet_scale(inner, lam);
      return jet_scale(jet_log(base), -data_.multiplier / data_.power);
    }
    if (order == 0) return TaylorJet::constant(z, carried, 0);
    return jet_antiderivative(pre_jet(z, order - 1), carried);
  }

  void advance(State& st, Complex target) const {
    while (st.z != target) {
      Complex delta = target - st.z;
      const double reach = kStepRatio * (1.0 - std::abs(st.z));
      const bool last = std::abs(delta) <= reach;
      if (!last) delta *= reach / std::abs(delta);
      const TaylorJet lj = log_fp_jet(st.z, st.log_fp, kContinuationOrder);
      const TaylorJet fj = jet_antiderivative(jet_exp(lj), st.f);
      st.log_fp = lj.evaluate(delta);
      st.f = fj.evaluate(delta);
      st.z = last ? target : st.z + delta;
    }
  }

  TaylorJet finish(const State& st, int order) const {
    if (order == 0) return TaylorJet::constant(st.z, st.f, 0);
    const TaylorJet lj = log_fp_jet(st.z, st.log_fp, order - 1);
    return jet_antiderivative(jet_exp(lj), st.f);
  }

  Subordination data_;
  Json descriptor_;
  std::string label_;
};

class ComposeImpl final : public FunctionImpl {
 public:
  ComposeImpl(AnalyticFunction outer, AnalyticFunction inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {}

  TaylorJet jet(Complex z, int order) const override {
    const TaylorJet ij = inner_.jet_at(z, order);
    if (const auto m = outer_.mobius_coefficients()) {
      const auto [a, b, c, d] = *m;
      return jet_div(jet_shift(jet_scale(ij, a), b), jet_shift(jet_scale(ij, c), d));
    }
    require_disk(ij[0], "compose");
    return jet_compose(outer_.jet_at(ij[0], order), ij);
  }

  // P_{g o h} = (P_g o h) h' + P_h, and P_g = -2c / (c w + d) for Möbius g.
  TaylorJet pre_jet(Complex z, int order) const override {
    const TaylorJet inner_p = inner_.preschwarzian_jet(z, order);
    const TaylorJet ij = inner_.jet_at(z, order + 1);
    if (const auto m = outer_.mobius_coefficients()) {
      const Complex c = (*m)[2], d = (*m)[3];
      if (c == Complex{0.0, 0.0}) return inner_p;
      const TaylorJet den = jet_shift(jet_scale(ij.truncated(order), c), d);
      const TaylorJet pulled = jet_div(TaylorJet::constant(z, -2.0 * c, order), den);
      return jet_add(jet_mul(pulled, jet_differentiate(ij)), inner_p);
    }
    require_disk(ij[0], "compose");
    const TaylorJet outer_p = outer_.preschwarzian_jet(ij[0], order);
    const TaylorJet pulled = jet_compose(outer_p, ij.truncated(order));
    return jet_add(jet_mul(pulled, jet_differentiate(ij)), inner_p);
  }

  Complex value(Complex z) const override {
    const Complex w = inner_(z);
    if (const auto m = outer_.mobius_coefficients()) {
      const auto [a, b, c, d] = *m;
      const Complex den = c * w + d;
      if (std::abs(den) <= kSingularThreshold) throw DivisionBySingular("compose: pole of the outer map");
      return (a * w + b) / den;
    }
    require_disk(w, "compose");
    return outer_(w);
  }

  bool mobius() const override { return outer_.is_mobius() && inner_.is_mobius(); }

  Json descriptor() const override {
    return Json{{"kind", "compose"},
                {"params", {{"outer", outer_.descriptor()}, {"inner", inner_.descriptor()}}}};
  }

  std::string label() const override {
    return "compose(" + outer_.label() + "," + inner_.label() + ")";
  }

 private:
  AnalyticFunction outer_;
  AnalyticFunction inner_;
};

AnalyticFunction make(std::shared_ptr<const FunctionImpl> impl) {
  return AnalyticFunction(std::move(impl));
}

}  // namespace

AnalyticFunction::AnalyticFunction(std::shared_ptr<const detail::FunctionImpl> impl)
    : impl_(std::move(impl)) {
  try {
    const TaylorJet j = impl_->jet(Complex{0.0, 0.0}, 1);
    class_a_ = std::abs(j[0]) < 1e-12 && std::abs(j[1] - 1.0) < 1e-12;
  } catch (const Error&) {
    class_a_ = false;
  }
}

TaylorJet AnalyticFunction::jet_at(Complex z, int order) const {
  require_disk(z, "jet_at");
  if (order < 0) throw InvalidArgument("jet_at: negative order");
  return impl_->jet(z, order);
}

TaylorJet AnalyticFunction::preschwarzian_jet(Complex z, int order) const {
  require_disk(z, "preschwarzian_jet");
  if (order < 0) throw InvalidArgument("preschwarzian_jet: negative order");
  return impl_->pre_jet(z, order);
}

Complex AnalyticFunction::operator()(Complex z) const {
  require_disk(z, "evaluate");
  return impl_->value(z);
}

std::vector<TaylorJet> AnalyticFunction::jets_on_ray(double theta, std::span<const double> radii,
                                                     int order) const {
  for (double r : radii) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("jets_on_ray: radius outside [0, 1)");
  }
  return impl_->ray_jets(theta, radii, order);
}

std::optional<PointDerivatives> AnalyticFunction::closed_form_derivatives(Complex z) const {
  require_disk(z, "closed_form_derivatives");
  return impl_->closed_form_derivatives(z);
}
std::optional<std::array<Complex, 4>> AnalyticFunction::mobius_coefficients() const {
  return impl_->mobius_coefficients();
}
bool AnalyticFunction::is_mobius() const { return impl_->mobius(); }
bool AnalyticFunction::certified_member(double c) const { return impl_->certified_member(c); }
const Subordination* AnalyticFunction::subordination() const { return impl_->subordination(); }
Json AnalyticFunction::descriptor() const { return impl_->descriptor(); }
std::string AnalyticFunction::label() const { return impl_->label(); }

AnalyticFunction make_identity() {
  return make(std::make_shared<MobiusImpl>(1.0, 0.0, 0.0, 1.0, "identity"));
}

AnalyticFunction make_koebe() { return make(std::make_shared<KoebeImpl>()); }

AnalyticFunction make_half_plane() {
  return make(std::make_shared<MobiusImpl>(1.0, 1.0, -1.0, 1.0, "half_plane"));
}

AnalyticFunction make_mobius(Complex a, Complex b, Complex c, Complex d) {
  return make(std::make_shared<MobiusImpl>(a, b, c, d, "mobius"));
}

AnalyticFunction make_polynomial(std::vector<Complex> coeffs) {
  return make(std::make_shared<PolynomialImpl>(std::move(coeffs)));
}

AnalyticFunction make_extremal_fc(double c) { return make(std::make_shared<FcImpl>(c)); }

AnalyticFunction make_extremal_fc_star(double c) {
  validate_class_parameter(c);
  Subordination data{c, 2, SchurFunction::constant(1.0)};
  Json d{{"kind", "fc_star"}, {"params", {{"c", c}}}};
  return make(std::make_shared<SubordinateImpl>(std::move(data), std::move(d),
                                                "fc_star(c=" + fmt_number(c) + ")"));
}

AnalyticFunction make_extremal_fc_lambda(double c, Complex lambda) {
  validate_class_parameter(c);
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) {
    throw InvalidArgument("fc_lambda: lambda must be unimodular");
  }
  Subordination data{c, 2, SchurFunction::constant(lambda)};
  Json d{{"kind", "fc_lambda"}, {"params", {{"c", c}, {"lambda", complex_to_json(lambda)}}}};
  return make(std::make_shared<SubordinateImpl>(
      std::move(data), std::move(d),
      "fc_lambda(c=" + fmt_number(c) + ",lambda=" + fmt_complex(lambda) + ")"));
}

AnalyticFunction make_subordinate(Subordination data) {
  Json d{{"kind", "subordinate"},
         {"params",
          {{"multiplier", data.multiplier}, {"power", data.power}, {"schur", data.schur.to_json()}}}};
  std::string label = "subordinate(m=" + fmt_number(data.multiplier) +
                      ",power=" + std::to_string(data.power) +
                      ",degree=" + std::to_string(data.schur.degree()) + ")";
  return make(std::make_shared<SubordinateImpl>(std::move(data), std::move(d), std::move(label)));
}

AnalyticFunction random_member(const ClassSpec& spec, std::uint64_t seed, int degree) {
  if (degree < 0 || degree > 8) throw InvalidArgument("random_member: degree must be in [0, 8]");
  Subordination data{spec.c, spec.zero_second_derivative ? 2 : 1,
                     SchurFunction::random_blaschke(seed, degree)};
  Json d{{"kind", "random_member"},
         {"params",
          {{"c", spec.c},
           {"zero_second_derivative", spec.zero_second_derivative},
           {"seed", seed},
           {"degree", degree}}}};
  std::string label = "random_member(c=" + fmt_number(spec.c) +
                      (spec.zero_second_derivative ? ",F0" : ",F") +
                      ",seed=" + std::to_string(seed) + ",degree=" + std::to_string(degree) + ")";
  return make(std::make_shared<SubordinateImpl>(std::move(data), std::move(d), std::move(label)));
}

AnalyticFunction compose(const AnalyticFunction& outer, const AnalyticFunction& inner) {
  return make(std::make_shared<ComposeImpl>(outer, inner));
}

AnalyticFunction rotate(const AnalyticFunction& f, double alpha) {
  const Complex u = std::polar(1.0, alpha);
  return compose(make_mobius(std::conj(u), 0.0, 0.0, 1.0),
                 compose(f, make_mobius(u, 0.0, 0.0, 1.0)));
}

AnalyticFunction make_gallery(std::string_view name, double c) {
  if (name == "identity") return make_identity();
  if (name == "koebe") return make_koebe();
  if (name == "half_plane") return make_half_plane();
  if (name == "mobius") return make_mobius(1.0, 0.5, 0.25, 1.0);
  if (name == "fc") return make_extremal_fc(c);
  if (name == "f2") return make_extremal_fc(2.0);
  if (name == "fc_star") return make_extremal_fc_star(c);
  if (name == "fc_lambda") return make_extremal_fc_lambda(c, -1.0);
  throw InvalidArgument("unknown gallery member: " + std::string(name));
}

AnalyticFunction function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw InvalidArgument("function descriptor must be an object with a \"kind\" field");
  }
  const auto kind = j.at("kind").get<std::string>();
  const Json& p = j.contains("params") ? j.at("params") : j;
  try {
    if (kind == "identity" || kind == "koebe" || kind == "half_plane" || kind == "f2") {
      return make_gallery(kind);
    }
    if (kind == "mobius") {
      return make_mobius(complex_from_json(p.at("a")), complex_from_json(p.at("b")),
                         complex_from_json(p.at("c")), complex_from_json(p.at("d")));
    }
    if (kind == "polynomial") {
      std::vector<Complex> cs;
      for (const auto& a : p.at("coeffs")) cs.push_back(complex_from_json(a));
      return make_polynomial(std::move(cs));
    }
    if (kind == "fc") return make_extremal_fc(p.at("c").get<double>());
    if (kind == "fc_star") return make_extremal_fc_star(p.at("c").get<double>());
    if (kind == "fc_lambda") {
      return make_extremal_fc_lambda(p.at("c").get<double>(), complex_from_json(p.at("lambda")));
    }
    if (kind == "random_member") {
      const ClassSpec spec(p.at("c").get<double>(), p.value("zero_second_derivative", false));
      return random_member(spec, p.at("seed").get<std::uint64_t>(), p.at("degree").get<int>());
    }
    if (kind == "subordinate") {
      return make_subordinate(Subordination{p.at("multiplier").get<double>(),
                                            p.at("power").get<int>(),
                                            SchurFunction::from_json(p.at("schur"))});
    }
    if (kind == "compose") {
      return compose(function_from_json(p.at("outer")), function_from_json(p.at("inner")));
    }
  } catch (const Json::exception& e) {
    throw InvalidArgument("malformed \"" + kind + "\" descriptor: " + e.what());
  }
  throw InvalidArgument("unknown function kind: " + kind);
}

}  // namespace schwarz
