#include "schwarz/norms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "schwarz/error.hpp"
#include "schwarz/parallel.hpp"
#include "schwarz/sampling.hpp"
#include "schwarz/schwarzian.hpp"

namespace schwarz {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kUnreliableFraction = 0.01;
constexpr std::array<double, 4> kBoundaryOffsets = {1e-4, 5e-5, 2.5e-5, 1.25e-5};

struct Sample {
  double value = -std::numeric_limits<double>::infinity();
  double r = 0.0;
  double theta = 0.0;
};

// Larger value wins; ties go to the lexicographically smaller (r, theta).
bool better(const Sample& a, const Sample& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.r != b.r) return a.r < b.r;
  return a.theta < b.theta;
}

double normalize_angle(double t) {
  double x = std::fmod(t, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  return x;
}

class Objective {
 public:
  Objective(const AnalyticFunction& f, NormKind kind, double r_max)
      : f_(f), kind_(kind), r_max_(r_max) {}

  Sample operator()(double r, double theta) const {
    r = std::clamp(r, 0.0, r_max_);
    Sample s{-std::numeric_limits<double>::infinity(), r, normalize_angle(theta)};
    try {
      const double v = weighted_modulus(f_, std::polar(r, theta), kind_);
      if (std::isfinite(v)) s.value = v;
    } catch (const DivisionBySingular&) {
    }
    return s;
  }

  double r_max() const { return r_max_; }

 private:
  const AnalyticFunction& f_;
  NormKind kind_;
  double r_max_;
};

struct Refined {
  Sample best;
  int iterations = 0;
};

Refined nelder_mead(const Objective& obj, double r0, double t0, double dr, double dt,
                    int max_iterations) {
  struct Vertex {
    double r, t;
    Sample s;
  };
  auto make = [&](double r, double t) {
    r = std::clamp(r, 0.0, obj.r_max());
    return Vertex{r, t, obj(r, t)};
  };
  auto order = [](const Vertex& a, const Vertex& b) { return better(a.s, b.s); };

  Refined out;
  std::array<Vertex, 3> v = {make(r0, t0), make(r0 + dr, t0), make(r0, t0 + dt)};
  auto note = [&](const Vertex& x) {
    if (better(x.s, out.best)) out.best = x.s;
  };
  for (const auto& x : v) note(x);

  for (int it = 0; it < max_iterations; ++it) {
    std::sort(v.begin(), v.end(), order);
    // Steps measured in units of the distance to the circle.
    const double scale_r = 1e-10 * (1.0 - v[0].r);
    const double scale_t = 1e-10 * (1.0 - v[0].r);
    bool small = true;
    for (int k = 1; k < 3; ++k) {
      if (std::abs(v[k].r - v[0].r) > scale_r || std::abs(v[k].t - v[0].t) > scale_t) small = false;
    }
    if (small) break;
    out.iterations = it + 1;

    const double cr = 0.5 * (v[0].r + v[1].r);
    const double ct = 0.5 * (v[0].t + v[1].t);
    const Vertex refl = make(cr + (cr - v[2].r), ct + (ct - v[2].t));
    note(refl);
    if (better(refl.s, v[0].s)) {
      const Vertex exp = make(cr + 2.0 * (cr - v[2].r), ct + 2.0 * (ct - v[2].t));
      note(exp);
      v[2] = better(exp.s, refl.s) ? exp : refl;
      continue;
    }
    if (better(refl.s, v[1].s)) {
      v[2] = refl;
      continue;
    }
    const bool outside = better(refl.s, v[2].s);
    const Vertex& ref = outside ? refl : v[2];
    const Vertex con = make(cr + 0.5 * (ref.r - cr), ct + 0.5 * (ref.t - ct));
    note(con);
    if (better(con.s, ref.s)) {
      v[2] = con;
      continue;
    }
    for (int k = 1; k < 3; ++k) {
      v[k] = make(v[0].r + 0.5 * (v[k].r - v[0].r), v[0].t + 0.5 * (v[k].t - v[0].t));
      note(v[k]);
    }
  }
  return out;
}

Sample golden_section(const Objective& obj, double r, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  Sample f1 = obj(r, x1), f2 = obj(r, x2);
  Sample best = better(f1, f2) ? f1 : f2;
  while (b - a > tol) {
    if (f1.value >= f2.value) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = obj(r, x1);
      if (better(f1, best)) best = f1;
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = obj(r, x2);
      if (better(f2, best)) best = f2;
    }
  }
  return best;
}

// Value at h = 0 of the interpolating polynomial through (h_k, v_k).
double neville_at_zero(const std::array<double, 4>& h, std::array<double, 4> v) {
  for (std::size_t m = 1; m < h.size(); ++m) {
    for (std::size_t i = 0; i + m < h.size(); ++i) {
      v[i] = (h[i + m] * v[i] - h[i] * v[i + 1]) / (h[i + m] - h[i]);
    }
  }
  return v[0] + 0.0;  // no negative zero
}

}  // namespace

std::string_view to_string(NormKind kind) {
  return kind == NormKind::pre_schwarzian ? "pre_schwarzian" : "schwarzian";
}

NormKind parse_norm_kind(std::string_view name) {
  if (name == "pre_schwarzian" || name == "pre") return NormKind::pre_schwarzian;
  if (name == "schwarzian") return NormKind::schwarzian;
  throw InvalidArgument("unknown norm kind: " + std::string(name));
}

Json to_json(const NormEstimate& e) {
  return Json{{"value", e.value},
              {"argmax", {{"r", e.argmax.r}, {"theta", e.argmax.theta}}},
              {"boundary_attained", e.boundary_attained},
              {"grid_resolution", {{"radial", e.radial}, {"angular", e.angular}}},
              {"refinement_iterations", e.refinement_iterations},
              {"certified_lower", e.certified_lower},
              {"extrapolated", e.extrapolated ? Json(*e.extrapolated) : Json(nullptr)}};
}

double weighted_modulus(const AnalyticFunction& f, Complex z, NormKind kind) {
  const double r = std::abs(z);
  const double w = (1.0 - r) * (1.0 + r);
  if (const auto d = f.closed_form_derivatives(z)) {
    return kind == NormKind::pre_schwarzian ? w * std::abs(d->pre_schwarzian)
                                            : w * w * std::abs(d->schwarzian);
  }
  if (kind == NormKind::pre_schwarzian) return w * std::abs(preschwarzian_at(f, z));
  return w * w * std::abs(schwarzian_at(f, z));
}

std::vector<ProfilePoint> radial_profile(const AnalyticFunction& f, double theta, int samples,
                                         NormKind kind, double r_max) {
  if (samples < 2) throw InvalidArgument("radial_profile: need at least 2 samples");
  std::vector<ProfilePoint> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (double r : clustered_radii(samples, r_max)) {
    ProfilePoint p{r, std::nullopt};
    try {
      const double v = weighted_modulus(f, std::polar(r, theta), kind);
      if (std::isfinite(v)) p.value = v;
    } catch (const DivisionBySingular&) {
    }
    out.push_back(p);
  }
  return out;
}

NormEstimate hyperbolic_norm(const AnalyticFunction& f, NormKind kind,
                             const SearchOptions& opt) {
  if (opt.radial < 2 || opt.angular < 1) throw InvalidArgument("hyperbolic_norm: grid too small");
  if (!(opt.r_max > 0.0 && opt.r_max < 1.0)) throw InvalidArgument("hyperbolic_norm: r_max not in (0,1)");
  const Objective obj(f, kind, opt.r_max);
  const std::vector<double> radii = clustered_radii(opt.radial, opt.r_max);
  const auto R = static_cast<std::size_t>(opt.radial);
  const auto A = static_cast<std::size_t>(opt.angular);
  const double dtheta = kTwoPi / static_cast<double>(A);

  std::vector<double> grid(R * A);
  parallel_for(R, opt.workers, [&](std::size_t i) {
    for (std::size_t j = 0; j < A; ++j) {
      grid[i * A + j] = obj(radii[i], static_cast<double>(j) * dtheta).value;
    }
  });

  std::size_t singular = 0;
  std::vector<std::size_t> cells;
  cells.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (std::isfinite(grid[k])) {
      cells.push_back(k);
    } else {
      ++singular;
    }
  }
  if (static_cast<double>(singular) > kUnreliableFraction * static_cast<double>(grid.size())) {
    throw SearchUnreliable("hyperbolic_norm: " + std::to_string(singular) + " of " +
                           std::to_string(grid.size()) + " grid points are singular");
  }
  if (cells.empty()) throw SearchUnreliable("hyperbolic_norm: no regular grid point");

  const auto cell_before = [&](std::size_t a, std::size_t b) {
    if (grid[a] != grid[b]) return grid[a] > grid[b];
    return a < b;  // row-major index order is (r, theta) order
  };
  const auto local_max = [&](std::size_t k) {
    const std::size_t i = k / A;
    const std::size_t j = k % A;
    for (std::size_t di = (i > 0 ? i - 1 : i); di <= std::min(i + 1, R - 1); ++di) {
      for (std::size_t dj : {(j + A - 1) % A, j, (j + 1) % A}) {
        const std::size_t n = di * A + dj;
        if (n != k && std::isfinite(grid[n]) && cell_before(n, k)) return false;
      }
    }
    return true;
  };
  std::sort(cells.begin(), cells.end(), cell_before);
  const std::size_t nstarts = std::min<std::size_t>(static_cast<std::size_t>(std::max(opt.starts, 0)),
                                                    cells.size());
  std::vector<std::size_t> starts;
  for (std::size_t k : cells) {
    if (starts.size() == nstarts) break;
    if (local_max(k)) starts.push_back(k);
  }
  for (std::size_t k : cells) {
    if (starts.size() == nstarts) break;
    if (std::find(starts.begin(), starts.end(), k) == starts.end()) starts.push_back(k);
  }

  Sample best{grid[cells[0]], radii[cells[0] / A], static_cast<double>(cells[0] % A) * dtheta};

  std::vector<Refined> refined(nstarts);
  parallel_for(nstarts, opt.workers, [&](std::size_t s) {
    const std::size_t i = starts[s] / A;
    const std::size_t j = starts[s] % A;
    const double spacing = i + 1 < R ? radii[i + 1] - radii[i] : radii[i] - radii[i - 1];
    const double dr = i + 1 < R ? 0.5 * spacing : -0.5 * spacing;
    refined[s] = nelder_mead(obj, radii[i], static_cast<double>(j) * dtheta, dr, 0.5 * dtheta,
                             opt.max_iterations);
  });

  NormEstimate out;
  out.radial = opt.radial;
  out.angular = opt.angular;
  for (const auto& r : refined) {
    out.refinement_iterations += r.iterations;
    if (better(r.best, best)) best = r.best;
  }

  const double interior = best.value;
  const double theta_star = best.theta;
  std::array<double, 4> h{};
  std::array<double, 4> v{};
  bool finite = true;
  for (std::size_t k = 0; k < kBoundaryOffsets.size(); ++k) {
    h[k] = kBoundaryOffsets[k];
    const double r = 1.0 - h[k];
    Sample node = golden_section(obj, r, theta_star - dtheta, theta_star + dtheta,
                                 1e-6 * h[k]);
    const Sample centre = obj(r, theta_star);
    if (better(centre, node)) node = centre;
    v[k] = node.value;
    if (!std::isfinite(v[k])) finite = false;
    if (better(node, best)) best = node;
  }

  out.certified_lower = best.value;
  out.argmax = {best.r, best.theta};
  out.value = best.value;
  if (finite) {
    bool rising = true;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      if (v[k + 1] < v[k] - 1e-12 * std::max(1.0, std::abs(v[k]))) rising = false;
    }
    const double limit = neville_at_zero(h, v);
    if (rising && limit >= out.certified_lower && limit >= interior) {
      out.boundary_attained = true;
      out.extrapolated = limit;
      out.value = limit;
    }
  }
  return out;
}

}  // namespace schwarz
