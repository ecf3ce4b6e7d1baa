#include "schwarz/quadrature.hpp"

#include <cmath>

namespace schwarz {
namespace {

struct Panel {
  double a, fa, m, fm, b, fb, whole;
};

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, const Panel& p, double tol, int depth,
               double& err, int& evals) {
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  evals += 2;
  const double left = simpson(p.a, p.fa, flm, p.m, p.fm);
  const double right = simpson(p.m, p.fm, frm, p.b, p.fb);
  const double delta = left + right - p.whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    err += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  const Panel lp{p.a, p.fa, lm, flm, p.m, p.fm, left};
  const Panel rp{p.m, p.fm, rm, frm, p.b, p.fb, right};
  return recurse(f, lp, 0.5 * tol, depth - 1, err, evals) +
         recurse(f, rp, 0.5 * tol, depth - 1, err, evals);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& integrand, double a,
                                  double b, double tolerance, int max_depth) {
  if (a == b) return {0.0, 0.0, 0};
  const double m = 0.5 * (a + b);
  const double fa = integrand(a);
  const double fm = integrand(m);
  const double fb = integrand(b);
  const Panel root{a, fa, m, fm, b, fb, simpson(a, fa, fm, b, fb)};
  double err = 0.0;
  int evals = 3;
  const double value = recurse(integrand, root, tolerance, max_depth, err, evals);
  return {value, err, evals};
}

}  // namespace schwarz
