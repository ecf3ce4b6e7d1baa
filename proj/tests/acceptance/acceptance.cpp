#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schwarz/cli.hpp"
#include "schwarz/error.hpp"
#include "schwarz/function.hpp"
#include "schwarz/norms.hpp"
#include "schwarz/quadrature.hpp"
#include "schwarz/sampling.hpp"
#include "schwarz/schwarzian.hpp"
#include "schwarz/theorems.hpp"

using namespace schwarz;

namespace {

const std::vector<double> kCSet = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) passed = false;
    notes.push_back(std::string(ok ? "  ok    " : "  FAIL  ") + what);
  }
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// 1. ||P_{f_c^*}|| = c, attained on the boundary.
Outcome criterion1() {
  Outcome o;
  for (double c : kCSet) {
    const NormEstimate e = hyperbolic_norm(make_extremal_fc_star(c), NormKind::pre_schwarzian);
    o.check(std::abs(e.value - c) <= 1e-4 && e.boundary_attained,
            fmt("c=%g: ||P|| = %.12g (expected %g), boundary_attained=%d", c, e.value, c,
                static_cast<int>(e.boundary_attained)));
  }
  return o;
}

// 2. ||S_{f_c^*}|| = c(4-c)/2.
Outcome criterion2() {
  Outcome o;
  for (double c : kCSet) {
    const NormEstimate e = hyperbolic_norm(make_extremal_fc_star(c), NormKind::schwarzian);
    const double expected = c * (4.0 - c) / 2.0;
    o.check(std::abs(e.value - expected) <= 1e-4,
            fmt("c=%g: ||S|| = %.12g (expected %.12g) at r=%.6g theta=%.6g", c, e.value, expected,
                e.argmax.r, e.argmax.theta));
  }
  return o;
}

// 3. Seeded random members against the norm bounds and the gamma bound.
Outcome criterion3() {
  Outcome o;
  for (double c : {1.0, 2.0, 3.0}) {
    int pre_fail = 0, s_fail = 0, g_fail = 0, g_skipped = 0;
    double pre_worst = INFINITY, s_worst = INFINITY, g_worst = INFINITY;
    for (int i = 0; i < 50; ++i) {
      const auto seed = static_cast<std::uint64_t>(i);
      const AnalyticFunction f0 = random_member(ClassSpec(c, true), seed, i % 9);
      const BoundReport p = verify_thm23(f0, c);
      const BoundReport s = verify_thm24(f0, c);
      pre_fail += !p.passed;
      s_fail += !s.passed;
      pre_worst = std::min(pre_worst, p.worst_margin);
      s_worst = std::min(s_worst, s.worst_margin);
      const AnalyticFunction f = random_member(ClassSpec(c), seed, 1 + i % 8);
      try {
        const BoundReport g = verify_thm25(f, c);
        g_fail += !g.passed;
        g_worst = std::min(g_worst, g.worst_margin);
      } catch (const GammaDegenerate&) {
        ++g_skipped;
      }
    }
    o.check(pre_fail == 0, fmt("c=%g: ||P|| <= c + 1e-6 for 50 F0 members: %d failures, worst margin %.6g", c,
                               pre_fail, pre_worst - kNormTolerance));
    o.check(s_fail == 0, fmt("c=%g: ||S|| <= c(4-c)/2 + 1e-6 for 50 F0 members: %d failures, worst margin %.6g",
                             c, s_fail, s_worst - kNormTolerance));
    o.check(g_fail == 0 && g_skipped == 0,
            fmt("c=%g: pointwise gamma bound for 50 F members: %d failures, %d degenerate, worst margin %.6g", c,
                g_fail, g_skipped, g_worst));
  }
  return o;
}

bool nonnegative_everywhere(double (*margin)(const AnalyticFunction&, double, Complex),
                            const AnalyticFunction& f, double c, const std::vector<Complex>& pts) {
  for (Complex z : pts) {
    try {
      if (margin(f, c, z) < -kInequalitySlack) return false;
    } catch (const DivisionBySingular&) {
      return false;
    }
  }
  return true;
}

// 4. Membership, (ii) and (iii) agree on members and manufactured non-members.
Outcome criterion4() {
  Outcome o;
  const std::vector<Complex> pts = disk_samples(1000);
  int disagreements = 0, members = 0, violated = 0;
  for (int i = 0; i < 200; ++i) {
    const double c = kCSet[static_cast<std::size_t>(i) % kCSet.size()];
    const AnalyticFunction m = random_member(ClassSpec(c, i % 2 == 1), 1000 + i, i % 9);
    for (const AnalyticFunction& f : {m, manufacture_nonmember(m, c)}) {
      const bool member = membership_status(f, c).status != MembershipStatus::violated;
      const bool ii = nonnegative_everywhere(&thm21_ii_margin, f, c, pts);
      const bool iii = nonnegative_everywhere(&thm21_iii_margin, f, c, pts);
      disagreements += (member != ii) || (member != iii);
      member ? ++members : ++violated;
    }
  }
  o.check(disagreements == 0, fmt("400 functions: %d disagreements (%d member verdicts, %d violated)",
                                  disagreements, members, violated));
  o.check(members == 200 && violated == 200, "each member verified and each manufactured function violated");
  return o;
}

// 5. Equality cases of f_2.
Outcome criterion5() {
  Outcome o;
  const AnalyticFunction f2 = make_extremal_fc(2.0);
  double worst_iii = 0.0, worst_phi = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const double r = 0.1 * k;
    const Complex p = preschwarzian_at(f2, r);
    worst_iii = std::max(worst_iii, std::abs(std::abs((1.0 - r * r) * p - 2.0 * r) - 2.0));
    worst_phi = std::max(worst_phi, std::abs(recover_phi(f2, 2.0, r) - 1.0));
  }
  for (Complex z : disk_samples(100)) worst_phi = std::max(worst_phi, std::abs(recover_phi(f2, 2.0, z) - 1.0));
  o.check(worst_iii <= 1e-10, fmt("|(1-r^2) P - 2r| = 2 for r = 0.1..0.9: max deviation %.3g", worst_iii));
  o.check(worst_phi <= 1e-10, fmt("recovered phi = 1: max deviation %.3g", worst_phi));
  return o;
}

// 6. Growth and distortion.
Outcome criterion6() {
  Outcome o;
  double up_dev = 0.0, down_dev = 0.0;
  for (double c : kCSet) {
    const AnalyticFunction up = make_extremal_fc_lambda(c, 1.0);
    const AnalyticFunction down = make_extremal_fc_lambda(c, -1.0);
    for (int k = 1; k <= 9; ++k) {
      const double r = 0.1 * k;
      const GrowthBounds b = growth_distortion_bounds(c, r);
      up_dev = std::max(up_dev, std::abs(std::abs(up.jet_at(r, 1)[1]) - b.distortion_high));
      down_dev = std::max(down_dev, std::abs(std::abs(down.jet_at(r, 1)[1]) - b.distortion_low));
    }
  }
  o.check(up_dev <= 1e-8, fmt("lambda=1 upper distortion equality: max deviation %.3g", up_dev));
  o.check(down_dev <= 1e-8, fmt("lambda=-1 lower distortion equality: max deviation %.3g", down_dev));

  double q_dev = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const double r = 0.1 * k;
    const GrowthBounds b = growth_distortion_bounds(2.0, r);
    q_dev = std::max({q_dev, std::abs(b.growth_low - std::atan(r)), std::abs(b.growth_high - std::atanh(r))});
  }
  o.check(q_dev <= 1e-10, fmt("c=2 growth bounds vs arctan/atanh: max deviation %.3g", q_dev));

  for (double c : {1.0, 2.0, 3.0}) {
    int fails = 0;
    double worst = INFINITY;
    for (int i = 0; i < 50; ++i) {
      const BoundReport r = verify_growth_distortion(random_member(ClassSpec(c, true), 2000 + i, i % 9), c);
      fails += !r.passed;
      worst = std::min(worst, r.worst_margin);
    }
    o.check(fails == 0, fmt("c=%g: 50 F0 members within all four bounds: %d failures, worst margin %.6g", c,
                            fails, worst));
  }
  return o;
}

AnalyticFunction random_mobius(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-2.0, 2.0), small(0.0, 0.4), angle(0.0, 2.0 * M_PI);
  const Complex a{u(g), u(g)}, b{u(g), u(g)};
  const Complex c = std::polar(small(g), angle(g));
  const Complex d = std::abs(a - b * c) < 0.1 ? 2.0 : 1.0;
  return make_mobius(a, b, c, d);
}

// 7. Structural identities.
Outcome criterion7() {
  Outcome o;
  std::mt19937_64 g(77);
  std::uniform_real_distribution<double> rad(0.0, 0.7), angle(0.0, 2.0 * M_PI);
  auto point = [&] { return std::polar(rad(g), angle(g)); };
  std::vector<AnalyticFunction> fs = {make_koebe(), make_extremal_fc(2.5), make_extremal_fc_star(1.5),
                                      make_extremal_fc_lambda(3.0, -1.0)};
  for (int i = 0; i < 6; ++i) fs.push_back(random_member(ClassSpec(0.5 + 0.5 * i, i % 2 == 0), 3000 + i, 1 + i));

  double mob = 0.0;
  for (int i = 0; i < 100; ++i) {
    const AnalyticFunction& f = fs[static_cast<std::size_t>(i) % fs.size()];
    const Complex z = point();
    AnalyticFunction t = random_mobius(g);
    const Complex fz = f(z);
    for (int tries = 0; tries < 50; ++tries) {
      const auto m = *t.mobius_coefficients();
      if (std::abs(m[2] * fz + m[3]) > 0.2) break;
      t = random_mobius(g);
    }
    const Complex lhs = schwarzian_from_jet(compose(t, f).jet_at(z, 3));
    mob = std::max(mob, std::abs(lhs - schwarzian_at(f, z)));
  }
  o.check(mob < 1e-9, fmt("Moebius invariance over 100 random pairs: max residual %.3g", mob));

  double chain = 0.0;
  std::uniform_real_distribution<double> shift(-0.2, 0.2), lin(0.2, 0.4), quad(-0.3, 0.3);
  for (int i = 0; i < 100; ++i) {
    const AnalyticFunction phi = make_polynomial({Complex{shift(g), shift(g)}, lin(g), quad(g)});
    chain = std::max(chain, composition_rule_residual(fs[static_cast<std::size_t>(i) % fs.size()], phi, point()));
  }
  o.check(chain < 1e-8, fmt("composition rule with (phi')^2 over 100 cases: max residual %.3g", chain));

  double ode = 0.0;
  for (const AnalyticFunction& f : fs) {
    for (int k = 0; k < 10; ++k) ode = std::max(ode, ode_residual(f, point()));
  }
  o.check(ode < 1e-8, fmt("u'' + (S/2) u over 10 functions x 10 points: max residual %.3g", ode));

  double psi = 0.0;
  bool inside = true;
  const std::vector<Complex> pts = disk_samples(1000);
  for (int k = 0; k < 4; ++k) {
    const SchurFunction phi = SchurFunction::random_blaschke(4000 + k, 1 + 2 * k, k % 2 == 0);
    for (Complex z : pts) {
      psi = std::max(psi, psi_identity_residual(phi, z));
      inside = inside && std::abs(psi_value(phi, z)) < 1.0;
    }
  }
  o.check(psi < 1e-10, fmt("Psi identity over 4 Schur functions x 1000 points: max residual %.3g", psi));
  o.check(inside, "|Psi| < 1 at every sample");
  return o;
}

// 8. Univalence thresholds.
Outcome criterion8() {
  Outcome o;
  const double koebe = hyperbolic_norm(make_koebe(), NormKind::schwarzian).value;
  o.check(std::abs(koebe - 6.0) <= 1e-4, fmt("Koebe ||S|| = %.12g", koebe));
  const double star = hyperbolic_norm(make_extremal_fc_star(2.0), NormKind::schwarzian).value;
  o.check(std::abs(star - 2.0) <= 1e-4, fmt("f_2^* ||S|| = %.12g", star));
  for (const char* name : {"identity", "mobius", "half_plane"}) {
    const double m = hyperbolic_norm(make_gallery(name), NormKind::schwarzian).value;
    o.check(m == 0.0, fmt("%s ||S|| = %.12g", name, m));
  }
  return o;
}

// 9. Brute-force injectivity for every gallery member that passes Nehari's test.
Outcome criterion9() {
  Outcome o;
  int sufficient = 0;
  std::vector<std::string> seen;
  for (const char* name : {"identity", "koebe", "half_plane", "mobius", "fc", "f2", "fc_star", "fc_lambda"}) {
    for (double c : kCSet) {
      const AnalyticFunction f = make_gallery(name, c);
      if (std::find(seen.begin(), seen.end(), f.label()) != seen.end()) continue;
      seen.push_back(f.label());
      const UnivalencePredicates p = univalence_predicates(f);
      if (!p.nehari_sufficient) continue;
      ++sufficient;
      o.check(univalence_bruteforce(f, 100, 0.98),
              fmt("%s: ||S|| = %.6g, injective on the grid", f.label().c_str(), p.schwarzian_norm.value));
    }
  }
  o.check(sufficient > 0, fmt("%d gallery members pass the sufficient test", sufficient));
  return o;
}

// 10. Byte-identical reports across worker counts.
Outcome criterion10() {
  Outcome o;
  auto run = [](const char* workers, int& code) {
    std::ostringstream out, err;
    code = run_cli({"verify", "all", "--c", "2", "--random", "50", "--seed", "7", "--workers", workers}, out, err);
    return out.str();
  };
  int code1 = -1, code2 = -1;
  const std::string a = run("1", code1);
  const std::string b = run("4", code2);
  o.check(!a.empty() && a == b, fmt("workers 1 vs 4: %zu and %zu bytes, identical=%d", a.size(), b.size(),
                                    static_cast<int>(a == b)));
  o.check(code1 == 0 && code2 == 0, fmt("exit codes %d and %d", code1, code2));
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria = {
    {"sharp pre-Schwarzian norm of f_c^*", criterion1},
    {"sharp Schwarzian norm of f_c^*", criterion2},
    {"random-member norm and gamma bound suites", criterion3},
    {"membership and margin tests agree", criterion4},
    {"equality cases of f_2", criterion5},
    {"growth and distortion", criterion6},
    {"structural identities", criterion7},
    {"univalence thresholds", criterion8},
    {"brute-force injectivity agrees with Nehari", criterion9},
    {"determinism across worker counts", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Criterion number (1-10); repeatable")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(kCriteria.size()); ++i) selected.push_back(i);
  }

  int failures = 0;
  for (int n : selected) {
    const auto& [title, run] = kCriteria[static_cast<std::size_t>(n - 1)];
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s\n", o.passed ? "PASS" : "FAIL", n, title.c_str());
    for (const auto& note : o.notes) std::printf("%s\n", note.c_str());
    std::fflush(stdout);
    failures += !o.passed;
  }
  return failures == 0 ? 0 : 1;
}
