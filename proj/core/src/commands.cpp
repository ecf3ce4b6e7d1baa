#include "schwarz/commands.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "schwarz/error.hpp"
#include "schwarz/function.hpp"
#include "schwarz/norms.hpp"
#include "schwarz/schur.hpp"
#include "schwarz/theorems.hpp"

namespace schwarz {
namespace {

constexpr int kBruteforceGrid = 100;
constexpr std::array<const char*, 11> kTheoremIds = {
    "thm2.1.ii", "thm2.1.iii", "thm2.2", "thm2.3",  "thm2.4",       "thm2.5",
    "lemmaA",    "psi",        "nehari", "becker", "ahlfors-weill"};

bool has_target(const RunConfig& c) { return !c.function_spec.empty(); }

AnalyticFunction resolve_function(const RunConfig& c) {
  if (c.spec_is_json) {
    Json j;
    try {
      j = Json::parse(c.function_spec);
    } catch (const Json::exception& e) {
      throw InvalidArgument(std::string("--spec is not valid JSON: ") + e.what());
    }
    return function_from_json(j);
  }
  return make_gallery(c.function_spec, c.c);
}

AnalyticFunction require_function(const RunConfig& c) {
  if (!has_target(c)) throw InvalidArgument(c.command + ": pass --gallery NAME or --spec JSON");
  return resolve_function(c);
}

SearchOptions search_options(const RunConfig& c) {
  SearchOptions o;
  o.radial = c.grid_radial;
  o.angular = c.grid_angular;
  o.workers = c.workers;
  return o;
}

Json target_json(const std::string& label, const Json& descriptor) {
  return Json{{"label", label}, {"descriptor", descriptor}};
}

Json target_json(const AnalyticFunction& f) { return target_json(f.label(), f.descriptor()); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct Target {
  AnalyticFunction f;
  bool in_f0 = false;
  bool gallery = false;
};

class Verifier {
 public:
  explicit Verifier(const RunConfig& config) : cfg_(config), opt_(search_options(config)) {
    report_.tool_version = tool_version();
    report_.config = config;
  }

  VerificationReport run(bool random_only) {
    const std::string& id = cfg_.theorem_id;
    bool known = id == "all";
    for (const char* k : kTheoremIds) known = known || id == k;
    if (!known) throw InvalidArgument("unknown theorem id: " + id);
    random_only_ = random_only;
    for (const char* k : kTheoremIds) {
      if (id == "all" || id == k) run_one(k);
    }
    return std::move(report_);
  }

 private:
  double c() const { return cfg_.c; }

  AnalyticFunction random_f(int i, bool f0) const {
    return random_member(ClassSpec(c(), f0), cfg_.seed + static_cast<std::uint64_t>(i), 1 + i % 8);
  }

  void add_random(std::vector<Target>& out, bool f0) const {
    for (int i = 0; i < cfg_.random; ++i) out.push_back({random_f(i, f0), f0, false});
  }

  std::vector<Target> user_or(std::vector<Target> defaults, bool f0) const {
    std::vector<Target> out;
    if (has_target(cfg_)) {
      const AnalyticFunction f = resolve_function(cfg_);
      const bool zero_a2 = f.class_a() && std::abs(f.jet_at(Complex{0.0, 0.0}, 2)[2]) < 1e-12;
      out.push_back({f, f.certified_member(c()) && zero_a2, true});
    } else if (!random_only_) {
      out = std::move(defaults);
    }
    add_random(out, f0);
    return out;
  }

  std::vector<Target> f_targets() const {
    return user_or({{make_extremal_fc(c()), false, true}, {make_identity(), true, true}}, false);
  }

  std::vector<Target> f0_targets() const {
    return user_or({{make_extremal_fc_star(c()), true, true},
                    {make_extremal_fc_lambda(c(), -1.0), true, true},
                    {make_identity(), true, true}},
                   true);
  }

  std::vector<Target> thm25_targets() const {
    return user_or({{make_identity(), true, true}, {make_extremal_fc_star(c()), true, true}}, false);
  }

  std::vector<Target> predicate_targets() const {
    std::vector<Target> d;
    for (const char* name : {"identity", "koebe", "half_plane", "mobius", "fc"}) {
      const AnalyticFunction f = make_gallery(name, c());
      d.push_back({f, std::string(name) == "identity", true});
    }
    d.push_back({make_extremal_fc_star(c()), true, true});
    d.push_back({make_extremal_fc_lambda(c(), -1.0), true, true});
    return user_or(std::move(d), true);
  }

  std::vector<SchurFunction> schur_targets() const {
    std::vector<SchurFunction> out;
    if (cfg_.random == 0 && !random_only_) {
      out.push_back(SchurFunction::constant(0.0));
      out.push_back(SchurFunction::blaschke({Complex{0.0, 0.0}}));
      out.push_back(SchurFunction::random_blaschke(cfg_.seed, 3));
    }
    for (int i = 0; i < cfg_.random; ++i) {
      out.push_back(SchurFunction::random_blaschke(cfg_.seed + static_cast<std::uint64_t>(i),
                                                   1 + i % 8, i % 2 == 0));
    }
    return out;
  }

  const NormEstimate& norm(const AnalyticFunction& f, NormKind kind) {
    const std::string key = std::string(to_string(kind)) + "|" + f.descriptor().dump();
    auto it = norms_.find(key);
    if (it == norms_.end()) it = norms_.emplace(key, hyperbolic_norm(f, kind, opt_)).first;
    return it->second;
  }

  bool injective(const AnalyticFunction& f) {
    const std::string key = f.descriptor().dump();
    auto it = injective_.find(key);
    if (it == injective_.end()) {
      it = injective_.emplace(key, univalence_bruteforce(f, kBruteforceGrid)).first;
    }
    return it->second;
  }

  void push_bound(const BoundReport& r, const Json& target, Json extra = Json::object()) {
    Json body = to_json(r);
    body["kind"] = "bound";
    body["target"] = target;
    for (auto it = extra.begin(); it != extra.end(); ++it) body[it.key()] = it.value();
    report_.results.push_back({std::move(body), r.passed});
  }

  void push_note(const char* kind, const char* id, const Json& target, const std::string& reason,
                 bool passed) {
    report_.results.push_back(
        {Json{{"kind", kind}, {"theorem_id", id}, {"target", target}, {"reason", reason}}, passed});
  }

  template <class Body>
  void guarded(const char* id, const Json& target, Body&& body) {
    try {
      body();
    } catch (const GammaDegenerate& e) {
      push_note("skipped", id, target, e.what(), true);
    } catch (const InvalidArgument&) {
      throw;
    } catch (const Error& e) {
      push_note("error", id, target, e.what(), false);
    }
  }

  void run_norm_bound(const char* id, const Target& t, NormKind kind, double bound) {
    guarded(id, target_json(t.f), [&] {
      const NormEstimate& e = norm(t.f, kind);
      MarginAccumulator acc(id);
      acc.add(bound + kNormTolerance - e.value, std::polar(e.argmax.r, e.argmax.theta));
      BoundReport r = acc.report();
      r.samples = static_cast<std::size_t>(e.radial) * static_cast<std::size_t>(e.angular);
      push_bound(r, target_json(t.f),
                 Json{{"bound", bound}, {"observed", e.value}, {"tolerance", kNormTolerance}});
    });
  }

  Json predicates_json(const UnivalencePredicates& u) const {
    return Json{{"nehari_necessary_ok", u.nehari_necessary_ok},
                {"nehari_sufficient", u.nehari_sufficient},
                {"becker_sufficient", u.becker_sufficient},
                {"ahlfors_weill_k", u.ahlfors_weill_k ? Json(*u.ahlfors_weill_k) : Json(nullptr)},
                {"pre_schwarzian_norm", u.pre_norm.value},
                {"schwarzian_norm", u.schwarzian_norm.value}};
  }

  // Implication "predicate => brute-force injective" as a 0 / -1 margin.
  double implication(bool premise, const Target& t) {
    if (!premise || !t.gallery) return 0.0;
    return injective(t.f) ? 0.0 : -1.0;
  }

  void run_predicate(const char* id, const Target& t) {
    guarded(id, target_json(t.f), [&] {
      const UnivalencePredicates u = univalence_predicates(norm(t.f, NormKind::pre_schwarzian),
                                                           norm(t.f, NormKind::schwarzian));
      const Complex at = std::polar(u.schwarzian_norm.argmax.r, u.schwarzian_norm.argmax.theta);
      MarginAccumulator acc(id);
      const std::string sid = id;
      if (sid == "nehari") {
        acc.add(6.0 + kNormTolerance - u.schwarzian_norm.value, at);
        acc.add(implication(u.nehari_sufficient, t), at);
      } else if (sid == "becker") {
        acc.add(implication(u.becker_sufficient, t), at);
        if (t.in_f0 && c() <= 1.0) {
          acc.add(1.0 + kNormTolerance - u.pre_norm.value,
                  std::polar(u.pre_norm.argmax.r, u.pre_norm.argmax.theta));
        }
      } else {
        acc.add(implication(u.ahlfors_weill_k.has_value(), t), at);
        if (t.in_f0 && c() < 2.0) {
          const double cap = 0.25 * c() * (4.0 - c()) + 0.5 * kNormTolerance;
          acc.add(u.ahlfors_weill_k ? cap - *u.ahlfors_weill_k : -1.0, at);
        }
      }
      push_bound(acc.report(), target_json(t.f), Json{{"predicates", predicates_json(u)}});
    });
  }

  void run_one(const std::string& id) {
    const std::size_t n = cfg_.samples;
    if (id == "thm2.1.ii" || id == "thm2.1.iii") {
      for (const auto& t : f_targets()) {
        guarded(id.c_str(), target_json(t.f), [&] {
          push_bound(id == "thm2.1.ii" ? verify_thm21_ii(t.f, c(), n) : verify_thm21_iii(t.f, c(), n),
                     target_json(t.f));
        });
      }
    } else if (id == "thm2.2") {
      for (const auto& t : f0_targets()) {
        guarded("thm2.2", target_json(t.f),
                [&] { push_bound(verify_growth_distortion(t.f, c(), n), target_json(t.f)); });
      }
    } else if (id == "thm2.3") {
      for (const auto& t : f0_targets()) run_norm_bound("thm2.3", t, NormKind::pre_schwarzian, c());
    } else if (id == "thm2.4") {
      for (const auto& t : f0_targets()) {
        run_norm_bound("thm2.4", t, NormKind::schwarzian, 0.5 * c() * (4.0 - c()));
      }
    } else if (id == "thm2.5") {
      for (const auto& t : thm25_targets()) {
        guarded("thm2.5", target_json(t.f), [&] {
          const double gamma = gamma_of(t.f, c());
          if (gamma >= kGammaCap) throw GammaDegenerate("gamma = " + format_number(gamma));
          const BoundReport r = verify_thm25(t.f, c(), norm(t.f, NormKind::schwarzian), n);
          push_bound(r, target_json(t.f),
                     Json{{"bound", thm25_bound(c(), gamma)}, {"gamma", gamma}});
        });
      }
    } else if (id == "lemmaA" || id == "psi") {
      for (const auto& phi : schur_targets()) {
        const Json target = target_json("schur", phi.to_json());
        guarded(id.c_str(), target, [&] {
          push_bound(id == "lemmaA" ? verify_lemmaA(phi, n) : verify_psi(phi, n), target);
        });
      }
    } else {
      for (const auto& t : predicate_targets()) run_predicate(id.c_str(), t);
    }
  }

  const RunConfig& cfg_;
  SearchOptions opt_;
  VerificationReport report_;
  bool random_only_ = false;
  std::map<std::string, NormEstimate> norms_;
  std::map<std::string, bool> injective_;
};

VerificationReport base_report(const RunConfig& config) {
  VerificationReport r;
  r.tool_version = tool_version();
  r.config = config;
  return r;
}

std::string render_verify_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "theorem_id,target,samples,worst_margin,worst_re,worst_im,passed\n";
  for (const auto& e : r.results) {
    const Json& b = e.body;
    out << csv_field(b.value("theorem_id", "")) << ','
        << csv_field(b.at("target").at("label").get<std::string>()) << ',';
    if (b.at("kind") == "bound") {
      out << b.at("samples").get<std::size_t>() << ','
          << format_number(b.at("worst_margin").get<double>()) << ','
          << format_number(b.at("worst_point").at("re").get<double>()) << ','
          << format_number(b.at("worst_point").at("im").get<double>()) << ','
          << (e.passed ? "true" : "false") << '\n';
    } else {
      out << ",,,," << b.at("kind").get<std::string>() << '\n';
    }
  }
  return out.str();
}

std::string render_norm_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "which,value,argmax_r,argmax_theta,boundary_attained,certified_lower,extrapolated\n";
  for (const auto& e : r.results) {
    const Json& b = e.body;
    out << b.at("which").get<std::string>() << ',' << format_number(b.at("value").get<double>())
        << ',' << format_number(b.at("argmax").at("r").get<double>()) << ','
        << format_number(b.at("argmax").at("theta").get<double>()) << ','
        << (b.at("boundary_attained").get<bool>() ? "true" : "false") << ','
        << format_number(b.at("certified_lower").get<double>()) << ','
        << (b.at("extrapolated").is_null() ? "" : format_number(b.at("extrapolated").get<double>()))
        << '\n';
  }
  return out.str();
}

std::string render_classify_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "status,margin,witness_re,witness_im\n";
  for (const auto& e : r.results) {
    const Json& b = e.body;
    out << b.at("status").get<std::string>() << ',' << format_number(b.at("margin").get<double>());
    if (b.at("witness").is_null()) {
      out << ",,\n";
    } else {
      const Complex w{b.at("witness").at("re").get<double>(), b.at("witness").at("im").get<double>()};
      out << ',' << format_number(w.real()) << ',' << format_number(w.imag()) << '\n';
    }
  }
  return out.str();
}

std::string resolved_format(const RunConfig& c, const char* fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "json" && f != "csv") throw InvalidArgument("unknown format: " + f);
  return f;
}

}  // namespace

VerificationReport cmd_norm(const RunConfig& config) {
  validate_class_parameter(config.c);
  const AnalyticFunction f = require_function(config);
  std::vector<NormKind> kinds;
  if (config.which.empty() || config.which == "both") {
    kinds = {NormKind::pre_schwarzian, NormKind::schwarzian};
  } else {
    kinds = {parse_norm_kind(config.which)};
  }
  VerificationReport r = base_report(config);
  for (NormKind k : kinds) {
    Json body = to_json(hyperbolic_norm(f, k, search_options(config)));
    body["kind"] = "norm";
    body["which"] = to_string(k);
    body["target"] = target_json(f);
    r.results.push_back({std::move(body), true});
  }
  return r;
}

VerificationReport cmd_classify(const RunConfig& config) {
  validate_class_parameter(config.c);
  const AnalyticFunction f = require_function(config);
  const MembershipVerdict v = membership_status(f, config.c, config.samples);
  Json body = to_json(v);
  body["kind"] = "membership";
  body["target"] = target_json(f);
  VerificationReport r = base_report(config);
  r.results.push_back({std::move(body), v.status != MembershipStatus::violated});
  return r;
}

VerificationReport cmd_verify(const RunConfig& config) {
  validate_class_parameter(config.c);
  if (config.random < 0) throw InvalidArgument("--random must be non-negative");
  return Verifier(config).run(false);
}

VerificationReport cmd_random_suite(const RunConfig& config) {
  validate_class_parameter(config.c);
  if (config.random < 1) throw InvalidArgument("random-suite: pass --random N with N >= 1");
  if (has_target(config)) throw InvalidArgument("random-suite takes no --gallery or --spec");
  return Verifier(config).run(true);
}

std::string cmd_growth(const RunConfig& config) {
  validate_class_parameter(config.c);
  if (config.grid_radial < 1) throw InvalidArgument("growth: radial grid must be positive");
  const std::string format = resolved_format(config, "csv");
  std::vector<std::pair<double, GrowthBounds>> rows;
  for (int k = 0; k < config.grid_radial; ++k) {
    const double r = static_cast<double>(k) / config.grid_radial;
    rows.emplace_back(r, growth_distortion_bounds(config.c, r));
  }
  if (format == "csv") {
    std::ostringstream out;
    out << "r,distortion_low,distortion_high,growth_low,growth_high\n";
    for (const auto& [r, b] : rows) {
      out << format_number(r) << ',' << format_number(b.distortion_low) << ','
          << format_number(b.distortion_high) << ',' << format_number(b.growth_low) << ','
          << format_number(b.growth_high) << '\n';
    }
    return out.str();
  }
  Json table = Json::array();
  for (const auto& [r, b] : rows) {
    table.push_back(Json{{"r", r},
                         {"distortion_low", b.distortion_low},
                         {"distortion_high", b.distortion_high},
                         {"growth_low", b.growth_low},
                         {"growth_high", b.growth_high}});
  }
  VerificationReport rep = base_report(config);
  rep.results.push_back({Json{{"kind", "growth_table"}, {"rows", std::move(table)}}, true});
  return format_json(to_json(rep));
}

std::string cmd_profile(const RunConfig& config) {
  validate_class_parameter(config.c);
  const AnalyticFunction f = require_function(config);
  const std::string format = resolved_format(config, "csv");
  const NormKind kind = config.which.empty() ? NormKind::schwarzian : parse_norm_kind(config.which);
  const auto points = radial_profile(f, config.theta, static_cast<int>(config.samples), kind);
  if (format == "csv") {
    std::ostringstream out;
    out << "r,value\n";
    for (const auto& p : points) {
      out << format_number(p.r) << ',' << (p.value ? format_number(*p.value) : "") << '\n';
    }
    return out.str();
  }
  Json rows = Json::array();
  for (const auto& p : points) {
    rows.push_back(Json{{"r", p.r}, {"value", p.value ? Json(*p.value) : Json(nullptr)}});
  }
  VerificationReport rep = base_report(config);
  rep.results.push_back({Json{{"kind", "profile"},
                              {"which", to_string(kind)},
                              {"theta", config.theta},
                              {"target", target_json(f)},
                              {"rows", std::move(rows)}},
                         true});
  return format_json(to_json(rep));
}

CommandOutput run_command(const RunConfig& requested) {
  RunConfig config = requested;
  const bool table = config.command == "growth" || config.command == "profile";
  config.format = resolved_format(config, table ? "csv" : "json");
  const auto start = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    if (!config.timing) return 0LL;
    return static_cast<long long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - start)
                                      .count());
  };
  const std::string& cmd = config.command;
  if (cmd == "growth") return {cmd_growth(config), kExitPass};
  if (cmd == "profile") return {cmd_profile(config), kExitPass};

  VerificationReport r;
  std::string (*csv)(const VerificationReport&) = render_verify_csv;
  if (cmd == "norm") {
    r = cmd_norm(config);
    csv = render_norm_csv;
  } else if (cmd == "classify") {
    r = cmd_classify(config);
    csv = render_classify_csv;
  } else if (cmd == "verify") {
    r = cmd_verify(config);
  } else if (cmd == "random-suite") {
    r = cmd_random_suite(config);
  } else {
    throw InvalidArgument("unknown command: " + cmd);
  }
  r.wall_time_ms = elapsed();

  CommandOutput out;
  out.text = config.format == "csv" ? csv(r) : format_json(to_json(r));
  const bool gate = cmd == "verify" || cmd == "random-suite";
  out.exit_code = gate && !r.overall_pass() ? kExitNumerical : kExitPass;
  return out;
}

}  // namespace schwarz
