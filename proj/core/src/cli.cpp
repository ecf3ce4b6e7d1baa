#include "schwarz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "schwarz/commands.hpp"
#include "schwarz/error.hpp"

namespace schwarz {
namespace {

void parse_grid(const std::string& text, RunConfig& cfg) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const int r = std::stoi(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const std::string rest = text.substr(x + 1);
    const int a = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (r < 2 || a < 1) throw std::invalid_argument(text);
    cfg.grid_radial = r;
    cfg.grid_angular = a;
  } catch (const std::logic_error&) {
    throw InvalidArgument("--grid expects RxA with R >= 2 and A >= 1, got \"" + text + "\"");
  }
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& gallery, std::string& spec,
                std::string& grid) {
  sub->add_option("--gallery", gallery, "Gallery member name");
  sub->add_option("--spec", spec, "JSON function descriptor");
  sub->add_option("--c", cfg.c, "Class parameter in (0, 3]");
  sub->add_option("--which", cfg.which, "pre_schwarzian, schwarzian or both");
  sub->add_option("--seed", cfg.seed, "Base seed for random members");
  sub->add_option("--samples", cfg.samples, "Sample count");
  sub->add_option("--grid", grid, "Norm search grid RxA");
  sub->add_option("--random", cfg.random, "Number of seeded random members per class");
  sub->add_option("--theta", cfg.theta, "Ray angle in radians");
  sub->add_option("--workers", cfg.workers, "Worker threads (0: all cores)");
  sub->add_option("--out", cfg.output_path, "Write output to PATH");
  sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_flag("--timing", cfg.timing, "Record wall time in the report");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pre-Schwarzian and Schwarzian norms on the unit disk", "schwarz"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  RunConfig cfg;
  std::string gallery, spec, grid;
  const std::pair<const char*, const char*> commands[] = {
      {"norm", "Hyperbolic norms of P_f and S_f"},
      {"classify", "Sampled membership in F(c)"},
      {"verify", "Run one bound verifier, or all of them"},
      {"growth", "Growth and distortion bound table"},
      {"profile", "Weighted modulus along a ray"},
      {"random-suite", "All verifiers on seeded random members"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    add_common(sub, cfg, gallery, spec, grid);
    if (std::string(name) == "verify") {
      sub->add_option("theorem_id", cfg.theorem_id, "Theorem id or \"all\"");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!gallery.empty() && !spec.empty()) throw InvalidArgument("--gallery and --spec are exclusive");
    if (!spec.empty()) {
      cfg.function_spec = spec;
      cfg.spec_is_json = true;
    } else {
      cfg.function_spec = gallery;
    }
    if (!grid.empty()) parse_grid(grid, cfg);

    const CommandOutput result = run_command(cfg);
    if (cfg.output_path.empty()) {
      out << result.text;
    } else {
      std::ofstream file(cfg.output_path, std::ios::binary);
      if (!file) throw InvalidArgument("cannot open " + cfg.output_path + " for writing");
      file << result.text;
      if (!file) throw InvalidArgument("failed writing " + cfg.output_path);
    }
    return result.exit_code;
  } catch (const SearchUnreliable& e) {
    err << "schwarz: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const InvalidArgument& e) {
    err << "schwarz: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "schwarz: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "schwarz: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace schwarz
