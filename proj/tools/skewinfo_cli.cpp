// Command-line front end. Talks to the library only through skewinfo.h.

#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "skewinfo/skewinfo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSelfCheck = 4;

struct Options {
  std::string metric = "wyd";
  std::optional<std::string> alpha;
  std::optional<std::string> alpha_grid;
  std::optional<std::string> p;
  std::optional<std::string> theta_grid;
  std::optional<std::string> lambda_grid;
  std::string out;
  std::string format = "csv";
  bool literal_ad = false;
  std::string state;
  std::string observables;
  std::string channels;
  double inject_bound_offset = 0.0;
};

int exit_code_for(skw_status status) {
  switch (status) {
    case SKW_OK:
      return kExitOk;
    case SKW_ERR_VALIDATION:
    case SKW_ERR_NOT_HERMITIAN:
    case SKW_ERR_COMPLETENESS_VIOLATION:
    case SKW_ERR_NEGATIVE_EIGENVALUE:
    case SKW_ERR_NOT_UNITARY:
    case SKW_ERR_SINGULAR_STATE:
      return kExitValidation;
    case SKW_ERR_NO_CONVERGENCE:
    case SKW_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitConfig;
  }
}

int report(skw_status status) {
  std::fprintf(stderr, "error: %s\n", skw_last_error_message());
  return exit_code_for(status);
}

// Thrown out of the option conversion helpers; carries the status to report.
struct Failure {
  skw_status status;
};

void check(skw_status status) {
  if (status != SKW_OK) throw Failure{status};
}

double scalar(const std::string& text) {
  double v = 0.0;
  check(skw_parse_scalar(text.c_str(), &v));
  return v;
}

skw_grid grid(const std::string& text) {
  skw_grid g{};
  check(skw_parse_grid(text.c_str(), &g));
  return g;
}

int write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return std::fflush(stdout) == 0 ? kExitOk : kExitInternal;
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) {
    std::fprintf(stderr, "error: cannot open %s for writing\n", path.c_str());
    return kExitConfig;
  }
  const bool ok = std::fputs(text, f) >= 0;
  return std::fclose(f) == 0 && ok ? kExitOk : kExitInternal;
}

int run(skw_experiment experiment, const Options& opt) {
  skw_experiment_config config;
  skw_experiment_config_init(&config);
  config.experiment = experiment;
  config.metric = opt.metric.c_str();
  try {
    if (opt.alpha) {
      config.has_alpha = 1;
      config.alpha = scalar(*opt.alpha);
    }
    if (opt.alpha_grid) {
      config.has_alpha_grid = 1;
      config.alpha_grid = grid(*opt.alpha_grid);
    }
    if (opt.p) {
      config.has_p = 1;
      config.p = scalar(*opt.p);
    }
    if (opt.theta_grid) {
      config.has_theta_grid = 1;
      config.theta_grid = grid(*opt.theta_grid);
    }
    if (opt.lambda_grid) {
      config.has_lambda_grid = 1;
      config.lambda_grid = grid(*opt.lambda_grid);
    }
  } catch (const Failure& f) {
    return report(f.status);
  }
  config.literal_ad_kraus = opt.literal_ad ? 1 : 0;
  if (!opt.state.empty()) config.state_path = opt.state.c_str();
  if (!opt.observables.empty()) config.observables_path = opt.observables.c_str();
  if (!opt.channels.empty()) config.channels_path = opt.channels.c_str();
  config.inject_bound_offset = opt.inject_bound_offset;

  skw_table* table = nullptr;
  if (const skw_status s = skw_experiment_run(&config, &table); s != SKW_OK) return report(s);

  char* text = nullptr;
  const skw_format format = opt.format == "json" ? SKW_FORMAT_JSON : SKW_FORMAT_CSV;
  if (const skw_status s = skw_table_render(table, format, &text); s != SKW_OK) {
    skw_table_free(table);
    return report(s);
  }
  int code = write_output(opt.out, text);
  skw_string_free(text);

  if (code == kExitOk && !skw_table_self_check_passed(table)) {
    const size_t n = skw_table_violation_count(table);
    std::fprintf(stderr, "self-check failed: %zu bound ordering violation(s)\n", n);
    for (size_t i = 0; i < n && i < 20; ++i) std::fprintf(stderr, "  %s\n", skw_table_violation(table, i));
    code = kExitSelfCheck;
  }
  skw_table_free(table);
  return code;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--metric", opt.metric, "wy, sld, wyd (with --alpha) or wyd:<alpha>")->capture_default_str();
  cmd->add_option("--alpha", opt.alpha, "WYD exponent in (0, 1); default 1/3");
  cmd->add_option("--out", opt.out, "output file (default: stdout)");
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--inject-bound-offset", opt.inject_bound_offset)->group("");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum uncertainty lower bounds from metric-adjusted skew information"};
  app.require_subcommand(1);
  app.set_version_flag("--version", skw_version());
  Options opt;

  auto* ex1 = app.add_subcommand("example1", "qubit with Bloch radius sqrt(3)/2, Pauli observables");
  add_common(ex1, opt);
  ex1->add_option("--alpha-grid", opt.alpha_grid, "sweep alpha: start:stop:count");
  ex1->add_option("--theta-grid", opt.theta_grid, "start:stop:count, default 0:pi:50");

  auto* ex2 = app.add_subcommand("example2", "Gisin state, observables I (x) sigma_{x,y,z}");
  add_common(ex2, opt);
  ex2->add_option("--lambda-grid", opt.lambda_grid, "start:stop:count, default 0:1:20");
  ex2->add_option("--theta-grid", opt.theta_grid, "start:stop:count, default 0:2pi:20");

  auto* ex3 = app.add_subcommand("example3", "bit flip, phase flip and amplitude damping channels");
  add_common(ex3, opt);
  ex3->add_option("--p", opt.p, "channel parameter, default 0.7");
  ex3->add_option("--theta-grid", opt.theta_grid, "start:stop:count, default 0:pi:100");
  ex3->add_flag("--paper-literal-ad-kraus,--literal-ad-kraus", opt.literal_ad,
                "use K2 = sqrt(p)|1><1| for amplitude damping (completeness not checked)");

  auto* ex4 = app.add_subcommand("example4", "bit flip, phase flip and a pi/8 rotation");
  add_common(ex4, opt);
  ex4->add_option("--p", opt.p, "channel parameter, default 0.7");
  ex4->add_option("--theta-grid", opt.theta_grid, "start:stop:count, default 0:pi:100");

  auto* custom = app.add_subcommand("custom", "bounds for a state and observables or channels from JSON files");
  add_common(custom, opt);
  custom->add_option("--state", opt.state, "density matrix JSON")->required();
  auto* obs = custom->add_option("--observables", opt.observables, "observables JSON");
  auto* chans = custom->add_option("--channels", opt.channels, "channels JSON");
  obs->excludes(chans);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  skw_experiment experiment = SKW_EXAMPLE1;
  const std::string name = app.get_subcommands().front()->get_name();
  if (const skw_status s = skw_experiment_parse(name.c_str(), &experiment); s != SKW_OK) return report(s);
  return run(experiment, opt);
}
