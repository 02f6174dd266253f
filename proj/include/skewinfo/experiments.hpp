#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skewinfo/quantum_objects.hpp"

namespace skewinfo {

/// Inclusive linear grid: `count` points from start to stop.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 2;

  std::vector<double> points() const;
};

/// Parses a scalar such as "0.5", "1/3", "pi", "2pi", "2*pi", "pi/4" or "-pi/2".
/// Throws ConfigInvalid.
double parse_scalar(std::string_view text);

/// Parses "start:stop:count" with scalars as in parse_scalar. Throws
/// ConfigInvalid, including for count < 2.
Grid parse_grid(std::string_view text);

enum class ExperimentKind { example1, example2, example3, example4, custom };
enum class OutputFormat { csv, json };

std::optional<ExperimentKind> parse_experiment_kind(std::string_view name);
std::string_view to_string(ExperimentKind kind);

/// One CLI invocation. Unset optionals take the per-experiment defaults
/// applied by resolve_defaults().
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::example1;
  /// "wy", "sld", "wyd" (exponent from alpha / alpha_grid) or "wyd:<alpha>".
  std::string metric = "wyd";
  std::optional<double> alpha;
  /// Example 1 only: sweep alpha as well as theta.
  std::optional<Grid> alpha_grid;
  std::optional<double> p;
  std::optional<Grid> theta_grid;
  std::optional<Grid> lambda_grid;
  OutputFormat format = OutputFormat::csv;
  AmplitudeDampingForm ad_form = AmplitudeDampingForm::standard;

  // custom
  std::string state_path;
  std::string observables_path;
  std::string channels_path;

  /// Added to lb4 / clb4 before the self-check. Zero except in fault-injection
  /// tests of the self-check itself.
  double inject_bound_offset = 0.0;
};

/// Fills in the defaults: alpha = 1/3 (also for custom),
/// p = 0.7, theta over [0, pi] (50 points for example1, 100 for examples
/// 3 and 4), and a 20 x 20 (lambda, theta) grid over [0, 1] x [0, 2 pi] for
/// example2. Then validates; throws ConfigInvalid.
ExperimentConfig resolve_defaults(ExperimentConfig config);

using Cell = std::variant<std::monostate, double, std::string>;

/// Result table plus the rows that failed the bound self-check.
struct Table {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> violations;

  bool self_check_passed() const noexcept { return violations.empty(); }

  /// "# schema: <schema>" line, header, then one line per row. Numbers use
  /// 12 significant digits; empty cells are blank.
  std::string to_csv() const;
  /// {"schema": ..., "columns": [...], "rows": [{column: value, ...}, ...]}
  /// with the same numeric rounding as the CSV.
  std::string to_json() const;
  std::string render(OutputFormat format) const;
};

/// printf("%.12g") with negative zero printed as 0.
std::string format_number(double value);

Table run_example1(const ExperimentConfig& config);
Table run_example2(const ExperimentConfig& config);
Table run_example3(const ExperimentConfig& config);
Table run_example4(const ExperimentConfig& config);
Table run_custom(const ExperimentConfig& config);

/// Applies resolve_defaults and dispatches on config.experiment.
Table run_experiment(const ExperimentConfig& config);

}  // namespace skewinfo
