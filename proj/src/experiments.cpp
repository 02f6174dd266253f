#include "skewinfo/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>

#include "json.hpp"
#include "skewinfo/channel_bounds.hpp"
#include "skewinfo/errors.hpp"
#include "skewinfo/io.hpp"
#include "skewinfo/metric.hpp"
#include "skewinfo/observable_bounds.hpp"

namespace skewinfo {

namespace {

constexpr std::string_view kSchemaVersion = "v1";

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string& text, std::string_view whole) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    fail(ErrorCode::ConfigInvalid, "cannot parse number '" + std::string(whole) + "'");
  }
  return v;
}

std::string schema_tag(std::string_view name) {
  return "skewinfo." + std::string(name) + "." + std::string(kSchemaVersion);
}

// Metric and alpha for one grid point of an example. Non-WYD metrics carry
// no alpha.
struct MetricPoint {
  MetricSpec metric;
  std::optional<double> alpha;
};

std::vector<MetricPoint> metric_points(const ExperimentConfig& config) {
  std::vector<MetricPoint> out;
  if (config.metric == "wyd") {
    const std::vector<double> alphas =
        config.alpha_grid ? config.alpha_grid->points() : std::vector<double>{*config.alpha};
    for (double a : alphas) out.push_back({wyd_metric(WydParameter(a)), a});
    return out;
  }
  MetricSpec metric = parse_metric(config.metric);
  std::optional<double> alpha;
  if (is_wyd_name(config.metric)) alpha = std::strtod(config.metric.c_str() + 4, nullptr);
  out.push_back({std::move(metric), alpha});
  return out;
}

MetricSpec single_metric(const ExperimentConfig& config) {
  auto points = metric_points(config);
  if (points.size() != 1) fail(ErrorCode::ConfigInvalid, "this experiment takes a single alpha");
  return points.front().metric;
}

Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell(*v) : Cell(std::monostate{});
}

class SelfCheck {
 public:
  explicit SelfCheck(Table& table) : table_(table) {}

  // Records a violation unless big >= small - tolerance.
  void at_least(std::size_t row, std::string_view big_name, double big, std::string_view small_name,
                double small) {
    if (big >= small - kBoundTol) return;
    table_.violations.push_back("row " + std::to_string(row + 1) + ": " + std::string(big_name) +
                                " = " + format_number(big) + " < " + std::string(small_name) + " = " +
                                format_number(small));
  }

 private:
  Table& table_;
};

std::vector<Observable> qubit_paulis() {
  return {pauli(PauliAxis::x), pauli(PauliAxis::y), pauli(PauliAxis::z)};
}

DensityMatrix example_qubit(double theta) {
  const double r = std::sqrt(3.0) / 2.0;
  return bloch_qubit(r * std::cos(theta), r * std::sin(theta), 0.0);
}

void check_observable_report(SelfCheck& check, std::size_t row, const ObservableBoundReport& r) {
  if (r.lb1_raw) check.at_least(row, "sum", r.sum, "lb1", *r.lb1_raw);
  check.at_least(row, "sum", r.sum, "lb2", r.lb2);
  check.at_least(row, "sum", r.sum, "lb3", r.lb3);
  check.at_least(row, "sum", r.sum, "lb4", r.lb4);
  check.at_least(row, "lb4", r.lb4, "lb2", r.lb2);
}

void check_channel_report(SelfCheck& check, std::size_t row, const ChannelBoundReport& r) {
  if (r.clb1) check.at_least(row, "sum", r.sum, "clb1", r.clb1->value);
  check.at_least(row, "sum", r.sum, "clb2", r.clb2.value);
  check.at_least(row, "sum", r.sum, "clb3", r.clb3.value);
  check.at_least(row, "sum", r.sum, "clb4", r.clb4.value);
  // Row by row the clb4 expression dominates the clb2 one, so the maxima do too.
  check.at_least(row, "clb4", r.clb4.value, "clb2", r.clb2.value);
}

Table channel_table(const ExperimentConfig& config, std::string_view name,
                    const std::vector<QuantumChannel>& channels) {
  const MetricSpec metric = single_metric(config);
  Table table;
  table.schema = schema_tag(name);
  table.columns = {"theta", "sum", "clb1", "clb2", "clb3", "clb4",
                   "case_clb1", "case_clb2", "case_clb3", "case_clb4", "kraus_count"};
  if (config.experiment == ExperimentKind::example3) {
    table.columns.push_back("ad_kraus");
  }
  const auto padded = pad_kraus(channels);
  SelfCheck check(table);
  const auto thetas = config.theta_grid->points();
  for (std::size_t row = 0; row < thetas.size(); ++row) {
    const DensityMatrix rho = example_qubit(thetas[row]);
    ChannelBoundReport r = channel_bounds(metric, rho, padded);
    r.clb4.value += config.inject_bound_offset;
    check_channel_report(check, row, r);
    std::vector<Cell> cells = {thetas[row],
                               r.sum,
                               r.clb1->value,
                               r.clb2.value,
                               r.clb3.value,
                               r.clb4.value,
                               case_label(r.clb1->argmax, r.clb1->index),
                               case_label(r.clb2.argmax, r.clb2.index),
                               case_label(r.clb3.argmax, r.clb3.index),
                               case_label(r.clb4.argmax, r.clb4.index),
                               double(r.kraus_count)};
    if (config.experiment == ExperimentKind::example3) {
      cells.emplace_back(std::string(config.ad_form == AmplitudeDampingForm::standard ? "standard" : "literal"));
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

void require(bool ok, const std::string& message) {
  if (!ok) fail(ErrorCode::ConfigInvalid, message);
}

void require_grid(const std::optional<Grid>& grid, const char* name) {
  if (grid) require(grid->count >= 2, std::string(name) + " grid needs at least 2 points");
}

}  // namespace

std::vector<double> Grid::points() const {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = k + 1 == count ? stop : start + (stop - start) * double(k) / double(count - 1);
  }
  return out;
}

double parse_scalar(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s += ch;
  }
  double divisor = 1.0;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    divisor = parse_number(s.substr(slash + 1), text);
    if (divisor == 0.0) fail(ErrorCode::ConfigInvalid, "division by zero in '" + std::string(text) + "'");
    s.resize(slash);
  }
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return parse_number(s, text) / divisor;
  if (pi_pos + 2 != s.size()) fail(ErrorCode::ConfigInvalid, "cannot parse '" + std::string(text) + "'");

  std::string prefix = s.substr(0, pi_pos);
  if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
  double scale = 1.0;
  if (prefix == "-") {
    scale = -1.0;
  } else if (!prefix.empty() && prefix != "+") {
    scale = parse_number(prefix, text);
  }
  return scale * std::numbers::pi / divisor;
}

Grid parse_grid(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
    fail(ErrorCode::ConfigInvalid, "grid '" + std::string(text) + "' is not start:stop:count");
  }
  Grid g;
  g.start = parse_scalar(text.substr(0, first));
  g.stop = parse_scalar(text.substr(first + 1, second - first - 1));
  const std::string count = trim(text.substr(second + 1));
  char* end = nullptr;
  const long long n = std::strtoll(count.c_str(), &end, 10);
  if (count.empty() || end != count.c_str() + count.size()) {
    fail(ErrorCode::ConfigInvalid, "grid count '" + count + "' is not an integer");
  }
  if (n < 2) fail(ErrorCode::ConfigInvalid, "grid '" + std::string(text) + "' needs count >= 2");
  g.count = static_cast<std::size_t>(n);
  return g;
}

std::optional<ExperimentKind> parse_experiment_kind(std::string_view name) {
  if (name == "example1") return ExperimentKind::example1;
  if (name == "example2") return ExperimentKind::example2;
  if (name == "example3") return ExperimentKind::example3;
  if (name == "example4") return ExperimentKind::example4;
  if (name == "custom") return ExperimentKind::custom;
  return std::nullopt;
}

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::example1: return "example1";
    case ExperimentKind::example2: return "example2";
    case ExperimentKind::example3: return "example3";
    case ExperimentKind::example4: return "example4";
    case ExperimentKind::custom: return "custom";
  }
  return "unknown";
}

ExperimentConfig resolve_defaults(ExperimentConfig config) {
  const double pi = std::numbers::pi;
  const bool custom = config.experiment == ExperimentKind::custom;
  const bool bare_wyd = config.metric == "wyd";

  if (bare_wyd && !config.alpha && !config.alpha_grid) config.alpha = 1.0 / 3.0;
  switch (config.experiment) {
    case ExperimentKind::example1:
      if (!config.theta_grid) config.theta_grid = Grid{0.0, pi, 50};
      break;
    case ExperimentKind::example2:
      if (!config.lambda_grid) config.lambda_grid = Grid{0.0, 1.0, 20};
      if (!config.theta_grid) config.theta_grid = Grid{0.0, 2.0 * pi, 20};
      break;
    case ExperimentKind::example3:
    case ExperimentKind::example4:
      if (!config.theta_grid) config.theta_grid = Grid{0.0, pi, 100};
      if (!config.p) config.p = 0.7;
      break;
    case ExperimentKind::custom:
      break;
  }

  require_grid(config.theta_grid, "theta");
  require_grid(config.lambda_grid, "lambda");
  require_grid(config.alpha_grid, "alpha");
  require(!(config.alpha && config.alpha_grid), "give either --alpha or --alpha-grid, not both");
  require(!config.alpha_grid || config.experiment == ExperimentKind::example1,
          "--alpha-grid applies to example1 only");
  require(!config.lambda_grid || config.experiment == ExperimentKind::example2,
          "--lambda-grid applies to example2 only");
  require(!config.p || config.experiment == ExperimentKind::example3 ||
              config.experiment == ExperimentKind::example4,
          "--p applies to example3 and example4 only");
  if (bare_wyd) {
    require(config.alpha || config.alpha_grid, "metric 'wyd' needs --alpha");
    if (config.alpha) WydParameter{*config.alpha};
    if (config.alpha_grid) {
      WydParameter{config.alpha_grid->start};
      WydParameter{config.alpha_grid->stop};
    }
  } else {
    require(!config.alpha && !config.alpha_grid,
            "--alpha only applies to --metric wyd; use wyd:<alpha> or drop --alpha");
    parse_metric(config.metric);
  }
  if (custom) {
    require(!config.state_path.empty(), "custom needs --state");
    require(config.observables_path.empty() != config.channels_path.empty(),
            "custom needs exactly one of --observables or --channels");
    require(!config.theta_grid, "--theta-grid does not apply to custom");
  }
  return config;
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string Table::to_csv() const {
  std::string out = "# schema: " + schema + "\n";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c > 0) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      if (const auto* d = std::get_if<double>(&row[c])) {
        out += format_number(*d);
      } else if (const auto* s = std::get_if<std::string>(&row[c])) {
        out += *s;
      }
    }
    out += '\n';
  }
  return out;
}

std::string Table::to_json() const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = schema;
  doc["columns"] = columns;
  ordered_json rows_json = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json record = ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (const auto* d = std::get_if<double>(&row[c])) {
        const double v = std::strtod(format_number(*d).c_str(), nullptr);
        if (v == std::floor(v) && std::abs(v) < 1e15) {
          record[columns[c]] = static_cast<long long>(v);
        } else {
          record[columns[c]] = v;
        }
      } else if (const auto* s = std::get_if<std::string>(&row[c])) {
        record[columns[c]] = *s;
      } else {
        record[columns[c]] = nullptr;
      }
    }
    rows_json.push_back(std::move(record));
  }
  doc["rows"] = std::move(rows_json);
  return doc.dump(2) + "\n";
}

std::string Table::render(OutputFormat format) const {
  return format == OutputFormat::csv ? to_csv() : to_json();
}

Table run_example1(const ExperimentConfig& config) {
  Table table;
  table.schema = schema_tag("example1");
  table.columns = {"theta", "alpha", "sum", "lb1", "lb2", "lb3", "lb4", "lb4_minus_lb2"};
  const auto observables = qubit_paulis();
  const auto metrics = metric_points(config);
  SelfCheck check(table);
  for (double theta : config.theta_grid->points()) {
    const DensityMatrix rho = example_qubit(theta);
    for (const auto& point : metrics) {
      ObservableBoundReport r = observable_bounds(point.metric, rho, observables);
      r.lb4 += config.inject_bound_offset;
      check_observable_report(check, table.rows.size(), r);
      table.rows.push_back({theta, optional_cell(point.alpha), r.sum, *r.lb1_raw, r.lb2, r.lb3, r.lb4,
                            r.lb4 - r.lb2});
    }
  }
  return table;
}

Table run_example2(const ExperimentConfig& config) {
  Table table;
  table.schema = schema_tag("example2");
  table.columns = {"lambda", "theta", "sum", "lb1", "lb2", "lb3", "lb4"};
  const MetricSpec metric = single_metric(config);
  const std::vector<Observable> observables = {lifted_pauli(PauliAxis::x, TensorSide::right),
                                               lifted_pauli(PauliAxis::y, TensorSide::right),
                                               lifted_pauli(PauliAxis::z, TensorSide::right)};
  SelfCheck check(table);
  for (double lambda : config.lambda_grid->points()) {
    for (double theta : config.theta_grid->points()) {
      const DensityMatrix rho = gisin_state(lambda, theta);
      ObservableBoundReport r = observable_bounds(metric, rho, observables);
      r.lb4 += config.inject_bound_offset;
      const std::size_t row = table.rows.size();
      check_observable_report(check, row, r);
      check.at_least(row, "lb3", r.lb3, "lb1", *r.lb1_raw);
      table.rows.push_back({lambda, theta, r.sum, *r.lb1_raw, r.lb2, r.lb3, r.lb4});
    }
  }
  return table;
}

Table run_example3(const ExperimentConfig& config) {
  const double p = *config.p;
  return channel_table(config, "example3",
                       {bit_flip_channel(p), phase_flip_channel(p), amplitude_damping_channel(p, config.ad_form)});
}

Table run_example4(const ExperimentConfig& config) {
  const double p = *config.p;
  return channel_table(config, "example4",
                       {bit_flip_channel(p), phase_flip_channel(p),
                        unitary_channel(rotation_unitary(std::numbers::pi / 8.0))});
}

Table run_custom(const ExperimentConfig& config) {
  const MetricSpec metric = single_metric(config);
  const DensityMatrix rho = parse_state(read_text_file(config.state_path), config.state_path);
  Table table;
  SelfCheck check(table);
  if (!config.observables_path.empty()) {
    const auto observables =
        parse_observables(read_text_file(config.observables_path), config.observables_path);
    if (observables.front().dim() != rho.dim()) {
      fail(ErrorCode::ParseError, config.observables_path + ": observables are " +
                                      std::to_string(observables.front().dim()) +
                                      "-dimensional but the state is " + std::to_string(rho.dim()) +
                                      "-dimensional");
    }
    table.schema = schema_tag("custom_observables");
    table.columns = {"metric", "n", "sum", "lb1", "lb2", "lb3", "lb4"};
    ObservableBoundReport r = observable_bounds(metric, rho, observables);
    r.lb4 += config.inject_bound_offset;
    check_observable_report(check, 0, r);
    table.rows.push_back({r.metric_name, double(r.n), r.sum, optional_cell(r.lb1_raw), r.lb2, r.lb3, r.lb4});
    return table;
  }
  const auto channels = parse_channels(read_text_file(config.channels_path), config.channels_path);
  if (channels.front().dim() != rho.dim()) {
    fail(ErrorCode::ParseError, config.channels_path + ": channels act on dimension " +
                                    std::to_string(channels.front().dim()) + " but the state is " +
                                    std::to_string(rho.dim()) + "-dimensional");
  }
  const auto padded = pad_kraus(channels);
  table.schema = schema_tag("custom_channels");
  table.columns = {"metric", "channels", "kraus_count", "sum", "clb1", "clb2", "clb3", "clb4",
                   "argmax_clb1", "argmax_clb2", "argmax_clb3", "argmax_clb4"};
  ChannelBoundReport r = channel_bounds(metric, rho, padded);
  r.clb4.value += config.inject_bound_offset;
  check_channel_report(check, 0, r);
  table.rows.push_back({r.metric_name, double(r.channel_count), double(r.kraus_count), r.sum,
                        r.clb1 ? Cell(r.clb1->value) : Cell(std::monostate{}), r.clb2.value,
                        r.clb3.value, r.clb4.value,
                        r.clb1 ? Cell(r.clb1->argmax.to_string()) : Cell(std::monostate{}),
                        r.clb2.argmax.to_string(), r.clb3.argmax.to_string(), r.clb4.argmax.to_string()});
  return table;
}

Table run_experiment(const ExperimentConfig& config) {
  const ExperimentConfig resolved = resolve_defaults(config);
  switch (resolved.experiment) {
    case ExperimentKind::example1: return run_example1(resolved);
    case ExperimentKind::example2: return run_example2(resolved);
    case ExperimentKind::example3: return run_example3(resolved);
    case ExperimentKind::example4: return run_example4(resolved);
    case ExperimentKind::custom: return run_custom(resolved);
  }
  fail(ErrorCode::ConfigInvalid, "unknown experiment");
}

}  // namespace skewinfo
