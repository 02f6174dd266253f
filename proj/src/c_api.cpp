#include "skewinfo/skewinfo.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "skewinfo/channel_bounds.hpp"
#include "skewinfo/errors.hpp"
#include "skewinfo/experiments.hpp"
#include "skewinfo/metric.hpp"
#include "skewinfo/observable_bounds.hpp"

struct skw_metric {
  skewinfo::MetricSpec spec;
};

struct skw_state {
  skewinfo::DensityMatrix rho;
};

struct skw_channel {
  skewinfo::QuantumChannel channel;
};

struct skw_table {
  skewinfo::Table table;
};

namespace {

using namespace skewinfo;

static_assert(SKW_ERR_NOT_HERMITIAN == static_cast<int>(ErrorCode::NotHermitian) + 1);
static_assert(SKW_ERR_VALIDATION == static_cast<int>(ErrorCode::ValidationError) + 1);

thread_local std::string last_error;

skw_status status_of(ErrorCode code) { return static_cast<skw_status>(static_cast<int>(code) + 1); }

skw_status record(skw_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
skw_status guarded(F&& body) {
  try {
    body();
    return SKW_OK;
  } catch (const Error& e) {
    return record(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(SKW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(SKW_ERR_INTERNAL, e.what());
  }
}

skw_status null_argument(const char* what) {
  return record(SKW_ERR_INVALID_ARGUMENT, std::string(what) + " is NULL");
}

ComplexMatrix to_matrix(std::size_t dim, const skw_complex* entries) {
  ComplexMatrix m(dim);
  for (std::size_t k = 0; k < dim * dim; ++k) m(k / dim, k % dim) = Complex(entries[k].re, entries[k].im);
  return m;
}

void copy_label(char* dst, const std::string& src) {
  std::snprintf(dst, SKW_LABEL_CAPACITY, "%s", src.c_str());
}

Grid to_grid(const skw_grid& g) { return Grid{g.start, g.stop, g.count}; }

}  // namespace

extern "C" {

const char* skw_version(void) { return "1.0.0"; }

const char* skw_status_string(skw_status status) {
  switch (status) {
    case SKW_OK: return "Ok";
    case SKW_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SKW_ERR_INTERNAL: return "Internal";
    default: break;
  }
  const int index = static_cast<int>(status) - 1;
  if (index < 0 || index > static_cast<int>(ErrorCode::ValidationError)) return "Unknown";
  return skewinfo::to_string(static_cast<ErrorCode>(index)).data();
}

const char* skw_last_error_message(void) { return last_error.c_str(); }

skw_status skw_metric_parse(const char* name, skw_metric** out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new skw_metric{parse_metric(name)}; });
}

skw_status skw_metric_wyd(double alpha, skw_metric** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new skw_metric{wyd_metric(WydParameter(alpha))}; });
}

const char* skw_metric_name(const skw_metric* metric) { return metric ? metric->spec.name().c_str() : nullptr; }

double skw_metric_constant(const skw_metric* metric) { return metric ? metric->spec.metric_constant() : 0.0; }

void skw_metric_free(skw_metric* metric) { delete metric; }

skw_status skw_state_create(size_t dim, const skw_complex* entries, skw_state** out) {
  if (!entries) return null_argument("entries");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new skw_state{DensityMatrix::from_matrix(to_matrix(dim, entries))}; });
}

skw_status skw_state_bloch(double rx, double ry, double rz, skw_state** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new skw_state{bloch_qubit(rx, ry, rz)}; });
}

skw_status skw_state_gisin(double lambda, double theta, skw_state** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new skw_state{gisin_state(lambda, theta)}; });
}

size_t skw_state_dim(const skw_state* state) { return state ? state->rho.dim() : 0; }

void skw_state_free(skw_state* state) { delete state; }

skw_status skw_skew_information(const skw_metric* metric, const skw_state* state, const skw_complex* x,
                                double* out) {
  if (!metric) return null_argument("metric");
  if (!state) return null_argument("state");
  if (!x) return null_argument("x");
  if (!out) return null_argument("out");
  return guarded([&] { *out = skew_information(metric->spec, state->rho, to_matrix(state->rho.dim(), x)); });
}

skw_status skw_observable_bounds(const skw_metric* metric, const skw_state* state, size_t count,
                                 const skw_complex* const* observables, skw_observable_report* out) {
  if (!metric) return null_argument("metric");
  if (!state) return null_argument("state");
  if (!observables && count > 0) return null_argument("observables");
  if (!out) return null_argument("out");
  for (size_t i = 0; i < count; ++i) {
    if (!observables[i]) return null_argument("observables[i]");
  }
  return guarded([&] {
    std::vector<Observable> obs;
    obs.reserve(count);
    for (size_t i = 0; i < count; ++i) obs.emplace_back(to_matrix(state->rho.dim(), observables[i]));
    const ObservableBoundReport r = observable_bounds(metric->spec, state->rho, obs);
    *out = skw_observable_report{};
    out->sum = r.sum;
    out->has_lb1 = r.lb1.has_value();
    out->lb1 = r.lb1.value_or(0.0);
    out->lb1_raw = r.lb1_raw.value_or(0.0);
    out->lb2 = r.lb2;
    out->lb3 = r.lb3;
    out->lb4 = r.lb4;
    out->n = r.n;
  });
}

skw_status skw_channel_create(const char* name, size_t dim, size_t kraus_count, const skw_complex* const* kraus,
                              skw_channel** out) {
  if (!kraus && kraus_count > 0) return null_argument("kraus");
  if (!out) return null_argument("out");
  for (size_t i = 0; i < kraus_count; ++i) {
    if (!kraus[i]) return null_argument("kraus[i]");
  }
  return guarded([&] {
    std::vector<ComplexMatrix> ops;
    for (size_t i = 0; i < kraus_count; ++i) ops.push_back(to_matrix(dim, kraus[i]));
    *out = new skw_channel{QuantumChannel(name ? name : "channel", std::move(ops))};
  });
}

skw_status skw_channel_bit_flip(double p, skw_channel** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new skw_channel{bit_flip_channel(p)}; });
}

skw_status skw_channel_phase_flip(double p, skw_channel** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new skw_channel{phase_flip_channel(p)}; });
}

skw_status skw_channel_amplitude_damping(double p, int literal, skw_channel** out) {
  if (!out) return null_argument("out");
  const auto form = literal ? AmplitudeDampingForm::literal : AmplitudeDampingForm::standard;
  return guarded([&] { *out = new skw_channel{amplitude_damping_channel(p, form)}; });
}

skw_status skw_channel_rotation(double angle, skw_channel** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new skw_channel{unitary_channel(rotation_unitary(angle))}; });
}

size_t skw_channel_kraus_count(const skw_channel* channel) { return channel ? channel->channel.kraus_count() : 0; }

void skw_channel_free(skw_channel* channel) { delete channel; }

skw_status skw_channel_bounds(const skw_metric* metric, const skw_state* state, size_t count,
                              const skw_channel* const* channels, skw_channel_report* out) {
  if (!metric) return null_argument("metric");
  if (!state) return null_argument("state");
  if (!channels && count > 0) return null_argument("channels");
  if (!out) return null_argument("out");
  for (size_t i = 0; i < count; ++i) {
    if (!channels[i]) return null_argument("channels[i]");
  }
  return guarded([&] {
    std::vector<QuantumChannel> list;
    for (size_t i = 0; i < count; ++i) list.push_back(channels[i]->channel);
    const auto padded = pad_kraus(list);
    const ChannelBoundReport r = channel_bounds(metric->spec, state->rho, padded);
    *out = skw_channel_report{};
    out->sum = r.sum;
    out->has_clb1 = r.clb1.has_value();
    const BoundChoice* choices[4] = {r.clb1 ? &*r.clb1 : nullptr, &r.clb2, &r.clb3, &r.clb4};
    for (int k = 0; k < 4; ++k) {
      if (!choices[k]) continue;
      out->clb[k] = choices[k]->value;
      copy_label(out->argmax[k], choices[k]->argmax.to_string());
      copy_label(out->case_label[k], case_label(choices[k]->argmax, choices[k]->index));
    }
    out->channel_count = r.channel_count;
    out->kraus_count = r.kraus_count;
  });
}

void skw_experiment_config_init(skw_experiment_config* config) {
  if (!config) return;
  *config = skw_experiment_config{};
  config->experiment = SKW_EXAMPLE1;
}

skw_status skw_experiment_parse(const char* name, skw_experiment* out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  const auto kind = parse_experiment_kind(name);
  if (!kind) return record(SKW_ERR_CONFIG_INVALID, std::string("unknown experiment '") + name + "'");
  *out = static_cast<skw_experiment>(*kind);
  return SKW_OK;
}

skw_status skw_parse_scalar(const char* text, double* out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] { *out = parse_scalar(text); });
}

skw_status skw_parse_grid(const char* text, skw_grid* out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] {
    const Grid g = parse_grid(text);
    *out = skw_grid{g.start, g.stop, g.count};
  });
}

skw_status skw_experiment_run(const skw_experiment_config* config, skw_table** out) {
  if (!config) return null_argument("config");
  if (!out) return null_argument("out");
  if (config->experiment < SKW_EXAMPLE1 || config->experiment > SKW_CUSTOM) {
    return record(SKW_ERR_INVALID_ARGUMENT, "unknown experiment kind");
  }
  return guarded([&] {
    ExperimentConfig c;
    c.experiment = static_cast<ExperimentKind>(config->experiment);
    if (config->metric) c.metric = config->metric;
    if (config->has_alpha) c.alpha = config->alpha;
    if (config->has_alpha_grid) c.alpha_grid = to_grid(config->alpha_grid);
    if (config->has_p) c.p = config->p;
    if (config->has_theta_grid) c.theta_grid = to_grid(config->theta_grid);
    if (config->has_lambda_grid) c.lambda_grid = to_grid(config->lambda_grid);
    c.ad_form = config->literal_ad_kraus ? AmplitudeDampingForm::literal : AmplitudeDampingForm::standard;
    if (config->state_path) c.state_path = config->state_path;
    if (config->observables_path) c.observables_path = config->observables_path;
    if (config->channels_path) c.channels_path = config->channels_path;
    c.inject_bound_offset = config->inject_bound_offset;
    *out = new skw_table{run_experiment(c)};
  });
}

skw_status skw_table_render(const skw_table* table, skw_format format, char** out) {
  if (!table) return null_argument("table");
  if (!out) return null_argument("out");
  return guarded([&] {
    const std::string text =
        table->table.render(format == SKW_FORMAT_JSON ? OutputFormat::json : OutputFormat::csv);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void skw_string_free(char* text) { std::free(text); }

size_t skw_table_row_count(const skw_table* table) { return table ? table->table.rows.size() : 0; }

size_t skw_table_column_count(const skw_table* table) { return table ? table->table.columns.size() : 0; }

const char* skw_table_column(const skw_table* table, size_t column) {
  if (!table || column >= table->table.columns.size()) return nullptr;
  return table->table.columns[column].c_str();
}

const char* skw_table_schema(const skw_table* table) { return table ? table->table.schema.c_str() : nullptr; }

skw_status skw_table_number(const skw_table* table, size_t row, size_t column, double* out) {
  if (!table) return null_argument("table");
  if (!out) return null_argument("out");
  if (row >= table->table.rows.size() || column >= table->table.rows[row].size()) {
    return record(SKW_ERR_INVALID_ARGUMENT, "cell out of range");
  }
  const auto* value = std::get_if<double>(&table->table.rows[row][column]);
  if (!value) return record(SKW_ERR_INVALID_ARGUMENT, "cell is not a number");
  *out = *value;
  return SKW_OK;
}

const char* skw_table_text(const skw_table* table, size_t row, size_t column) {
  if (!table || row >= table->table.rows.size() || column >= table->table.rows[row].size()) return nullptr;
  const auto* value = std::get_if<std::string>(&table->table.rows[row][column]);
  return value ? value->c_str() : nullptr;
}

int skw_table_self_check_passed(const skw_table* table) { return table && table->table.self_check_passed(); }

size_t skw_table_violation_count(const skw_table* table) { return table ? table->table.violations.size() : 0; }

const char* skw_table_violation(const skw_table* table, size_t index) {
  if (!table || index >= table->table.violations.size()) return nullptr;
  return table->table.violations[index].c_str();
}

void skw_table_free(skw_table* table) { delete table; }

}  // extern "C"
