// Exercises the shared library strictly through skewinfo.h.

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

#include "doctest.h"
#include "skewinfo/skewinfo.h"

namespace {

const skw_complex kSigmaX[4] = {{0, 0}, {1, 0}, {1, 0}, {0, 0}};
const skw_complex kSigmaY[4] = {{0, 0}, {0, -1}, {0, 1}, {0, 0}};
const skw_complex kSigmaZ[4] = {{1, 0}, {0, 0}, {0, 0}, {-1, 0}};

skw_state* qubit_on_circle(double theta) {
  const double r = std::sqrt(3.0) / 2;
  skw_state* s = nullptr;
  REQUIRE(skw_state_bloch(r * std::cos(theta), r * std::sin(theta), 0.0, &s) == SKW_OK);
  return s;
}

}  // namespace

TEST_CASE("status strings and error messages") {
  CHECK(std::string(skw_status_string(SKW_OK)) == "Ok");
  CHECK(std::string(skw_status_string(SKW_ERR_NOT_HERMITIAN)) == "NotHermitian");
  CHECK(std::string(skw_status_string(SKW_ERR_VALIDATION)) == "ValidationError");
  CHECK(std::string(skw_status_string(SKW_ERR_INVALID_ARGUMENT)) == "InvalidArgument");
  CHECK(std::string(skw_status_string(static_cast<skw_status>(77))) == "Unknown");
  CHECK(std::string(skw_version()) == "1.0.0");

  skw_metric* m = nullptr;
  CHECK(skw_metric_parse("nope", &m) == SKW_ERR_UNKNOWN_METRIC);
  CHECK(m == nullptr);
  CHECK(std::string(skw_last_error_message()).find("nope") != std::string::npos);
  CHECK(skw_metric_wyd(1.5, &m) == SKW_ERR_ALPHA_OUT_OF_RANGE);
  CHECK(skw_metric_parse(nullptr, &m) == SKW_ERR_INVALID_ARGUMENT);
  CHECK(skw_metric_parse("wy", nullptr) == SKW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("metrics, states and skew information") {
  skw_metric* wy = nullptr;
  REQUIRE(skw_metric_parse("wy", &wy) == SKW_OK);
  CHECK(std::string(skw_metric_name(wy)) == "wy");
  CHECK(skw_metric_constant(wy) == 0.25);

  skw_state* s = nullptr;
  REQUIRE(skw_state_bloch(std::sqrt(3.0) / 2, 0, 0, &s) == SKW_OK);
  CHECK(skw_state_dim(s) == 2);
  double v = 0;
  REQUIRE(skw_skew_information(wy, s, kSigmaZ, &v) == SKW_OK);
  CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
  skw_state_free(s);

  const skw_complex bad_trace[4] = {{0.5, 0}, {0, 0}, {0, 0}, {0.4, 0}};
  CHECK(skw_state_create(2, bad_trace, &s) == SKW_ERR_VALIDATION);
  CHECK(std::string(skw_last_error_message()).find("trace") != std::string::npos);
  CHECK(skw_state_bloch(1, 1, 0, &s) == SKW_ERR_BLOCH_VECTOR_TOO_LONG);
  CHECK(skw_state_gisin(2.0, 0, &s) == SKW_ERR_PARAMETER_OUT_OF_RANGE);
  REQUIRE(skw_state_gisin(0.5, 1.0, &s) == SKW_OK);
  CHECK(skw_state_dim(s) == 4);
  skw_state_free(s);
  skw_metric_free(wy);
  skw_metric_free(nullptr);
  skw_state_free(nullptr);
}

TEST_CASE("observable bounds") {
  skw_metric* m = nullptr;
  REQUIRE(skw_metric_wyd(1.0 / 3.0, &m) == SKW_OK);
  skw_state* s = qubit_on_circle(std::numbers::pi / 4);
  const skw_complex* obs[3] = {kSigmaX, kSigmaY, kSigmaZ};
  skw_observable_report r{};
  REQUIRE(skw_observable_bounds(m, s, 3, obs, &r) == SKW_OK);
  CHECK(r.n == 3);
  CHECK(r.has_lb1);
  CHECK(r.sum == doctest::Approx(0.9020883272771758).epsilon(1e-10));
  CHECK(r.lb1_raw == doctest::Approx(0.6765662454578817).epsilon(1e-10));
  CHECK(r.lb4 == doctest::Approx(0.8993897011144814).epsilon(1e-10));

  REQUIRE(skw_observable_bounds(m, s, 2, obs, &r) == SKW_OK);
  CHECK_FALSE(r.has_lb1);
  CHECK(r.lb3 == doctest::Approx(r.sum).epsilon(1e-10));
  CHECK(skw_observable_bounds(m, s, 1, obs, &r) == SKW_ERR_REQUIRES_TWO_OBSERVABLES);
  const skw_complex not_herm[4] = {{0, 0}, {1, 0}, {0, 0}, {0, 0}};
  const skw_complex* bad[2] = {kSigmaX, not_herm};
  CHECK(skw_observable_bounds(m, s, 2, bad, &r) == SKW_ERR_NOT_HERMITIAN);
  skw_state_free(s);
  skw_metric_free(m);
}

TEST_CASE("channel bounds") {
  skw_metric* m = nullptr;
  REQUIRE(skw_metric_parse("wyd:0.333333333333333", &m) == SKW_OK);
  skw_state* s = qubit_on_circle(std::numbers::pi / 3);
  skw_channel* ch[3] = {};
  REQUIRE(skw_channel_bit_flip(0.7, &ch[0]) == SKW_OK);
  REQUIRE(skw_channel_phase_flip(0.7, &ch[1]) == SKW_OK);
  REQUIRE(skw_channel_rotation(std::numbers::pi / 8, &ch[2]) == SKW_OK);
  CHECK(skw_channel_kraus_count(ch[2]) == 1);

  skw_channel_report r{};
  const skw_channel* list[3] = {ch[0], ch[1], ch[2]};
  REQUIRE(skw_channel_bounds(m, s, 3, list, &r) == SKW_OK);
  CHECK(r.kraus_count == 2);
  CHECK(r.has_clb1);
  CHECK(r.sum == doctest::Approx(0.5690425725716612).epsilon(1e-10));
  CHECK(r.clb[0] == doctest::Approx(0.5096358024379071).epsilon(1e-10));
  CHECK(std::string(r.case_label[0]) == "A2");
  CHECK(std::string(r.argmax[0]) == "{(1),(12),(12)}");
  CHECK(std::string(r.case_label[3]) == "A3");

  CHECK(skw_channel_bounds(m, s, 1, list, &r) == SKW_ERR_REQUIRES_TWO_CHANNELS);

  skw_channel* custom = nullptr;
  const skw_complex half[4] = {{0.5, 0}, {0, 0}, {0, 0}, {0.5, 0}};
  const skw_complex* kraus[1] = {half};
  CHECK(skw_channel_create("half", 2, 1, kraus, &custom) == SKW_ERR_COMPLETENESS_VIOLATION);
  skw_channel* ad = nullptr;
  REQUIRE(skw_channel_amplitude_damping(0.7, 1, &ad) == SKW_OK);
  skw_channel_free(ad);

  for (auto* c : ch) skw_channel_free(c);
  skw_state_free(s);
  skw_metric_free(m);
}

TEST_CASE("experiments and tables") {
  skw_grid g{};
  REQUIRE(skw_parse_grid("0:pi:3", &g) == SKW_OK);
  CHECK(g.count == 3);
  CHECK(g.stop == std::numbers::pi);
  CHECK(skw_parse_grid("0:1", &g) == SKW_ERR_CONFIG_INVALID);
  double x = 0;
  REQUIRE(skw_parse_scalar("pi/4", &x) == SKW_OK);
  CHECK(x == std::numbers::pi / 4);
  skw_experiment kind{};
  REQUIRE(skw_experiment_parse("example2", &kind) == SKW_OK);
  CHECK(kind == SKW_EXAMPLE2);
  CHECK(skw_experiment_parse("example9", &kind) == SKW_ERR_CONFIG_INVALID);

  skw_experiment_config cfg;
  skw_experiment_config_init(&cfg);
  cfg.experiment = SKW_EXAMPLE3;
  cfg.has_theta_grid = 1;
  cfg.theta_grid = skw_grid{std::numbers::pi / 3, std::numbers::pi, 2};
  skw_table* t = nullptr;
  REQUIRE(skw_experiment_run(&cfg, &t) == SKW_OK);
  CHECK(skw_table_row_count(t) == 2);
  CHECK(skw_table_self_check_passed(t));
  CHECK(std::string(skw_table_schema(t)) == "skewinfo.example3.v1");
  CHECK(std::string(skw_table_column(t, 2)) == "clb1");
  CHECK(skw_table_column(t, 99) == nullptr);
  double v = 0;
  REQUIRE(skw_table_number(t, 0, 2, &v) == SKW_OK);
  CHECK(v == doctest::Approx(0.636358212333398).epsilon(1e-10));
  CHECK(std::string(skw_table_text(t, 0, 6)) == "A4");
  CHECK(skw_table_number(t, 0, 6, &v) == SKW_ERR_INVALID_ARGUMENT);
  CHECK(skw_table_text(t, 0, 2) == nullptr);

  char* csv = nullptr;
  REQUIRE(skw_table_render(t, SKW_FORMAT_CSV, &csv) == SKW_OK);
  CHECK(std::strncmp(csv, "# schema: skewinfo.example3.v1\n", 31) == 0);
  skw_string_free(csv);
  char* json = nullptr;
  REQUIRE(skw_table_render(t, SKW_FORMAT_JSON, &json) == SKW_OK);
  CHECK(std::string(json).find("\"case_clb1\": \"A4\"") != std::string::npos);
  skw_string_free(json);
  skw_table_free(t);

  cfg.inject_bound_offset = 1.0;
  REQUIRE(skw_experiment_run(&cfg, &t) == SKW_OK);
  CHECK_FALSE(skw_table_self_check_passed(t));
  CHECK(skw_table_violation_count(t) >= 2);
  CHECK(std::string(skw_table_violation(t, 0)).find("clb4") != std::string::npos);
  CHECK(skw_table_violation(t, 1000) == nullptr);
  skw_table_free(t);

  skw_experiment_config_init(&cfg);
  cfg.metric = "sld";
  cfg.has_alpha = 1;
  cfg.alpha = 0.2;
  CHECK(skw_experiment_run(&cfg, &t) == SKW_ERR_CONFIG_INVALID);
  cfg.experiment = static_cast<skw_experiment>(42);
  CHECK(skw_experiment_run(&cfg, &t) == SKW_ERR_INVALID_ARGUMENT);
}
