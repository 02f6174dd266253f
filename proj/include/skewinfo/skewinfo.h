#ifndef SKEWINFO_SKEWINFO_H
#define SKEWINFO_SKEWINFO_H

/* C interface to libskewinfo. Objects are opaque handles created by
 * skw_*_create / skw_*_parse style calls and released with the matching
 * skw_*_free. Every fallible call returns a skw_status; on failure a
 * description is available from skw_last_error_message() until the next
 * failing call on the same thread. */

#include <stddef.h>

#if defined(SKEWINFO_BUILDING_LIBRARY)
#define SKW_API __attribute__((visibility("default")))
#else
#define SKW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skw_status {
  SKW_OK = 0,
  SKW_ERR_NOT_HERMITIAN = 1,
  SKW_ERR_NO_CONVERGENCE = 2,
  SKW_ERR_NEGATIVE_EIGENVALUE = 3,
  SKW_ERR_DIMENSION_MISMATCH = 4,
  SKW_ERR_BLOCH_VECTOR_TOO_LONG = 5,
  SKW_ERR_PARAMETER_OUT_OF_RANGE = 6,
  SKW_ERR_NOT_UNITARY = 7,
  SKW_ERR_COMPLETENESS_VIOLATION = 8,
  SKW_ERR_ALPHA_OUT_OF_RANGE = 9,
  SKW_ERR_SINGULAR_STATE = 10,
  SKW_ERR_EMPTY_LIST = 11,
  SKW_ERR_REQUIRES_TWO_OBSERVABLES = 12,
  SKW_ERR_REQUIRES_THREE_OBSERVABLES = 13,
  SKW_ERR_REQUIRES_TWO_CHANNELS = 14,
  SKW_ERR_REQUIRES_THREE_CHANNELS = 15,
  SKW_ERR_SEARCH_SPACE_TOO_LARGE = 16,
  SKW_ERR_UNKNOWN_METRIC = 17,
  SKW_ERR_INVALID_METRIC = 18,
  SKW_ERR_CONFIG_INVALID = 19,
  SKW_ERR_PARSE = 20,
  SKW_ERR_VALIDATION = 21,
  SKW_ERR_INVALID_ARGUMENT = 100,
  SKW_ERR_INTERNAL = 101
} skw_status;

typedef struct skw_complex {
  double re;
  double im;
} skw_complex;

typedef struct skw_metric skw_metric;
typedef struct skw_state skw_state;
typedef struct skw_channel skw_channel;
typedef struct skw_table skw_table;

SKW_API const char* skw_version(void);
SKW_API const char* skw_status_string(skw_status status);
SKW_API const char* skw_last_error_message(void);

/* Metrics: "wy", "sld" or "wyd:<alpha>". */
SKW_API skw_status skw_metric_parse(const char* name, skw_metric** out);
SKW_API skw_status skw_metric_wyd(double alpha, skw_metric** out);
SKW_API const char* skw_metric_name(const skw_metric* metric);
SKW_API double skw_metric_constant(const skw_metric* metric);
SKW_API void skw_metric_free(skw_metric* metric);

/* States. Matrices are dim*dim entries in row-major order. */
SKW_API skw_status skw_state_create(size_t dim, const skw_complex* entries, skw_state** out);
SKW_API skw_status skw_state_bloch(double rx, double ry, double rz, skw_state** out);
SKW_API skw_status skw_state_gisin(double lambda, double theta, skw_state** out);
SKW_API size_t skw_state_dim(const skw_state* state);
SKW_API void skw_state_free(skw_state* state);

/* I_rho(X) for an arbitrary (not necessarily Hermitian) operator X. */
SKW_API skw_status skw_skew_information(const skw_metric* metric, const skw_state* state,
                                        const skw_complex* x, double* out);

typedef struct skw_observable_report {
  double sum;
  int has_lb1; /* zero when n == 2 */
  double lb1;  /* clamped at 0 */
  double lb1_raw;
  double lb2;
  double lb3;
  double lb4;
  size_t n;
} skw_observable_report;

/* observables[i] points to dim*dim entries, dim = skw_state_dim(state). */
SKW_API skw_status skw_observable_bounds(const skw_metric* metric, const skw_state* state,
                                         size_t count, const skw_complex* const* observables,
                                         skw_observable_report* out);

/* Channels. kraus[i] points to dim*dim entries. */
SKW_API skw_status skw_channel_create(const char* name, size_t dim, size_t kraus_count,
                                      const skw_complex* const* kraus, skw_channel** out);
SKW_API skw_status skw_channel_bit_flip(double p, skw_channel** out);
SKW_API skw_status skw_channel_phase_flip(double p, skw_channel** out);
/* literal != 0 selects K2 = sqrt(p)|1><1| instead of sqrt(p)|0><1|. */
SKW_API skw_status skw_channel_amplitude_damping(double p, int literal, skw_channel** out);
SKW_API skw_status skw_channel_rotation(double angle, skw_channel** out);
SKW_API size_t skw_channel_kraus_count(const skw_channel* channel);
SKW_API void skw_channel_free(skw_channel* channel);

#define SKW_LABEL_CAPACITY 256

typedef struct skw_channel_report {
  double sum;
  int has_clb1; /* zero when N == 2 */
  double clb[4];
  /* Maximizing assignment in cycle notation, e.g. "{(1),(12),(12)}". */
  char argmax[4][SKW_LABEL_CAPACITY];
  char case_label[4][SKW_LABEL_CAPACITY];
  size_t channel_count;
  size_t kraus_count;
} skw_channel_report;

/* Pads all channels with zero Kraus operators to a common count first. */
SKW_API skw_status skw_channel_bounds(const skw_metric* metric, const skw_state* state, size_t count,
                                      const skw_channel* const* channels, skw_channel_report* out);

/* Experiments. */
typedef enum skw_experiment {
  SKW_EXAMPLE1 = 0,
  SKW_EXAMPLE2 = 1,
  SKW_EXAMPLE3 = 2,
  SKW_EXAMPLE4 = 3,
  SKW_CUSTOM = 4
} skw_experiment;

typedef enum skw_format { SKW_FORMAT_CSV = 0, SKW_FORMAT_JSON = 1 } skw_format;

typedef struct skw_grid {
  double start;
  double stop;
  size_t count;
} skw_grid;

typedef struct skw_experiment_config {
  skw_experiment experiment;
  const char* metric; /* NULL means "wyd" */
  int has_alpha;
  double alpha;
  int has_alpha_grid;
  skw_grid alpha_grid;
  int has_p;
  double p;
  int has_theta_grid;
  skw_grid theta_grid;
  int has_lambda_grid;
  skw_grid lambda_grid;
  int literal_ad_kraus;
  const char* state_path;
  const char* observables_path;
  const char* channels_path;
  double inject_bound_offset;
} skw_experiment_config;

SKW_API void skw_experiment_config_init(skw_experiment_config* config);
SKW_API skw_status skw_experiment_parse(const char* name, skw_experiment* out);
SKW_API skw_status skw_parse_scalar(const char* text, double* out);
SKW_API skw_status skw_parse_grid(const char* text, skw_grid* out);
SKW_API skw_status skw_experiment_run(const skw_experiment_config* config, skw_table** out);

/* Rendered table; release with skw_string_free. */
SKW_API skw_status skw_table_render(const skw_table* table, skw_format format, char** out);
SKW_API void skw_string_free(char* text);
SKW_API size_t skw_table_row_count(const skw_table* table);
SKW_API size_t skw_table_column_count(const skw_table* table);
SKW_API const char* skw_table_column(const skw_table* table, size_t column);
SKW_API const char* skw_table_schema(const skw_table* table);
/* SKW_ERR_INVALID_ARGUMENT if the cell is out of range or not a number. */
SKW_API skw_status skw_table_number(const skw_table* table, size_t row, size_t column, double* out);
/* NULL if the cell is out of range or not text. */
SKW_API const char* skw_table_text(const skw_table* table, size_t row, size_t column);
SKW_API int skw_table_self_check_passed(const skw_table* table);
SKW_API size_t skw_table_violation_count(const skw_table* table);
SKW_API const char* skw_table_violation(const skw_table* table, size_t index);
SKW_API void skw_table_free(skw_table* table);

#ifdef __cplusplus
}
#endif

#endif
