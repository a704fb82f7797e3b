/*
 * conekit C API.
 *
 * All objects are opaque handles created and destroyed through this header.
 * Functions return CK_OK or an error status; the message for the most recent
 * failure on the calling thread is available from ck_last_error().
 */
#ifndef CONEKIT_H
#define CONEKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(CONEKIT_BUILDING_LIBRARY)
#define CK_API __attribute__((visibility("default")))
#else
#define CK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ck_status {
  CK_OK = 0,
  CK_ERR_INVALID_ARGUMENT = 1,
  CK_ERR_DIMENSION = 2,
  CK_ERR_SINGULAR = 3,
  CK_ERR_GUARD = 4,
  CK_ERR_PRECONDITION = 5,
  CK_ERR_NUMERIC = 6,
  CK_ERR_PARSE = 7,
  CK_ERR_IO = 8,
  CK_ERR_INTERNAL = 9
} ck_status;

typedef enum ck_format { CK_FORMAT_TEXT = 0, CK_FORMAT_JSON = 1 } ck_format;

typedef struct ck_config ck_config;
typedef struct ck_problem ck_problem;
typedef struct ck_report ck_report;

CK_API const char* ck_version(void);
CK_API const char* ck_status_name(ck_status status);
/* Valid until the next failing call on this thread. */
CK_API const char* ck_last_error(void);

/* Tolerances. Keys: tau, tau_sing, tau_lp, tau_rank, tau_expm, tau_rel,
 * tau_res, spod_max_dim, norm_max_dim, lp_max_vars. Values set here take
 * precedence over a problem document's "tolerances" field. */
CK_API ck_status ck_config_create(ck_config** out);
CK_API void ck_config_destroy(ck_config* cfg);
CK_API ck_status ck_config_set(ck_config* cfg, const char* key, double value);
CK_API ck_status ck_config_get(const ck_config* cfg, const char* key, double* out);

/* Problems: a matrix with optional cones and vectors. */
CK_API ck_status ck_problem_parse(const char* json_text, ck_problem** out);
/* Row-major rows x cols data. Cones default to orthants. */
CK_API ck_status ck_problem_create(const double* data, size_t rows, size_t cols, ck_problem** out);
CK_API void ck_problem_destroy(ck_problem* problem);
/* Row-major n x n generators for the domain cone (n = columns). */
CK_API ck_status ck_problem_set_cone(ck_problem* problem, const double* generators, size_t n);
/* Parses {"generators": [[...]]} for the domain cone. */
CK_API ck_status ck_problem_set_cone_json(ck_problem* problem, const char* json_text);
/* Drops any domain cone; n must equal the number of columns. */
CK_API ck_status ck_problem_set_orthant(ck_problem* problem, size_t n);
/* name is "e", "z" or "eps". */
CK_API ck_status ck_problem_set_vector(ck_problem* problem, const char* name, const double* data,
                                       size_t len);
CK_API ck_status ck_problem_shape(const ck_problem* problem, size_t* rows, size_t* cols);

/* Commands. cfg may be NULL for defaults. */
CK_API ck_status ck_run_classify(const ck_problem* problem, const ck_config* cfg, ck_report** out);
CK_API ck_status ck_run_theorem1(const ck_problem* problem, const ck_config* cfg, ck_report** out);
CK_API ck_status ck_run_theorem2(const ck_problem* problem, const ck_config* cfg, ck_report** out);
CK_API ck_status ck_run_norms(const ck_problem* problem, const ck_config* cfg, ck_report** out);

typedef struct ck_fuzz_options {
  size_t count;
  size_t n_min;
  size_t n_max;
  const char* generator; /* metzler | dense | perturbed-metzler |
                            somewhere-positive-planted | mixed */
  const char* harness;   /* NULL for the generator's default;
                            theorem1 | theorem2 | spod */
  uint64_t seed;
} ck_fuzz_options;

CK_API void ck_fuzz_options_default(ck_fuzz_options* opts);
CK_API ck_status ck_run_fuzz(const ck_fuzz_options* opts, const ck_config* cfg, ck_report** out);

CK_API void ck_report_destroy(ck_report* report);
/* 1 when the report records a THEOREM VIOLATION, else 0. */
CK_API int ck_report_violation(const ck_report* report);
/* Rendered report, owned by the report handle. */
CK_API const char* ck_report_render(ck_report* report, ck_format format);
/* Field lookup by JSON pointer, e.g. "/result/somewhere_positive/verdict". */
CK_API ck_status ck_report_get_number(const ck_report* report, const char* pointer, double* out);
/* Booleans; null (an unknown verdict) reads as -1. */
CK_API ck_status ck_report_get_bool(const ck_report* report, const char* pointer, int* out);

#ifdef __cplusplus
}
#endif

#endif /* CONEKIT_H */
