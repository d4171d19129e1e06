// Copyright 2026 The moodkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to moodkit: object-oriented design metrics over OMDL class
 * models, and least-squares size models over tabular project data.
 *
 * Objects are opaque handles released with their matching *_free function.
 * Every fallible call returns an mk_status; on failure the calling thread's
 * last-error slot holds a symbolic code and a message. Strings returned
 * through char** out-parameters are heap allocated and must be released
 * with mk_string_free.
 */
#ifndef MOODKIT_MOODKIT_H_
#define MOODKIT_MOODKIT_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(MOODKIT_BUILDING)
#    define MOODKIT_API __declspec(dllexport)
#  else
#    define MOODKIT_API __declspec(dllimport)
#  endif
#else
#  define MOODKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes for the command-line tool. */
typedef enum mk_status {
  MK_OK = 0,
  MK_ERR_IO = 1,
  MK_ERR_PARSE = 2,
  MK_ERR_VALIDATION = 3,
  MK_ERR_COMPUTE = 4
} mk_status;

typedef enum mk_format {
  MK_FORMAT_TABLE = 0,
  MK_FORMAT_JSON = 1,
  MK_FORMAT_CSV = 2
} mk_format;

typedef enum mk_plot_kind { MK_PLOT_CSV = 0, MK_PLOT_SVG = 1 } mk_plot_kind;

typedef struct mk_model mk_model;
typedef struct mk_dataset mk_dataset;
typedef struct mk_fit mk_fit;

typedef struct mk_metric {
  double value; /* NaN when undefined */
  size_t numerator;
  size_t denominator;
  int defined;
} mk_metric;

typedef struct mk_mood_report {
  mk_metric mhf, ahf, mif, aif, pf, cf;
  size_t tc;
} mk_mood_report;

typedef struct mk_coefficient {
  const char* name; /* owned by the fit */
  double beta;
  double std_error;
  double t;
  double p;
} mk_coefficient;

typedef struct mk_fit_summary {
  size_t n;
  double r;
  double r_squared;
  double adj_r_squared;
  double std_error_estimate;
  double ss_regression, ss_residual, ss_total;
  size_t df_regression, df_residual, df_total;
  double ms_regression, ms_residual;
  double f;
  double f_p;
} mk_fit_summary;

MOODKIT_API const char* mk_version(void);

/* Symbolic code (e.g. "RANK_DEFICIENT") and message of the calling thread's
 * most recent failure; empty strings after a success. */
MOODKIT_API const char* mk_last_error_code(void);
MOODKIT_API const char* mk_last_error_message(void);

MOODKIT_API void mk_string_free(char* s);

/* Parses "text" to the format name; returns 0 on an unknown name. */
MOODKIT_API int mk_format_from_name(const char* name, mk_format* out);

/* ---- class models --------------------------------------------------- */

MOODKIT_API mk_status mk_model_parse(const char* text, size_t length,
                                     mk_model** out);
MOODKIT_API mk_status mk_model_load(const char* path, mk_model** out);
MOODKIT_API void mk_model_free(mk_model* model);
MOODKIT_API size_t mk_model_class_count(const mk_model* model);

/* MK_OK when the model is structurally valid. Otherwise MK_ERR_VALIDATION
 * and, if diagnostics is non-null, a rendered listing (JSON array, or one
 * "line:column: CODE: message" line per diagnostic). */
MOODKIT_API mk_status mk_model_validate(const mk_model* model, mk_format format,
                                        char** diagnostics);
MOODKIT_API mk_status mk_model_render(const mk_model* model, char** out);

/* Both require a valid model and fail with MK_ERR_VALIDATION otherwise. */
MOODKIT_API mk_status mk_model_mood(const mk_model* model, mk_mood_report* out);
MOODKIT_API mk_status mk_model_mood_render(const mk_model* model,
                                           mk_format format, char** out);

/* ---- datasets ------------------------------------------------------- */

/* source is "builtin:table1" or a CSV file path. */
MOODKIT_API mk_status mk_dataset_load(const char* source, mk_dataset** out);
MOODKIT_API mk_status mk_dataset_from_csv(const char* text, size_t length,
                                          mk_dataset** out);
MOODKIT_API void mk_dataset_free(mk_dataset* data);
MOODKIT_API size_t mk_dataset_row_count(const mk_dataset* data);
MOODKIT_API size_t mk_dataset_column_count(const mk_dataset* data);
MOODKIT_API const char* mk_dataset_column_name(const mk_dataset* data,
                                               size_t column);
MOODKIT_API mk_status mk_dataset_value(const mk_dataset* data, size_t row,
                                       size_t column, double* out);
MOODKIT_API mk_status mk_dataset_render(const mk_dataset* data,
                                        mk_format format, char** out);
MOODKIT_API mk_status mk_dataset_log10(const mk_dataset* data,
                                       mk_dataset** out);

/* One CSV ("x,y" header with column names) or SVG document for the series
 * of column y against column x. */
MOODKIT_API mk_status mk_dataset_scatter(const mk_dataset* data, const char* x,
                                         const char* y, int log10,
                                         mk_plot_kind kind, char** out);

/* ---- regression ----------------------------------------------------- */

/* Fits response on the given predictors, or on every other column when
 * predictors is null. */
MOODKIT_API mk_status mk_fit_create(const mk_dataset* data,
                                    const char* response,
                                    const char* const* predictors,
                                    size_t predictor_count, mk_fit** out);

/* The four models NOL (LOC), NOC, NOM, NOA, in that order. */
MOODKIT_API mk_status mk_fit_interchange(const mk_dataset* data,
                                         mk_fit* out[4]);
MOODKIT_API void mk_fit_free(mk_fit* fit);

MOODKIT_API const char* mk_fit_response(const mk_fit* fit);
MOODKIT_API size_t mk_fit_coefficient_count(const mk_fit* fit);
MOODKIT_API mk_status mk_fit_coefficient(const mk_fit* fit, size_t index,
                                         mk_coefficient* out);
MOODKIT_API mk_status mk_fit_summary_get(const mk_fit* fit,
                                         mk_fit_summary* out);
MOODKIT_API mk_status mk_fit_predict(const mk_fit* fit,
                                     const char* const* names,
                                     const double* values, size_t count,
                                     double* out);

/* Several fits render as a JSON array or consecutive tables. */
MOODKIT_API mk_status mk_fit_render(const mk_fit* const* fits, size_t count,
                                    mk_format format, char** out);

/* ---- distributions -------------------------------------------------- */

MOODKIT_API mk_status mk_reg_inc_beta(double x, double a, double b,
                                      double* out);
MOODKIT_API mk_status mk_t_two_sided_p(double t, int df, double* out);
MOODKIT_API mk_status mk_f_upper_p(double f, int df1, int df2, double* out);

#ifdef __cplusplus
}
#endif

#endif /* MOODKIT_MOODKIT_H_ */
