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

#include "moodkit/moodkit.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <map>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "moodkit/class_model.hpp"
#include "moodkit/dataset.hpp"
#include "moodkit/error.hpp"
#include "moodkit/mood.hpp"
#include "moodkit/omdl.hpp"
#include "moodkit/regression.hpp"
#include "moodkit/report.hpp"
#include "moodkit/special_functions.hpp"

struct mk_model {
  moodkit::omdl::Document document;
};

struct mk_dataset {
  moodkit::Dataset data;
};

struct mk_fit {
  moodkit::FitResult result;
};

namespace {

struct LastError {
  std::string code;
  std::string message;
};

thread_local LastError g_last_error;

mk_status fail(mk_status status, std::string_view code, std::string message) {
  g_last_error.code = code;
  g_last_error.message = std::move(message);
  return status;
}

mk_status ok() {
  g_last_error.code.clear();
  g_last_error.message.clear();
  return MK_OK;
}

mk_status null_argument(const char* what) {
  return fail(MK_ERR_COMPUTE, "INVALID_ARGUMENT",
              std::string(what) + " must not be null");
}

// Runs fn, translating exceptions into a status and the last-error slot.
template <typename Fn>
mk_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const moodkit::Error& e) {
    return fail(static_cast<mk_status>(e.category()),
                moodkit::error_code_name(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MK_ERR_COMPUTE, "OUT_OF_MEMORY", "out of memory");
  } catch (const std::exception& e) {
    return fail(MK_ERR_COMPUTE, "INTERNAL", e.what());
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

moodkit::OutputFormat to_format(mk_format f) {
  switch (f) {
    case MK_FORMAT_TABLE: return moodkit::OutputFormat::kTable;
    case MK_FORMAT_JSON: return moodkit::OutputFormat::kJson;
    case MK_FORMAT_CSV: return moodkit::OutputFormat::kCsv;
  }
  throw moodkit::Error(moodkit::ErrorCode::kInvalidArgument,
                       "unknown output format");
}

mk_metric to_metric(const moodkit::MetricValue& m) {
  return {m.value(), m.numerator, m.denominator, m.defined() ? 1 : 0};
}

// Throws Error(kValidation) listing the diagnostics of an invalid model.
void require_valid(const mk_model& model) {
  const auto diagnostics = moodkit::validate(model.document.model);
  if (!diagnostics.empty()) {
    throw moodkit::Error(
        moodkit::ErrorCode::kValidation,
        moodkit::render_diagnostics(diagnostics, moodkit::OutputFormat::kTable,
                                    &model.document));
  }
}

}  // namespace

extern "C" {

const char* mk_version(void) { return "1.0.0"; }

const char* mk_last_error_code(void) { return g_last_error.code.c_str(); }

const char* mk_last_error_message(void) { return g_last_error.message.c_str(); }

void mk_string_free(char* s) { std::free(s); }

int mk_format_from_name(const char* name, mk_format* out) {
  if (name == nullptr || out == nullptr) return 0;
  const auto f = moodkit::parse_format(name);
  if (!f) return 0;
  switch (*f) {
    case moodkit::OutputFormat::kTable: *out = MK_FORMAT_TABLE; break;
    case moodkit::OutputFormat::kJson: *out = MK_FORMAT_JSON; break;
    case moodkit::OutputFormat::kCsv: *out = MK_FORMAT_CSV; break;
  }
  return 1;
}

mk_status mk_model_parse(const char* text, size_t length, mk_model** out) {
  if (out == nullptr) return null_argument("out");
  if (text == nullptr && length > 0) return null_argument("text");
  *out = nullptr;
  return guarded([&] {
    auto doc = moodkit::omdl::parse_or_throw(
        std::string_view(text == nullptr ? "" : text, length));
    *out = new mk_model{std::move(doc)};
    return ok();
  });
}

mk_status mk_model_load(const char* path, mk_model** out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return fail(MK_ERR_IO, "IO_ERROR",
                std::string("cannot open '") + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    return fail(MK_ERR_IO, "IO_ERROR",
                std::string("failed reading '") + path + "'");
  }
  const std::string text = buf.str();
  return mk_model_parse(text.data(), text.size(), out);
}

void mk_model_free(mk_model* model) { delete model; }

size_t mk_model_class_count(const mk_model* model) {
  return model == nullptr ? 0 : model->document.model.size();
}

mk_status mk_model_validate(const mk_model* model, mk_format format,
                            char** diagnostics) {
  if (model == nullptr) return null_argument("model");
  if (diagnostics != nullptr) *diagnostics = nullptr;
  return guarded([&] {
    const auto found = moodkit::validate(model->document.model);
    const auto fmt = to_format(format);
    if (diagnostics != nullptr) {
      *diagnostics = copy_string(
          moodkit::render_diagnostics(found, fmt, &model->document));
    }
    if (found.empty()) return ok();
    return fail(MK_ERR_VALIDATION, "VALIDATION_ERROR",
                std::to_string(found.size()) + " validation diagnostic(s)");
  });
}

mk_status mk_model_render(const mk_model* model, char** out) {
  if (model == nullptr) return null_argument("model");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = copy_string(moodkit::omdl::render(model->document.model));
    return ok();
  });
}

mk_status mk_model_mood(const mk_model* model, mk_mood_report* out) {
  if (model == nullptr) return null_argument("model");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    require_valid(*model);
    const auto r = moodkit::compute_all(model->document.model);
    *out = {to_metric(r.mhf), to_metric(r.ahf), to_metric(r.mif),
            to_metric(r.aif), to_metric(r.pf),  to_metric(r.cf),
            r.tc};
    return ok();
  });
}

mk_status mk_model_mood_render(const mk_model* model, mk_format format,
                               char** out) {
  if (model == nullptr) return null_argument("model");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    require_valid(*model);
    *out = copy_string(moodkit::render_mood(
        moodkit::compute_all(model->document.model), to_format(format)));
    return ok();
  });
}

mk_status mk_dataset_load(const char* source, mk_dataset** out) {
  if (source == nullptr) return null_argument("source");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new mk_dataset{moodkit::load_dataset(source)};
    return ok();
  });
}

mk_status mk_dataset_from_csv(const char* text, size_t length,
                              mk_dataset** out) {
  if (out == nullptr) return null_argument("out");
  if (text == nullptr && length > 0) return null_argument("text");
  *out = nullptr;
  return guarded([&] {
    *out = new mk_dataset{moodkit::read_csv_text(
        std::string_view(text == nullptr ? "" : text, length))};
    return ok();
  });
}

void mk_dataset_free(mk_dataset* data) { delete data; }

size_t mk_dataset_row_count(const mk_dataset* data) {
  return data == nullptr ? 0 : data->data.row_count();
}

size_t mk_dataset_column_count(const mk_dataset* data) {
  return data == nullptr ? 0 : data->data.column_count();
}

const char* mk_dataset_column_name(const mk_dataset* data, size_t column) {
  if (data == nullptr || column >= data->data.column_count()) return nullptr;
  return data->data.columns()[column].c_str();
}

mk_status mk_dataset_value(const mk_dataset* data, size_t row, size_t column,
                           double* out) {
  if (data == nullptr) return null_argument("data");
  if (out == nullptr) return null_argument("out");
  if (row >= data->data.row_count() || column >= data->data.column_count()) {
    return fail(MK_ERR_COMPUTE, "INVALID_ARGUMENT", "cell index out of range");
  }
  *out = data->data.rows()[row][column];
  return ok();
}

mk_status mk_dataset_render(const mk_dataset* data, mk_format format,
                            char** out) {
  if (data == nullptr) return null_argument("data");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = copy_string(moodkit::render_dataset(data->data, to_format(format)));
    return ok();
  });
}

mk_status mk_dataset_log10(const mk_dataset* data, mk_dataset** out) {
  if (data == nullptr) return null_argument("data");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new mk_dataset{moodkit::log_transform(data->data, true)};
    return ok();
  });
}

mk_status mk_dataset_scatter(const mk_dataset* data, const char* x,
                             const char* y, int log10, mk_plot_kind kind,
                             char** out) {
  if (data == nullptr) return null_argument("data");
  if (x == nullptr) return null_argument("x");
  if (y == nullptr) return null_argument("y");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    const std::string ys[] = {y};
    const auto series = moodkit::scatter(data->data, x, ys, log10 != 0);
    const auto& s = series.front();
    switch (kind) {
      case MK_PLOT_CSV: *out = copy_string(moodkit::scatter_csv(s)); break;
      case MK_PLOT_SVG: *out = copy_string(moodkit::scatter_svg(s)); break;
      default:
        return fail(MK_ERR_COMPUTE, "INVALID_ARGUMENT", "unknown plot kind");
    }
    return ok();
  });
}

mk_status mk_fit_create(const mk_dataset* data, const char* response,
                        const char* const* predictors, size_t predictor_count,
                        mk_fit** out) {
  if (data == nullptr) return null_argument("data");
  if (response == nullptr) return null_argument("response");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    moodkit::ModelSpec spec;
    if (predictors == nullptr) {
      spec = moodkit::interchange_spec(data->data, response);
    } else {
      spec.response = response;
      for (size_t i = 0; i < predictor_count; ++i) {
        if (predictors[i] == nullptr) return null_argument("predictor name");
        spec.predictors.emplace_back(predictors[i]);
      }
    }
    *out = new mk_fit{moodkit::fit(data->data, spec)};
    return ok();
  });
}

mk_status mk_fit_interchange(const mk_dataset* data, mk_fit* out[4]) {
  if (data == nullptr) return null_argument("data");
  if (out == nullptr) return null_argument("out");
  for (int i = 0; i < 4; ++i) out[i] = nullptr;
  return guarded([&] {
    auto fits = moodkit::fit_all_interchange(data->data);
    for (int i = 0; i < 4; ++i) out[i] = new mk_fit{std::move(fits[i])};
    return ok();
  });
}

void mk_fit_free(mk_fit* fit) { delete fit; }

const char* mk_fit_response(const mk_fit* fit) {
  return fit == nullptr ? nullptr : fit->result.spec.response.c_str();
}

size_t mk_fit_coefficient_count(const mk_fit* fit) {
  return fit == nullptr ? 0 : fit->result.coefficients.size();
}

mk_status mk_fit_coefficient(const mk_fit* fit, size_t index,
                             mk_coefficient* out) {
  if (fit == nullptr) return null_argument("fit");
  if (out == nullptr) return null_argument("out");
  if (index >= fit->result.coefficients.size()) {
    return fail(MK_ERR_COMPUTE, "INVALID_ARGUMENT",
                "coefficient index out of range");
  }
  const auto& c = fit->result.coefficients[index];
  *out = {c.name.c_str(), c.beta, c.std_error, c.t_stat, c.p_value};
  return ok();
}

mk_status mk_fit_summary_get(const mk_fit* fit, mk_fit_summary* out) {
  if (fit == nullptr) return null_argument("fit");
  if (out == nullptr) return null_argument("out");
  const auto& r = fit->result;
  const auto& a = r.anova;
  *out = {r.n,
          r.multiple_r(),
          r.r_squared,
          r.adj_r_squared,
          r.std_error_estimate,
          a.ss_regression,
          a.ss_residual,
          a.ss_total,
          a.df_regression,
          a.df_residual,
          a.df_total,
          a.ms_regression,
          a.ms_residual,
          a.f_stat,
          a.p_value};
  return ok();
}

mk_status mk_fit_predict(const mk_fit* fit, const char* const* names,
                         const double* values, size_t count, double* out) {
  if (fit == nullptr) return null_argument("fit");
  if (out == nullptr) return null_argument("out");
  if (count > 0 && (names == nullptr || values == nullptr)) {
    return null_argument("names/values");
  }
  return guarded([&] {
    std::map<std::string, double> inputs;
    for (size_t i = 0; i < count; ++i) {
      if (names[i] == nullptr) return null_argument("predictor name");
      inputs[names[i]] = values[i];
    }
    *out = moodkit::predict(fit->result, inputs);
    return ok();
  });
}

mk_status mk_fit_render(const mk_fit* const* fits, size_t count,
                        mk_format format, char** out) {
  if (fits == nullptr && count > 0) return null_argument("fits");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    std::vector<moodkit::FitResult> results;
    for (size_t i = 0; i < count; ++i) {
      if (fits[i] == nullptr) return null_argument("fit");
      results.push_back(fits[i]->result);
    }
    *out = copy_string(moodkit::render_fits(results, to_format(format)));
    return ok();
  });
}

mk_status mk_reg_inc_beta(double x, double a, double b, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = moodkit::special::reg_inc_beta(x, a, b);
    return ok();
  });
}

mk_status mk_t_two_sided_p(double t, int df, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = moodkit::special::t_two_sided_p(t, df);
    return ok();
  });
}

mk_status mk_f_upper_p(double f, int df1, int df2, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = moodkit::special::f_upper_p(f, df1, df2);
    return ok();
  });
}

}  // extern "C"
