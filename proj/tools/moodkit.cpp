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

// moodkit command-line tool. Built only against the C interface.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moodkit/moodkit.h"

namespace {

// Usage errors count as domain errors so the exit code set stays 0..4.
constexpr int kUsageExit = MK_ERR_COMPUTE;

struct StringDeleter {
  void operator()(char* s) const { mk_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ModelDeleter {
  void operator()(mk_model* m) const { mk_model_free(m); }
};
struct DatasetDeleter {
  void operator()(mk_dataset* d) const { mk_dataset_free(d); }
};
struct FitDeleter {
  void operator()(mk_fit* f) const { mk_fit_free(f); }
};
using Model = std::unique_ptr<mk_model, ModelDeleter>;
using Data = std::unique_ptr<mk_dataset, DatasetDeleter>;
using Fit = std::unique_ptr<mk_fit, FitDeleter>;

int report(mk_status status) {
  std::cerr << "moodkit: " << mk_last_error_code() << ": "
            << mk_last_error_message() << "\n";
  return static_cast<int>(status);
}

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::optional<mk_format> resolve_format(const std::string& name) {
  mk_format f{};
  if (!mk_format_from_name(name.c_str(), &f)) return std::nullopt;
  return f;
}

int cmd_metrics(const std::string& path, mk_format format) {
  mk_model* raw = nullptr;
  if (auto s = mk_model_load(path.c_str(), &raw); s != MK_OK) return report(s);
  Model model(raw);

  char* diag_raw = nullptr;
  const auto valid = mk_model_validate(model.get(), format, &diag_raw);
  OwnedString diagnostics(diag_raw);
  if (valid == MK_ERR_VALIDATION) {
    std::cerr << path << ": invalid class model\n";
    if (diagnostics) std::cerr << diagnostics.get();
    return static_cast<int>(valid);
  }
  if (valid != MK_OK) return report(valid);

  char* out = nullptr;
  if (auto s = mk_model_mood_render(model.get(), format, &out); s != MK_OK) {
    return report(s);
  }
  OwnedString text(out);
  std::cout << text.get();
  return 0;
}

std::optional<Data> load(const std::string& source, int& exit_code) {
  mk_dataset* raw = nullptr;
  if (auto s = mk_dataset_load(source.c_str(), &raw); s != MK_OK) {
    exit_code = report(s);
    return std::nullopt;
  }
  return Data(raw);
}

int cmd_fit(const std::string& source, const std::string& response,
            mk_format format) {
  int code = 0;
  auto data = load(source, code);
  if (!data) return code;

  std::vector<Fit> fits;
  if (response == "all") {
    mk_fit* raw[4] = {};
    if (auto s = mk_fit_interchange(data->get(), raw); s != MK_OK) {
      return report(s);
    }
    for (auto* f : raw) fits.emplace_back(f);
  } else {
    mk_fit* raw = nullptr;
    if (auto s = mk_fit_create(data->get(), response.c_str(), nullptr, 0, &raw);
        s != MK_OK) {
      return report(s);
    }
    fits.emplace_back(raw);
  }

  std::vector<const mk_fit*> handles;
  for (const auto& f : fits) handles.push_back(f.get());
  char* out = nullptr;
  if (auto s = mk_fit_render(handles.data(), handles.size(), format, &out);
      s != MK_OK) {
    return report(s);
  }
  OwnedString text(out);
  std::cout << text.get();
  return 0;
}

// Collects "--NAME value" and "--NAME=value" pairs left over by the parser.
int parse_values(const std::vector<std::string>& extras,
                 std::map<std::string, double>& values) {
  for (std::size_t i = 0; i < extras.size(); ++i) {
    std::string arg = extras[i];
    if (arg.rfind("--", 0) != 0 || arg.size() < 3) {
      std::cerr << "moodkit: unexpected argument '" << arg << "'\n";
      return kUsageExit;
    }
    arg.erase(0, 2);
    std::string text;
    if (auto eq = arg.find('='); eq != std::string::npos) {
      text = arg.substr(eq + 1);
      arg.erase(eq);
    } else if (i + 1 < extras.size()) {
      text = extras[++i];
    } else {
      std::cerr << "moodkit: --" << arg << " needs a value\n";
      return kUsageExit;
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      std::cerr << "moodkit: --" << arg << ": not a number: '" << text << "'\n";
      return kUsageExit;
    }
    values[arg] = v;
  }
  return 0;
}

int cmd_predict(const std::string& source, const std::string& response,
                const std::vector<std::string>& extras, mk_format format) {
  std::map<std::string, double> values;
  if (int rc = parse_values(extras, values); rc != 0) return rc;

  int code = 0;
  auto data = load(source, code);
  if (!data) return code;
  mk_fit* raw = nullptr;
  if (auto s = mk_fit_create(data->get(), response.c_str(), nullptr, 0, &raw);
      s != MK_OK) {
    return report(s);
  }
  Fit fit(raw);

  std::vector<const char*> names;
  std::vector<double> inputs;
  for (const auto& [k, v] : values) {
    names.push_back(k.c_str());
    inputs.push_back(v);
  }
  double prediction = 0.0;
  if (auto s = mk_fit_predict(fit.get(), names.data(), inputs.data(),
                              names.size(), &prediction);
      s != MK_OK) {
    return report(s);
  }
  if (format == MK_FORMAT_JSON) {
    std::cout << "{\"response\": \"" << mk_fit_response(fit.get())
              << "\", \"prediction\": " << shortest(prediction) << "}\n";
  } else {
    std::cout << shortest(prediction) << "\n";
  }
  return 0;
}

int cmd_dataset(const std::string& source, mk_format format) {
  int code = 0;
  auto data = load(source, code);
  if (!data) return code;
  char* out = nullptr;
  if (auto s = mk_dataset_render(data->get(), format, &out); s != MK_OK) {
    return report(s);
  }
  OwnedString text(out);
  std::cout << text.get();
  return 0;
}

std::vector<std::string> split_columns(const std::string& list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string::npos) comma = list.size();
    if (comma > start) out.push_back(list.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

int cmd_plot(const std::string& source, const std::string& x,
             const std::string& ys, bool log10, bool svg,
             const std::string& out_dir) {
  int code = 0;
  auto data = load(source, code);
  if (!data) return code;
  const auto columns = split_columns(ys);
  if (columns.empty()) {
    std::cerr << "moodkit: --y needs at least one column\n";
    return kUsageExit;
  }

  // Render everything before touching the filesystem.
  std::vector<std::pair<std::string, OwnedString>> outputs;
  for (const auto& y : columns) {
    char* raw = nullptr;
    if (auto s = mk_dataset_scatter(data->get(), x.c_str(), y.c_str(),
                                    log10 ? 1 : 0,
                                    svg ? MK_PLOT_SVG : MK_PLOT_CSV, &raw);
        s != MK_OK) {
      return report(s);
    }
    std::string name = x + "_" + y + (log10 ? "_log10" : "") +
                       (svg ? ".svg" : ".csv");
    outputs.emplace_back(std::move(name), OwnedString(raw));
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "moodkit: IO_ERROR: cannot create '" << out_dir
              << "': " << ec.message() << "\n";
    return MK_ERR_IO;
  }
  for (const auto& [name, text] : outputs) {
    const auto path = std::filesystem::path(out_dir) / name;
    std::ofstream file(path, std::ios::binary);
    file << text.get();
    if (!file) {
      std::cerr << "moodkit: IO_ERROR: cannot write '" << path.string()
                << "'\n";
      return MK_ERR_IO;
    }
    std::cout << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MOOD design metrics and size regression models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mk_version()));

  std::string format_name = "table";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "table, json or csv")
        ->envname("MOODKIT_FORMAT")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };

  std::string model_path;
  auto* metrics = app.add_subcommand("metrics", "Compute the six MOOD metrics");
  metrics->add_option("model", model_path, "OMDL class model")->required();
  add_format(metrics);

  std::string source;
  std::string response;
  auto* fit = app.add_subcommand("fit", "Fit a regression model");
  fit->add_option("source", source, "CSV path or builtin:table1")->required();
  fit->add_option("--response", response, "response column, or 'all'")
      ->required();
  add_format(fit);

  auto* predict = app.add_subcommand(
      "predict", "Fit, then predict the response at --<COLUMN> <value> inputs");
  predict->add_option("source", source, "CSV path or builtin:table1")
      ->required();
  predict->add_option("--response", response, "response column")->required();
  predict->allow_extras();
  add_format(predict);

  auto* dataset = app.add_subcommand("dataset", "Print a dataset");
  dataset->add_option("source", source, "CSV path or builtin:table1")
      ->required();
  add_format(dataset);

  std::string x;
  std::string ys;
  std::string out_dir;
  bool log10 = false;
  bool svg = false;
  auto* plot = app.add_subcommand("plot", "Write scatter series to files");
  plot->add_option("source", source, "CSV path or builtin:table1")->required();
  plot->add_option("--x", x, "x column")->required();
  plot->add_option("--y", ys, "comma separated y columns")->required();
  plot->add_flag("--log10", log10, "log10-transform both axes");
  plot->add_flag("--svg", svg, "write SVG instead of CSV");
  plot->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  const auto format = resolve_format(format_name);
  if (!format) {
    std::cerr << "moodkit: unknown format '" << format_name << "'\n";
    return kUsageExit;
  }

  if (metrics->parsed()) return cmd_metrics(model_path, *format);
  if (fit->parsed()) return cmd_fit(source, response, *format);
  if (predict->parsed()) {
    return cmd_predict(source, response, predict->remaining(), *format);
  }
  if (dataset->parsed()) return cmd_dataset(source, *format);
  if (plot->parsed()) return cmd_plot(source, x, ys, log10, svg, out_dir);
  return kUsageExit;
}
