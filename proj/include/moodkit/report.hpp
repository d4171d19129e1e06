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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moodkit/class_model.hpp"
#include "moodkit/dataset.hpp"
#include "moodkit/mood.hpp"
#include "moodkit/omdl.hpp"
#include "moodkit/regression.hpp"

namespace moodkit {

enum class OutputFormat { kTable, kJson, kCsv };

std::optional<OutputFormat> parse_format(std::string_view name);

// JSON: {mhf, ahf, mif, aif, pf, cf, tc}, each metric an object with value
// (number or null), numerator, denominator and undefined_reason.
std::string render_mood(const MoodReport& report, OutputFormat format);

// JSON: {spec, n, coefficients: [{name, beta, std_error, t, p}], r,
// r_squared, adj_r_squared, std_error_estimate, anova: {...}}. Several fits
// render as a JSON array, or as consecutive tables.
std::string render_fit(const FitResult& fit, OutputFormat format);
std::string render_fits(std::span<const FitResult> fits, OutputFormat format);

std::string render_dataset(const Dataset& data, OutputFormat format);

// With a document, each diagnostic is located at its class declaration.
std::string render_diagnostics(std::span<const Diagnostic> diagnostics,
                               OutputFormat format,
                               const omdl::Document* document = nullptr);

// Display helpers mirroring a statistics package: fixed decimals, and
// scientific notation for magnitudes of 1e10 and above.
std::string fixed(double value, int decimals);
std::string display_sum(double value);

}  // namespace moodkit
