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

#include <cstddef>
#include <optional>
#include <string>

#include "moodkit/class_model.hpp"

namespace moodkit {

// A system-level ratio. Defined exactly when the denominator is positive.
struct MetricValue {
  std::size_t numerator = 0;
  std::size_t denominator = 0;
  std::optional<std::string> undefined_reason;

  bool defined() const noexcept { return denominator > 0; }
  // numerator / denominator; NaN when undefined.
  double value() const noexcept;

  friend bool operator==(const MetricValue&, const MetricValue&) = default;
};

struct MoodReport {
  MetricValue mhf;
  MetricValue ahf;
  MetricValue mif;
  MetricValue aif;
  MetricValue pf;
  MetricValue cf;
  std::size_t tc = 0;

  friend bool operator==(const MoodReport&, const MoodReport&) = default;
};

// Method hiding factor: sum of hidden over sum of defined methods.
MetricValue mhf(const ClassModel& model);
// Attribute hiding factor.
MetricValue ahf(const ClassModel& model);
// Method inheritance factor: inherited over available (defined + inherited).
MetricValue mif(const ClassModel& model);
// Attribute inheritance factor.
MetricValue aif(const ClassModel& model);
// Polymorphism factor: overrides over sum of new methods x descendants.
MetricValue pf(const ClassModel& model);
// Coupling factor: client relations not due to inheritance over TC^2 - TC.
MetricValue cf(const ClassModel& model);

MoodReport compute_all(const ClassModel& model);

}  // namespace moodkit
