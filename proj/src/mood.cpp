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

#include "moodkit/mood.hpp"

#include <limits>
#include <set>
#include <vector>

namespace moodkit {

double MetricValue::value() const noexcept {
  if (!defined()) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

namespace {

MetricValue ratio(std::size_t numerator, std::size_t denominator,
                  const char* reason) {
  MetricValue v;
  v.numerator = numerator;
  v.denominator = denominator;
  if (denominator == 0) v.undefined_reason = reason;
  return v;
}

template <typename Fn>
std::size_t sum(const std::vector<ClassTallies>& all, Fn fn) {
  std::size_t total = 0;
  for (const auto& t : all) total += fn(t);
  return total;
}

MetricValue mhf_from(const std::vector<ClassTallies>& t) {
  return ratio(sum(t, [](auto& c) { return c.m_h; }),
               sum(t, [](auto& c) { return c.m_d; }), "no defined methods");
}

MetricValue ahf_from(const std::vector<ClassTallies>& t) {
  return ratio(sum(t, [](auto& c) { return c.a_h; }),
               sum(t, [](auto& c) { return c.a_d; }), "no defined attributes");
}

MetricValue mif_from(const std::vector<ClassTallies>& t) {
  return ratio(sum(t, [](auto& c) { return c.m_i; }),
               sum(t, [](auto& c) { return c.m_a; }), "no available methods");
}

MetricValue aif_from(const std::vector<ClassTallies>& t) {
  return ratio(sum(t, [](auto& c) { return c.a_i; }),
               sum(t, [](auto& c) { return c.a_a; }),
               "no available attributes");
}

MetricValue pf_from(const std::vector<ClassTallies>& t) {
  return ratio(sum(t, [](auto& c) { return c.m_o; }),
               sum(t, [](auto& c) { return c.m_n * c.dc; }),
               "no class has both new methods and descendants");
}

}  // namespace

MetricValue mhf(const ClassModel& model) { return mhf_from(all_tallies(model)); }
MetricValue ahf(const ClassModel& model) { return ahf_from(all_tallies(model)); }
MetricValue mif(const ClassModel& model) { return mif_from(all_tallies(model)); }
MetricValue aif(const ClassModel& model) { return aif_from(all_tallies(model)); }
MetricValue pf(const ClassModel& model) { return pf_from(all_tallies(model)); }

MetricValue cf(const ClassModel& model) {
  const std::size_t tc = model.size();
  std::size_t couplings = 0;
  for (const auto& decl : model.classes()) {
    const auto anc = ancestors(model, decl.name);
    const std::set<std::string> excluded(anc.begin(), anc.end());
    const std::set<std::string> targets(decl.uses.begin(), decl.uses.end());
    for (const auto& target : targets) {
      if (target != decl.name && !excluded.contains(target)) ++couplings;
    }
  }
  return ratio(couplings, tc * tc - tc, "TC < 2");
}

MoodReport compute_all(const ClassModel& model) {
  const auto t = all_tallies(model);
  MoodReport r;
  r.mhf = mhf_from(t);
  r.ahf = ahf_from(t);
  r.mif = mif_from(t);
  r.aif = aif_from(t);
  r.pf = pf_from(t);
  r.cf = cf(model);
  r.tc = model.size();
  return r;
}

}  // namespace moodkit
