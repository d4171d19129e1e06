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
#include <string_view>
#include <unordered_map>
#include <vector>

namespace moodkit {

enum class Visibility { kVisible, kHidden };

enum class MethodKind { kNew, kOverride };

struct OverrideTarget {
  std::string class_name;
  std::string method_name;

  friend bool operator==(const OverrideTarget&, const OverrideTarget&) = default;
};

struct MethodDecl {
  std::string name;
  Visibility visibility = Visibility::kVisible;
  // Present exactly when the method overrides an ancestor's method.
  std::optional<OverrideTarget> override_target;

  MethodKind kind() const noexcept {
    return override_target ? MethodKind::kOverride : MethodKind::kNew;
  }

  friend bool operator==(const MethodDecl&, const MethodDecl&) = default;
};

struct AttributeDecl {
  std::string name;
  Visibility visibility = Visibility::kVisible;

  friend bool operator==(const AttributeDecl&, const AttributeDecl&) = default;
};

struct ClassDecl {
  std::string name;
  std::vector<std::string> parents;
  std::vector<MethodDecl> methods;
  std::vector<AttributeDecl> attributes;
  // Client edges. Treated as a set: duplicates carry no extra weight.
  std::vector<std::string> uses;

  friend bool operator==(const ClassDecl&, const ClassDecl&) = default;
};

struct ClassTallies {
  std::size_t m_v = 0;  // visible methods
  std::size_t m_h = 0;  // hidden methods
  std::size_t m_d = 0;  // defined = visible + hidden
  std::size_t m_i = 0;  // inherited, not redefined locally
  std::size_t m_a = 0;  // available = defined + inherited
  std::size_t m_n = 0;  // new (non-overriding) methods
  std::size_t m_o = 0;  // overriding methods
  std::size_t a_v = 0;
  std::size_t a_h = 0;
  std::size_t a_d = 0;
  std::size_t a_i = 0;
  std::size_t a_a = 0;
  std::size_t dc = 0;  // strict descendants

  friend bool operator==(const ClassTallies&, const ClassTallies&) = default;
};

enum class DiagnosticCode {
  kCycle,
  kUnresolvedName,
  kDuplicateClass,
  kDuplicateMember,
  kSelfReference,
  kShadowing,
  kBadOverride,
  kEmptyModel,
};

std::string_view diagnostic_code_name(DiagnosticCode code) noexcept;

struct Diagnostic {
  DiagnosticCode code;
  std::string message;
  std::string class_name;
};

/// A system's classes with their features, inheritance and client edges.
///
/// The model is a plain value. Construction never fails; structural problems
/// (dangling names, cycles, shadowing) are reported by validate(). The
/// tally and descendant queries require a model that validates.
class ClassModel {
 public:
  ClassModel() = default;
  explicit ClassModel(std::vector<ClassDecl> classes);

  const std::vector<ClassDecl>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }
  bool empty() const noexcept { return classes_.empty(); }

  // Null when absent. With duplicate names the first declaration wins.
  const ClassDecl* find(std::string_view name) const;

  friend bool operator==(const ClassModel& a, const ClassModel& b) {
    return a.classes_ == b.classes_;
  }

 private:
  std::vector<ClassDecl> classes_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Empty result iff every structural invariant holds.
std::vector<Diagnostic> validate(const ClassModel& model);

// Throws Error(kUnknownClass) for an absent name.
ClassTallies tallies(const ClassModel& model, std::string_view class_name);

std::size_t descendants(const ClassModel& model, std::string_view class_name);

// Per-class tallies in declaration order; cheaper than repeated tallies().
std::vector<ClassTallies> all_tallies(const ClassModel& model);

// Strict ancestors of a class by transitive parent closure.
std::vector<std::string> ancestors(const ClassModel& model,
                                   std::string_view class_name);

// Structural equality ignoring order of classes, features, parents and uses,
// and collapsing duplicate parents/uses.
bool equivalent(const ClassModel& a, const ClassModel& b);

}  // namespace moodkit
