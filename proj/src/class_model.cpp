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

#include "moodkit/class_model.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "moodkit/error.hpp"

namespace moodkit {

std::string_view diagnostic_code_name(DiagnosticCode code) noexcept {
  switch (code) {
    case DiagnosticCode::kCycle: return "CYCLE";
    case DiagnosticCode::kUnresolvedName: return "UNRESOLVED_NAME";
    case DiagnosticCode::kDuplicateClass: return "DUPLICATE_CLASS";
    case DiagnosticCode::kDuplicateMember: return "DUPLICATE_MEMBER";
    case DiagnosticCode::kSelfReference: return "SELF_REFERENCE";
    case DiagnosticCode::kShadowing: return "SHADOWING";
    case DiagnosticCode::kBadOverride: return "BAD_OVERRIDE";
    case DiagnosticCode::kEmptyModel: return "EMPTY_MODEL";
  }
  return "UNKNOWN";
}

ClassModel::ClassModel(std::vector<ClassDecl> classes)
    : classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    index_.try_emplace(classes_[i].name, i);
  }
}

const ClassDecl* ClassModel::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &classes_[it->second];
}

namespace {

// Feature identity under multiple inheritance: (origin class, feature name).
using Feature = std::pair<std::size_t, std::string>;
using FeatureSet = std::set<Feature>;

// Resolved view of a model: parent edges as indices, available feature sets
// and strict ancestor sets. Built lazily per class with cycle protection.
class Resolved {
 public:
  explicit Resolved(const ClassModel& model) : model_(model) {
    const auto& classes = model.classes();
    parents_.resize(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (const auto& p : classes[i].parents) {
        if (const auto* decl = model.find(p)) {
          auto j = static_cast<std::size_t>(decl - classes.data());
          if (j != i && std::find(parents_[i].begin(), parents_[i].end(), j) ==
                            parents_[i].end()) {
            parents_[i].push_back(j);
          }
        }
      }
    }
    state_.assign(classes.size(), State::kUnvisited);
    methods_.resize(classes.size());
    attributes_.resize(classes.size());
    ancestors_.resize(classes.size());
  }

  std::size_t index_of(std::string_view name) const {
    const auto* decl = model_.find(name);
    if (decl == nullptr) {
      throw Error(ErrorCode::kUnknownClass,
                  "unknown class '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(decl - model_.classes().data());
  }

  const std::vector<std::size_t>& parents(std::size_t i) const {
    return parents_[i];
  }

  const FeatureSet& methods(std::size_t i) { return resolve(i), methods_[i]; }
  const FeatureSet& attributes(std::size_t i) {
    return resolve(i), attributes_[i];
  }
  const std::set<std::size_t>& ancestors(std::size_t i) {
    return resolve(i), ancestors_[i];
  }

  // Names that reach class i from its parents, before local redefinition.
  std::set<std::string> inherited_method_names(std::size_t i) {
    std::set<std::string> names;
    for (auto p : parents_[i]) {
      for (const auto& f : methods(p)) names.insert(f.second);
    }
    return names;
  }

  std::set<std::string> inherited_attribute_names(std::size_t i) {
    std::set<std::string> names;
    for (auto p : parents_[i]) {
      for (const auto& f : attributes(p)) names.insert(f.second);
    }
    return names;
  }

 private:
  enum class State { kUnvisited, kInProgress, kDone };

  void resolve(std::size_t i) {
    if (state_[i] == State::kDone) return;
    if (state_[i] == State::kInProgress) {
      throw Error(ErrorCode::kValidation,
                  "inheritance cycle through class '" +
                      model_.classes()[i].name + "'");
    }
    state_[i] = State::kInProgress;
    const auto& decl = model_.classes()[i];

    std::set<std::string> local_methods;
    for (const auto& m : decl.methods) local_methods.insert(m.name);
    std::set<std::string> local_attributes;
    for (const auto& a : decl.attributes) local_attributes.insert(a.name);

    FeatureSet methods;
    FeatureSet attributes;
    std::set<std::size_t> ancestors;
    for (const auto& name : local_methods) methods.emplace(i, name);
    for (const auto& name : local_attributes) attributes.emplace(i, name);
    for (auto p : parents_[i]) {
      resolve(p);
      for (const auto& f : methods_[p]) {
        if (!local_methods.contains(f.second)) methods.insert(f);
      }
      for (const auto& f : attributes_[p]) {
        if (!local_attributes.contains(f.second)) attributes.insert(f);
      }
      ancestors.insert(p);
      ancestors.insert(ancestors_[p].begin(), ancestors_[p].end());
    }
    methods_[i] = std::move(methods);
    attributes_[i] = std::move(attributes);
    ancestors_[i] = std::move(ancestors);
    state_[i] = State::kDone;
  }

  const ClassModel& model_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<State> state_;
  std::vector<FeatureSet> methods_;
  std::vector<FeatureSet> attributes_;
  std::vector<std::set<std::size_t>> ancestors_;
};

// Strongly connected components of the parent graph with more than one
// member, each sorted by declaration index.
std::vector<std::vector<std::size_t>> parent_cycles(
    const std::vector<std::vector<std::size_t>>& parents) {
  const std::size_t n = parents.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  int counter = 0;

  std::function<void(std::size_t)> connect = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : parents[v]) {
      if (index[w] < 0) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> component;
      std::size_t w = 0;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      if (component.size() > 1) {
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) connect(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_names(const ClassModel& model, const ClassDecl& decl,
                 std::vector<Diagnostic>& out) {
  auto add = [&](DiagnosticCode code, std::string message) {
    out.push_back({code, std::move(message), decl.name});
  };
  for (const auto& p : decl.parents) {
    if (p == decl.name) {
      add(DiagnosticCode::kSelfReference,
          "class '" + decl.name + "' lists itself as a parent");
    } else if (model.find(p) == nullptr) {
      add(DiagnosticCode::kUnresolvedName,
          "class '" + decl.name + "' extends unknown class '" + p + "'");
    }
  }
  for (const auto& u : decl.uses) {
    if (u == decl.name) {
      add(DiagnosticCode::kSelfReference,
          "class '" + decl.name + "' lists itself in uses");
    } else if (model.find(u) == nullptr) {
      add(DiagnosticCode::kUnresolvedName,
          "class '" + decl.name + "' uses unknown class '" + u + "'");
    }
  }
  std::set<std::string> seen;
  for (const auto& m : decl.methods) {
    if (!seen.insert(m.name).second) {
      add(DiagnosticCode::kDuplicateMember,
          "method '" + m.name + "' declared twice in class '" + decl.name + "'");
    }
    if (m.override_target &&
        model.find(m.override_target->class_name) == nullptr) {
      add(DiagnosticCode::kUnresolvedName,
          "method '" + decl.name + "." + m.name +
              "' overrides a method of unknown class '" +
              m.override_target->class_name + "'");
    }
  }
  seen.clear();
  for (const auto& a : decl.attributes) {
    if (!seen.insert(a.name).second) {
      add(DiagnosticCode::kDuplicateMember,
          "attribute '" + a.name + "' declared twice in class '" + decl.name +
              "'");
    }
  }
}

void check_inheritance(const ClassModel& model, Resolved& resolved,
                       std::size_t i, std::vector<Diagnostic>& out) {
  const auto& decl = model.classes()[i];
  auto add = [&](DiagnosticCode code, std::string message) {
    out.push_back({code, std::move(message), decl.name});
  };
  const auto inherited_methods = resolved.inherited_method_names(i);
  const auto inherited_attributes = resolved.inherited_attribute_names(i);
  const auto& ancestors = resolved.ancestors(i);

  for (const auto& m : decl.methods) {
    const std::string qualified = decl.name + "." + m.name;
    if (!m.override_target) {
      if (inherited_methods.contains(m.name)) {
        add(DiagnosticCode::kShadowing,
            "method '" + qualified +
                "' hides an inherited method without an overrides clause");
      }
      continue;
    }
    const auto& target = *m.override_target;
    const auto* target_decl = model.find(target.class_name);
    if (target_decl == nullptr) continue;  // reported as UNRESOLVED_NAME
    auto t = static_cast<std::size_t>(target_decl - model.classes().data());
    if (!ancestors.contains(t)) {
      add(DiagnosticCode::kBadOverride,
          "method '" + qualified + "' overrides '" + target.class_name + "." +
              target.method_name + "' but '" + target.class_name +
              "' is not an ancestor of '" + decl.name + "'");
      continue;
    }
    if (target.method_name != m.name) {
      add(DiagnosticCode::kBadOverride,
          "method '" + qualified + "' cannot override differently named '" +
              target.class_name + "." + target.method_name + "'");
      continue;
    }
    const auto& available = resolved.methods(t);
    bool found = std::any_of(available.begin(), available.end(),
                             [&](const Feature& f) {
                               return f.second == target.method_name;
                             });
    if (!found) {
      add(DiagnosticCode::kBadOverride,
          "method '" + qualified + "' overrides '" + target.class_name + "." +
              target.method_name + "', which '" + target.class_name +
              "' neither declares nor inherits");
    }
  }
  for (const auto& a : decl.attributes) {
    if (inherited_attributes.contains(a.name)) {
      add(DiagnosticCode::kShadowing,
          "attribute '" + decl.name + "." + a.name +
              "' shadows an inherited attribute");
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const ClassModel& model) {
  std::vector<Diagnostic> out;
  if (model.empty()) {
    out.push_back({DiagnosticCode::kEmptyModel,
                   "model declares no classes", std::string()});
    return out;
  }
  const auto& classes = model.classes();
  std::set<std::string> names;
  for (const auto& decl : classes) {
    if (!names.insert(decl.name).second) {
      out.push_back({DiagnosticCode::kDuplicateClass,
                     "class '" + decl.name + "' declared more than once",
                     decl.name});
    }
  }
  for (const auto& decl : classes) check_names(model, decl, out);

  Resolved resolved(model);
  std::vector<std::vector<std::size_t>> edges(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) edges[i] = resolved.parents(i);
  const auto cycles = parent_cycles(edges);
  for (const auto& cycle : cycles) {
    std::string members;
    for (auto c : cycle) {
      if (!members.empty()) members += ", ";
      members += classes[c].name;
    }
    out.push_back({DiagnosticCode::kCycle,
                   "inheritance cycle among classes {" + members + "}",
                   classes[cycle.front()].name});
  }
  // Feature resolution is only meaningful on an acyclic, resolvable graph.
  if (!out.empty()) return out;

  for (std::size_t i = 0; i < classes.size(); ++i) {
    check_inheritance(model, resolved, i, out);
  }
  return out;
}

std::vector<ClassTallies> all_tallies(const ClassModel& model) {
  const auto& classes = model.classes();
  Resolved resolved(model);
  std::vector<ClassTallies> out(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& decl = classes[i];
    auto& t = out[i];
    for (const auto& m : decl.methods) {
      (m.visibility == Visibility::kHidden ? t.m_h : t.m_v)++;
      (m.kind() == MethodKind::kOverride ? t.m_o : t.m_n)++;
    }
    for (const auto& a : decl.attributes) {
      (a.visibility == Visibility::kHidden ? t.a_h : t.a_v)++;
    }
    t.m_d = t.m_v + t.m_h;
    t.a_d = t.a_v + t.a_h;
    for (const auto& f : resolved.methods(i)) {
      if (f.first != i) ++t.m_i;
    }
    for (const auto& f : resolved.attributes(i)) {
      if (f.first != i) ++t.a_i;
    }
    t.m_a = t.m_d + t.m_i;
    t.a_a = t.a_d + t.a_i;
    for (auto a : resolved.ancestors(i)) ++out[a].dc;
  }
  return out;
}

ClassTallies tallies(const ClassModel& model, std::string_view class_name) {
  Resolved resolved(model);
  const auto i = resolved.index_of(class_name);
  return all_tallies(model)[i];
}

std::size_t descendants(const ClassModel& model, std::string_view class_name) {
  Resolved resolved(model);
  const auto target = resolved.index_of(class_name);
  std::size_t count = 0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (resolved.ancestors(i).contains(target)) ++count;
  }
  return count;
}

std::vector<std::string> ancestors(const ClassModel& model,
                                   std::string_view class_name) {
  Resolved resolved(model);
  std::vector<std::string> out;
  for (auto a : resolved.ancestors(resolved.index_of(class_name))) {
    out.push_back(model.classes()[a].name);
  }
  return out;
}

namespace {

struct CanonicalClass {
  std::set<std::string> parents;
  std::vector<MethodDecl> methods;
  std::vector<AttributeDecl> attributes;
  std::set<std::string> uses;

  friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
};

CanonicalClass canonical(const ClassDecl& decl) {
  CanonicalClass c;
  c.parents.insert(decl.parents.begin(), decl.parents.end());
  c.uses.insert(decl.uses.begin(), decl.uses.end());
  c.methods = decl.methods;
  c.attributes = decl.attributes;
  auto by_method = [](const MethodDecl& a, const MethodDecl& b) {
    return a.name < b.name;
  };
  auto by_attribute = [](const AttributeDecl& a, const AttributeDecl& b) {
    return a.name < b.name;
  };
  std::stable_sort(c.methods.begin(), c.methods.end(), by_method);
  std::stable_sort(c.attributes.begin(), c.attributes.end(), by_attribute);
  return c;
}

}  // namespace

bool equivalent(const ClassModel& a, const ClassModel& b) {
  if (a.size() != b.size()) return false;
  for (const auto& decl : a.classes()) {
    const auto* other = b.find(decl.name);
    if (other == nullptr || !(canonical(decl) == canonical(*other))) {
      return false;
    }
  }
  for (const auto& decl : b.classes()) {
    if (a.find(decl.name) == nullptr) return false;
  }
  return true;
}

}  // namespace moodkit
