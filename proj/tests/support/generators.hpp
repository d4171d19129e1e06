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

// Random generators for property tests.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "moodkit/class_model.hpp"

namespace moodkit::testing {

// A structurally valid model of 1..max_classes classes. Parents are drawn
// from earlier classes, so the graph is acyclic; a method whose name is
// already inherited becomes an override of one of the inherited origins.
inline ClassModel random_model(std::mt19937_64& rng, int max_classes = 6) {
  std::uniform_int_distribution<int> class_count(1, max_classes);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution sometimes(0.3);
  const int n = class_count(rng);

  static const std::vector<std::string> kClassNames = {
      "Shape", "Circle", "Square", "Node", "Graph", "Edge", "Parser",
      "Lexer", "Token", "Widget", "Button", "Window", "Stream", "Buffer"};
  std::vector<std::string> names = kClassNames;
  std::shuffle(names.begin(), names.end(), rng);
  names.resize(static_cast<std::size_t>(n));

  // (origin index, name) sets of available methods and attributes.
  std::vector<std::set<std::pair<int, std::string>>> methods(n), attributes(n);
  std::vector<ClassDecl> classes;
  for (int i = 0; i < n; ++i) {
    ClassDecl decl;
    decl.name = names[i];
    std::vector<int> parents;
    for (int j = 0; j < i; ++j) {
      if (sometimes(rng) && parents.size() < 2) parents.push_back(j);
    }
    for (int p : parents) decl.parents.push_back(names[p]);

    std::map<std::string, std::vector<int>> inherited_methods;
    std::set<std::string> inherited_attributes;
    for (int p : parents) {
      for (const auto& [origin, name] : methods[p]) {
        inherited_methods[name].push_back(origin);
      }
      for (const auto& [origin, name] : attributes[p]) {
        inherited_attributes.insert(name);
      }
    }

    std::set<std::string> local_methods;
    std::uniform_int_distribution<int> count(0, 4);
    std::uniform_int_distribution<int> pick(0, 5);
    for (int k = count(rng); k > 0; --k) {
      std::string name = "m" + std::to_string(pick(rng));
      if (!local_methods.insert(name).second) continue;
      MethodDecl m;
      m.name = name;
      m.visibility = coin(rng) ? Visibility::kHidden : Visibility::kVisible;
      if (auto it = inherited_methods.find(name); it != inherited_methods.end()) {
        std::uniform_int_distribution<std::size_t> which(0, it->second.size() - 1);
        m.override_target = OverrideTarget{names[it->second[which(rng)]], name};
      }
      decl.methods.push_back(std::move(m));
    }
    std::set<std::string> local_attributes;
    for (int k = count(rng); k > 0; --k) {
      std::string name = "a" + std::to_string(pick(rng));
      if (inherited_attributes.contains(name)) continue;
      if (!local_attributes.insert(name).second) continue;
      decl.attributes.push_back(
          {name, coin(rng) ? Visibility::kHidden : Visibility::kVisible});
    }

    for (const auto& name : local_methods) methods[i].emplace(i, name);
    for (const auto& name : local_attributes) attributes[i].emplace(i, name);
    for (int p : parents) {
      for (const auto& f : methods[p]) {
        if (!local_methods.contains(f.second)) methods[i].insert(f);
      }
      for (const auto& f : attributes[p]) {
        if (!local_attributes.contains(f.second)) attributes[i].insert(f);
      }
    }
    classes.push_back(std::move(decl));
  }

  // Client edges may point anywhere except at the class itself, including
  // ancestors and repeated targets.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (sometimes(rng)) classes[i].uses.push_back(names[j]);
      if (sometimes(rng) && sometimes(rng)) classes[i].uses.push_back(names[j]);
    }
  }
  std::shuffle(classes.begin(), classes.end(), rng);
  return ClassModel(std::move(classes));
}

}  // namespace moodkit::testing
