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
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "moodkit/class_model.hpp"

namespace moodkit::omdl {

// 1-based line and column of a token's first byte.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct ClassSpans {
  SourceSpan declaration;
  std::vector<SourceSpan> methods;     // parallel to ClassDecl::methods
  std::vector<SourceSpan> attributes;  // parallel to ClassDecl::attributes
};

struct Document {
  ClassModel model;
  std::vector<ClassSpans> spans;  // parallel to model.classes()

  // Span of a class declaration, or nullptr when the class is absent.
  const SourceSpan* class_span(std::string_view name) const;
};

struct ParseError {
  SourceSpan position;
  std::string expected;
  std::string found;

  std::string message() const;
};

using ParseResult = std::variant<Document, ParseError>;

// Parses OMDL text:
//
//   document    := { class_decl } ;
//   class_decl  := "class" IDENT [ "extends" ident_list ] "{" { member } "}" ;
//   ident_list  := IDENT { "," IDENT } ;
//   member      := method_decl | attr_decl | uses_decl ;
//   method_decl := [ visibility ] "method" IDENT
//                  [ "overrides" IDENT "." IDENT ] ";" ;
//   attr_decl   := [ visibility ] "attribute" IDENT ";" ;
//   uses_decl   := "uses" ident_list ";" ;
//   visibility  := "visible" | "hidden" ;
//
// Keywords are reserved and cannot be used as identifiers. `//` starts a
// comment running to end of line. Stops at the first offending token; no
// partial model is returned. The model is not validated here.
ParseResult parse(std::string_view source);

// Like parse() but throws Error(kParse) carrying ParseError::message().
Document parse_or_throw(std::string_view source);

// Canonical OMDL text; parse(render(m)) reproduces m.
std::string render(const ClassModel& model);

bool is_keyword(std::string_view word) noexcept;

}  // namespace moodkit::omdl
