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

#include "moodkit/omdl.hpp"

#include <array>
#include <cstdio>
#include <optional>
#include <utility>

#include "moodkit/error.hpp"

namespace moodkit::omdl {

namespace {

enum class Tok {
  kIdent,
  kClass,
  kExtends,
  kMethod,
  kAttribute,
  kUses,
  kOverrides,
  kVisible,
  kHidden,
  kLBrace,
  kRBrace,
  kComma,
  kDot,
  kSemicolon,
  kInvalid,
  kEnd,
};

struct Keyword {
  std::string_view text;
  Tok tok;
};

constexpr std::array<Keyword, 8> kKeywords{{
    {"class", Tok::kClass},
    {"extends", Tok::kExtends},
    {"method", Tok::kMethod},
    {"attribute", Tok::kAttribute},
    {"uses", Tok::kUses},
    {"overrides", Tok::kOverrides},
    {"visible", Tok::kVisible},
    {"hidden", Tok::kHidden},
}};

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

bool ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_trivia();
    const SourceSpan span{line_, column_};
    if (pos_ >= src_.size()) return {Tok::kEnd, {}, span};
    const char c = src_[pos_];
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
      auto word = src_.substr(start, pos_ - start);
      for (const auto& kw : kKeywords) {
        if (kw.text == word) return {kw.tok, word, span};
      }
      return {Tok::kIdent, word, span};
    }
    Tok kind = Tok::kInvalid;
    switch (c) {
      case '{': kind = Tok::kLBrace; break;
      case '}': kind = Tok::kRBrace; break;
      case ',': kind = Tok::kComma; break;
      case '.': kind = Tok::kDot; break;
      case ';': kind = Tok::kSemicolon; break;
      default: break;
    }
    auto text = src_.substr(pos_, 1);
    advance();
    return {kind, text, span};
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string describe(const Token& tok) {
  if (tok.kind == Tok::kEnd) return "end of input";
  std::string out;
  for (unsigned char c : tok.text) {
    if (c >= 0x20 && c < 0x7f) {
      out += static_cast<char>(c);
    } else {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\x%02X", c);
      out += buf;
    }
  }
  return "'" + out + "'";
}

// Thrown internally to unwind to parse(); never escapes this file.
struct Failure {
  ParseError error;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { tok_ = lexer_.next(); }

  Document document() {
    Document doc;
    std::vector<ClassDecl> classes;
    while (tok_.kind != Tok::kEnd) {
      ClassSpans spans;
      classes.push_back(class_decl(spans));
      doc.spans.push_back(std::move(spans));
    }
    doc.model = ClassModel(std::move(classes));
    return doc;
  }

 private:
  [[noreturn]] void fail(std::string expected) {
    throw Failure{{tok_.span, std::move(expected), describe(tok_)}};
  }

  Token expect(Tok kind, std::string_view what) {
    if (tok_.kind != kind) fail(std::string(what));
    return take();
  }

  Token take() {
    Token t = tok_;
    tok_ = lexer_.next();
    return t;
  }

  bool accept(Tok kind) {
    if (tok_.kind != kind) return false;
    take();
    return true;
  }

  std::string ident() {
    return std::string(expect(Tok::kIdent, "identifier").text);
  }

  std::vector<std::string> ident_list() {
    std::vector<std::string> out{ident()};
    while (accept(Tok::kComma)) out.push_back(ident());
    return out;
  }

  ClassDecl class_decl(ClassSpans& spans) {
    spans.declaration = tok_.span;
    expect(Tok::kClass, "'class'");
    ClassDecl decl;
    decl.name = ident();
    if (accept(Tok::kExtends)) decl.parents = ident_list();
    expect(Tok::kLBrace, "'{' or 'extends'");
    while (!accept(Tok::kRBrace)) member(decl, spans);
    return decl;
  }

  void member(ClassDecl& decl, ClassSpans& spans) {
    const SourceSpan start = tok_.span;
    if (accept(Tok::kUses)) {
      auto names = ident_list();
      decl.uses.insert(decl.uses.end(), names.begin(), names.end());
      expect(Tok::kSemicolon, "';' or ','");
      return;
    }
    Visibility visibility = Visibility::kVisible;
    bool explicit_visibility = false;
    if (accept(Tok::kHidden)) {
      visibility = Visibility::kHidden;
      explicit_visibility = true;
    } else if (accept(Tok::kVisible)) {
      explicit_visibility = true;
    }
    if (accept(Tok::kMethod)) {
      MethodDecl m;
      m.visibility = visibility;
      m.name = ident();
      if (accept(Tok::kOverrides)) {
        OverrideTarget target;
        target.class_name = ident();
        expect(Tok::kDot, "'.'");
        target.method_name = ident();
        m.override_target = std::move(target);
        expect(Tok::kSemicolon, "';'");
      } else {
        expect(Tok::kSemicolon, "';' or 'overrides'");
      }
      decl.methods.push_back(std::move(m));
      spans.methods.push_back(start);
    } else if (accept(Tok::kAttribute)) {
      AttributeDecl a;
      a.visibility = visibility;
      a.name = ident();
      expect(Tok::kSemicolon, "';'");
      decl.attributes.push_back(std::move(a));
      spans.attributes.push_back(start);
    } else if (explicit_visibility) {
      fail("'method' or 'attribute'");
    } else {
      fail("member declaration or '}'");
    }
  }

  Lexer lexer_;
  Token tok_;
};

const char* visibility_keyword(Visibility v) {
  return v == Visibility::kHidden ? "hidden" : "visible";
}

void append_list(std::string& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ", ";
    out += names[i];
  }
}

}  // namespace

const SourceSpan* Document::class_span(std::string_view name) const {
  const auto* decl = model.find(name);
  if (decl == nullptr) return nullptr;
  auto i = static_cast<std::size_t>(decl - model.classes().data());
  return i < spans.size() ? &spans[i].declaration : nullptr;
}

std::string ParseError::message() const {
  return std::to_string(position.line) + ":" + std::to_string(position.column) +
         ": expected " + expected + ", found " + found;
}

ParseResult parse(std::string_view source) {
  try {
    Parser parser(source);
    return parser.document();
  } catch (Failure& f) {
    return std::move(f.error);
  }
}

Document parse_or_throw(std::string_view source) {
  auto result = parse(source);
  if (auto* err = std::get_if<ParseError>(&result)) {
    throw Error(ErrorCode::kParse, err->message());
  }
  return std::get<Document>(std::move(result));
}

std::string render(const ClassModel& model) {
  std::string out;
  for (const auto& decl : model.classes()) {
    out += "class ";
    out += decl.name;
    if (!decl.parents.empty()) {
      out += " extends ";
      append_list(out, decl.parents);
    }
    out += " {\n";
    for (const auto& m : decl.methods) {
      out += "  ";
      out += visibility_keyword(m.visibility);
      out += " method ";
      out += m.name;
      if (m.override_target) {
        out += " overrides ";
        out += m.override_target->class_name;
        out += '.';
        out += m.override_target->method_name;
      }
      out += ";\n";
    }
    for (const auto& a : decl.attributes) {
      out += "  ";
      out += visibility_keyword(a.visibility);
      out += " attribute ";
      out += a.name;
      out += ";\n";
    }
    if (!decl.uses.empty()) {
      out += "  uses ";
      append_list(out, decl.uses);
      out += ";\n";
    }
    out += "}\n";
  }
  return out;
}

bool is_keyword(std::string_view word) noexcept {
  for (const auto& kw : kKeywords) {
    if (kw.text == word) return true;
  }
  return false;
}

}  // namespace moodkit::omdl
