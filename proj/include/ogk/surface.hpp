// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

// Lexer, parser and declaration syntax for `.og` files.
//
//   file        := decl*
//   decl        := genDecl | morDecl | familyDecl | assertDecl | checkDecl | includeDecl
//   genDecl     := "generator" IDENT ("primitive" ("{" tag ("," tag)* "}")? | ":=" genExpr) ";"
//   morDecl     := "morphism" IDENT ":" genExpr "->" genExpr ":="
//                  ("table" "{" rows? "}" | "rule" IDENT args?) ";"
//   familyDecl  := "family" IDENT ":=" "restrict" stream ("flip" INT INT)? ";"
//   assertDecl  := "assert" (IDENT ":")? judgment "by" proof ";"
//   checkDecl   := "model" "check" judgment "upto" INT ";"
//   includeDecl := "include" STRING ";"
//   genExpr     := atom ("*" atom)*          left-associative
//   atom        := "Two" | "Nat" | IDENT | "P" "[" genExpr "]" | "(" genExpr ")"
//   judgment    := HEAD "(" argList ")"
//   proof       := "axiom" IDENT | "rule" IDENT ("from" proof ("," proof)*)?
//                | IDENT | "(" proof ")"
//   object      := IDENT "." (IDENT | INT) | "(" object "," object ")" | "limit" "(" family ")"
//   fnExpr      := IDENT | "table" genExpr "->" genExpr "{" rows? "}" | "rule" IDENT args?
//   family      := IDENT ("{" stream ("flip" INT INT)? "}")?
//   stream      := STRING | BITLIST
//
// A leading `-- og-syntax N` line pins the grammar version; only 1 exists.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ogk/term.hpp"

namespace ogk::surface {

inline constexpr int kSyntaxVersion = 1;

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;  // E0001 ...
  std::string message;
  Span span;
  std::optional<std::string> note;
  std::string file;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// "file:line:col: error[E0002]: message", plus an indented note line.
std::string format(const Diagnostic& d);

struct Token {
  enum class Kind { Keyword, Ident, Symbol, Integer, Bitlist, String, Error, End };
  Kind kind = Kind::End;
  std::string text;  // strings: contents without quotes; bitlists: the digits
  Span span;
};

const char* token_kind_name(Token::Kind k);

struct LexResult {
  std::vector<Token> tokens;  // ends with one End token
  std::vector<Diagnostic> diagnostics;
};

LexResult lex(std::string_view source, const std::string& file = "");

//------------------------------------------------------------------------------
// Declarations

struct Proof {
  enum class Kind { Axiom, Rule, Ref };
  Kind kind = Kind::Ref;
  std::string name;
  std::vector<Proof> premises;  // Rule only
  Span span;

  friend bool operator==(const Proof& a, const Proof& b) {
    return a.kind == b.kind && a.name == b.name && a.premises == b.premises;
  }
};

struct GeneratorDecl {
  Ident name;
  std::optional<GenExpr> definition;                // `:=` form
  std::optional<std::vector<std::string>> objects;  // primitive with object list
  friend bool operator==(const GeneratorDecl&, const GeneratorDecl&) = default;
};

struct MorphismDecl {
  Ident name;
  GenExpr dom = GenExpr::two();
  GenExpr cod = GenExpr::two();
  FnExpr body = FnExpr::ref(Ident("_"));  // table over dom -> cod, or builtin
  friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

struct FamilyDecl {
  FamilySpec family;  // resolved
  friend bool operator==(const FamilyDecl&, const FamilyDecl&) = default;
};

struct AssertDecl {
  std::optional<Ident> label;
  Judgment goal = IsGen{GenExpr::two()};
  Proof proof;
  friend bool operator==(const AssertDecl&, const AssertDecl&) = default;
};

struct ModelCheckDecl {
  Judgment judgment = IsGen{GenExpr::two()};
  std::uint64_t bound = 0;
  friend bool operator==(const ModelCheckDecl&, const ModelCheckDecl&) = default;
};

struct IncludeDecl {
  std::string path;
  friend bool operator==(const IncludeDecl&, const IncludeDecl&) = default;
};

struct Decl {
  std::variant<GeneratorDecl, MorphismDecl, FamilyDecl, AssertDecl, ModelCheckDecl, IncludeDecl>
      node;
  Span span;

  // Spans are ignored.
  friend bool operator==(const Decl& a, const Decl& b) { return a.node == b.node; }
};

std::string render(const Proof& p);
std::string render(const Decl& d);
// Header line followed by one rendered declaration per line.
std::string render_file(const std::vector<Decl>& decls);

struct ParseResult {
  std::vector<Decl> decls;
  std::vector<Diagnostic> diagnostics;  // in source order
  bool ok() const { return diagnostics.empty(); }
};

ParseResult parse(const std::vector<Token>& tokens, const std::string& file = "");
// Lexes, checks the syntax-version header and parses.
ParseResult parse_source(std::string_view source, const std::string& file = "");

class ParseFailure : public std::runtime_error {
 public:
  explicit ParseFailure(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

// Single-term entry points; the whole input must be consumed.
Judgment parse_judgment(std::string_view text);
GenExpr parse_gen_expr(std::string_view text);
FnExpr parse_fn_expr(std::string_view text);

}  // namespace ogk::surface
