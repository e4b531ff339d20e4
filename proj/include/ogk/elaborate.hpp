// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

// Executes parsed declarations against a kernel. Assertions replay their
// proof trees through kernel rules; rule parameters are read off the goal.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ogk/kernel.hpp"
#include "ogk/semantics.hpp"
#include "ogk/surface.hpp"

namespace ogk::surface {

struct AssertResult {
  std::optional<std::string> label;
  Theorem theorem;
  Span span;
  std::string file;
};

struct ModelCheckResult {
  Judgment judgment = IsGen{GenExpr::two()};
  std::uint64_t bound = 0;
  semantics::Status status = semantics::Status::Holds;
  std::uint64_t models_checked = 0;
  std::optional<std::uint64_t> truncated_at;
  std::optional<Witness> witness;
  std::string note;
};

struct Session {
  std::vector<AssertResult> asserts;
  std::vector<ModelCheckResult> checks;
  std::vector<Diagnostic> diagnostics;
  // Lexical, syntactic, version or include failures (as opposed to
  // elaboration errors in well-formed input).
  bool syntax_errors = false;
};

// Error codes beyond the parser's.
//   E0004 unknown name          E0005 proof shape or missing parameters
//   E0006 include failure       E0008 duplicate definition
//   E0009 bound out of range    E0101 cross-domain equality
//   E0102 kernel rejection
class Elaborator {
 public:
  explicit Elaborator(Kernel& kernel) : k_(kernel) {}

  // Both continue past elaboration errors, one diagnostic per failed decl.
  void run_file(const std::filesystem::path& path);
  void run_source(std::string_view source, const std::string& file,
                  const std::filesystem::path& dir);

  const Session& session() const { return s_; }
  Session take_session() { return std::move(s_); }

 private:
  void run_decl(const Decl& d, const std::filesystem::path& dir, const std::string& file);

  GenExpr resolve(const GenExpr& g) const;
  FnExpr resolve(const FnExpr& f) const;
  FamilySpec resolve(const FamilySpec& f) const;
  ObjLit resolve(const ObjLit& o) const;
  Judgment resolve(const Judgment& j) const;

  Theorem prove(const Proof& p, const std::optional<Judgment>& goal);

  Kernel& k_;
  Session s_;
  std::map<std::string, GenExpr> aliases_;
  std::map<std::string, FnExpr> morphisms_;
  std::map<std::string, FamilySpec> families_;
  std::map<std::string, Theorem> labels_;
  std::vector<std::filesystem::path> include_stack_;
};

}  // namespace ogk::surface
