// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ogk/elaborate.hpp"
#include "ogk/stdlib.hpp"
#include "ogk/surface.hpp"
#include "support.hpp"

using namespace ogk;
using namespace ogk::surface;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> codes(const std::vector<Diagnostic>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.code);
  return out;
}

Session elaborate_text(const std::string& src) {
  Kernel k;
  Elaborator el(k);
  el.run_source(src, "test.og", fs::current_path());
  return el.take_session();
}

std::vector<fs::path> golden_files() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(ogk::testing::corpus_dir() / "golden"))
    if (e.path().extension() == ".og") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

TEST_SUITE("surface") {

TEST_CASE("lexing") {
  auto r = lex("Set(P[Nat])");
  REQUIRE(r.diagnostics.empty());
  std::vector<std::pair<Token::Kind, std::string>> got;
  for (const auto& t : r.tokens)
    if (t.kind != Token::Kind::End) got.emplace_back(t.kind, t.text);
  using K = Token::Kind;
  CHECK(got == std::vector<std::pair<K, std::string>>{{K::Ident, "Set"}, {K::Symbol, "("}, {K::Ident, "P"},
                                                       {K::Symbol, "["}, {K::Keyword, "Nat"}, {K::Symbol, "]"},
                                                       {K::Symbol, ")"}});
  auto c = lex("-- note\n");
  CHECK(c.tokens.size() == 1);
  CHECK(c.tokens[0].kind == K::End);
  auto bad = lex("\xCE\x94");  // Greek capital delta
  REQUIRE(bad.diagnostics.size() == 1);
  CHECK(bad.diagnostics[0].code == "E0001");
}

TEST_CASE("token spans do not overlap") {
  std::string src = ogk::testing::slurp(ogk::testing::prelude_path());
  auto r = lex(src);
  for (std::size_t i = 1; i < r.tokens.size(); ++i) CHECK(r.tokens[i - 1].span.end <= r.tokens[i].span.begin);
}

TEST_CASE("parsing declarations") {
  auto r = parse_source("assert Set(Two) by axiom H1;");
  REQUIRE(r.ok());
  REQUIRE(r.decls.size() == 1);
  const auto& a = std::get<AssertDecl>(r.decls[0].node);
  CHECK(a.goal == Judgment{IsSet{GenExpr::two()}});
  CHECK(a.proof.kind == Proof::Kind::Axiom);
  CHECK(a.proof.name == "H1");

  auto g = parse_source("generator G primitive;");
  REQUIRE(g.ok());
  CHECK(std::holds_alternative<GeneratorDecl>(g.decls[0].node));
}

TEST_CASE("an unclosed parenthesis is reported and parsing recovers") {
  auto r = parse_source("assert Set(Two by;\nassert Set(Two) by axiom H1;");
  CHECK(codes(r.diagnostics) == std::vector<std::string>{"E0003"});
  CHECK(r.decls.size() == 1);
}

TEST_CASE("the syntax version header is checked") {
  CHECK(parse_source("-- og-syntax 1\nassert Set(Two) by axiom H1;").ok());
  CHECK(codes(parse_source("-- og-syntax 2\nassert Set(Two) by axiom H1;").diagnostics) ==
        std::vector<std::string>{"E0007"});
}

TEST_CASE("golden corpus round-trips through render") {
  auto files = golden_files();
  CHECK(files.size() == 20);
  for (const auto& f : files) {
    INFO(f.filename().string());
    auto first = parse_source(ogk::testing::slurp(f), f.string());
    REQUIRE(first.ok());
    REQUIRE_FALSE(first.decls.empty());
    std::string text = render_file(first.decls);
    auto second = parse_source(text);
    REQUIRE(second.ok());
    CHECK(second.decls == first.decls);
    CHECK(render_file(second.decls) == text);
  }
}

TEST_CASE("golden corpus elaborates without diagnostics") {
  for (const auto& f : golden_files()) {
    INFO(f.filename().string());
    Kernel k;
    Elaborator el(k);
    el.run_file(f);
    CHECK(codes(el.session().diagnostics).empty());
    for (const auto& a : el.session().asserts) CHECK(k.verify_trace(a.theorem).passed);
    for (const auto& c : el.session().checks) CHECK(c.status != semantics::Status::Fails);
  }
}

TEST_CASE("five independent syntax errors give five diagnostics") {
  auto path = ogk::testing::corpus_dir() / "errors" / "five_errors.og";
  auto r = parse_source(ogk::testing::slurp(path), path.string());
  CHECK(r.diagnostics.size() == 5);
  CHECK(codes(r.diagnostics) == std::vector<std::string>{"E0002", "E0004", "E0002", "E0002", "E0003"});
  // The remaining well-formed declarations survive recovery.
  CHECK(r.decls.size() == 2);
}

TEST_CASE("parsing is deterministic") {
  auto path = ogk::testing::corpus_dir() / "errors" / "five_errors.og";
  std::string src = ogk::testing::slurp(path);
  auto a = parse_source(src, "x.og");
  auto b = parse_source(src, "x.og");
  CHECK(a.decls == b.decls);
  CHECK(a.diagnostics == b.diagnostics);
}

TEST_CASE("the prelude reproduces the standard constructions") {
  Kernel k;
  Elaborator el(k);
  el.run_file(ogk::testing::prelude_path());
  const Session& s = el.session();
  REQUIRE(s.diagnostics.empty());
  Kernel k2;
  std::vector<std::string> direct;
  for (const auto& c : stdlib::build_standard(k2))
    for (const auto& t : c.theorems) direct.push_back(render(t.judgment()));
  std::vector<std::string> from_prelude;
  for (const auto& a : s.asserts) from_prelude.push_back(render(a.theorem.judgment()));
  CHECK(from_prelude == direct);
}

TEST_CASE("cross-domain equality is a diagnostic") {
  auto s = elaborate_text(
      "assert d : Domain(Two, rule eq_of(Two)) by rule domain_intro from (rule gen_intro), "
      "(rule binfn from rule mor_intro);\n"
      "assert Eq(two.yes, nat.0) by rule eq_within_domain from d;");
  CHECK(codes(s.diagnostics) == std::vector<std::string>{"E0101"});
  CHECK(s.diagnostics[0].span.line == 2);
}

TEST_CASE("H4 from H3 yields a two-leaf trace") {
  auto s = elaborate_text("assert SupportsQuant(P[Nat]) by rule H4 from H3;");
  REQUIRE(s.diagnostics.empty());
  REQUIRE(s.asserts.size() == 1);
  CHECK(s.asserts[0].theorem.judgment() == Judgment{SupportsQuant{GenExpr::powerset(GenExpr::nat())}});
  CHECK(s.asserts[0].theorem.node_count() == 2);
}

TEST_CASE("elaboration errors") {
  CHECK(codes(elaborate_text("assert Gen(Q) by rule gen_intro;").diagnostics) == std::vector<std::string>{"E0004"});
  CHECK(codes(elaborate_text("assert Set(Two) by rule set_intro;").diagnostics) ==
        std::vector<std::string>{"E0005"});
  CHECK(codes(elaborate_text("generator G primitive;\ngenerator G primitive;").diagnostics) ==
        std::vector<std::string>{"E0008"});
  CHECK(codes(elaborate_text("model check Set(Two) upto 9;").diagnostics) == std::vector<std::string>{"E0009"});
  CHECK(codes(elaborate_text("assert Set(Nat) by axiom H1;").diagnostics) == std::vector<std::string>{"E0102"});
  CHECK(codes(elaborate_text("assert SupportsQuant(P[Nat]) by rule H4 from (axiom H1);").diagnostics) ==
        std::vector<std::string>{"E0102"});
  auto missing = elaborate_text("include \"does/not/exist.og\";");
  CHECK(codes(missing.diagnostics) == std::vector<std::string>{"E0006"});
  CHECK(missing.syntax_errors);
}

TEST_CASE("elaboration continues past a failed declaration") {
  auto s = elaborate_text(
      "assert Set(Nat) by axiom H1;\n"
      "assert ok : Set(Two) by axiom H1;\n"
      "assert SupportsQuant(Two) by rule set_unfold from ok;");
  CHECK(s.diagnostics.size() == 1);
  CHECK(s.asserts.size() == 2);
}

TEST_CASE("includes resolve relative to the including file and reject cycles") {
  auto dir = fs::temp_directory_path() / "ogk_include_test";
  fs::create_directories(dir / "sub");
  {
    std::ofstream(dir / "main.og") << "-- og-syntax 1\ninclude \"sub/lib.og\";\nassert SupportsQuant(P[Two]) by rule H4 from two_sq;\n";
    std::ofstream(dir / "sub" / "lib.og") << "-- og-syntax 1\nassert two_sq : SupportsQuant(Two) by rule set_unfold from (axiom H1);\n";
    std::ofstream(dir / "a.og") << "include \"b.og\";\n";
    std::ofstream(dir / "b.og") << "include \"a.og\";\n";
  }
  Kernel k;
  Elaborator el(k);
  el.run_file(dir / "main.og");
  CHECK(el.session().diagnostics.empty());
  CHECK(el.session().asserts.size() == 2);

  Kernel k2;
  Elaborator cyc(k2);
  cyc.run_file(dir / "a.og");
  CHECK(codes(cyc.session().diagnostics) == std::vector<std::string>{"E0006"});
  fs::remove_all(dir);
}

TEST_CASE("model check declarations report verdicts") {
  auto s = elaborate_text(
      "generator C primitive {a, b, c};\n"
      "model check SupportsQuant(C) upto 3;\n"
      "model check SupportsQuant(Nat) upto 3;\n"
      "morphism k : C * C -> Two := rule eq_of(C);\n"
      "model check Domain(C, k) upto 2;");
  REQUIRE(s.diagnostics.empty());
  REQUIRE(s.checks.size() == 3);
  CHECK(s.checks[0].status == semantics::Status::Holds);
  CHECK(s.checks[1].status == semantics::Status::NotFinitelyCheckable);
  CHECK(s.checks[2].status == semantics::Status::Holds);
}

TEST_CASE("diagnostic format") {
  Diagnostic d{Severity::Error, "E0002", "expected ';'", Span{3, 7, 0, 1}, std::string("try this"), "f.og"};
  CHECK(format(d) == "f.og:3:7: error[E0002]: expected ';'\n  note: try this");
}

}  // TEST_SUITE
