// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "ogk/semantics.hpp"
#include "ogk/stdlib.hpp"

using namespace ogk;
using namespace ogk::stdlib;

namespace {

GenExpr named(const std::string& n) { return GenExpr::named(Ident(n)); }

std::vector<std::string> tag_names(std::size_t n) {
  std::vector<std::string> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back("t" + std::to_string(i));
  return t;
}

// All functions [0, n) -> [0, m) as image vectors, in odometer order.
std::vector<std::vector<std::size_t>> all_functions(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m == 0 && n > 0) return out;
  std::vector<std::size_t> f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t k = n;
    while (k > 0 && ++f[k - 1] == m) f[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

bool surjective(const std::vector<std::size_t>& f, std::size_t m) {
  std::vector<bool> hit(m, false);
  for (auto y : f) hit[y] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

FnExpr table_of(const std::string& dom, const std::string& cod, const std::vector<std::size_t>& f) {
  std::vector<FnExpr::Row> rows;
  for (std::size_t i = 0; i < f.size(); ++i)
    rows.emplace_back(ObjLit::atom(dom, "t" + std::to_string(i)),
                      ObjLit::atom(cod, "t" + std::to_string(f[i])));
  return FnExpr::table(named(dom), named(cod), rows);
}

// Reads a section table back as indices cod -> dom.
std::vector<std::size_t> section_indices(const FnExpr& s) {
  std::vector<std::size_t> out(s.rows().size());
  for (const auto& [c, d] : s.rows()) out[std::stoul(c.tag().substr(1))] = std::stoul(d.tag().substr(1));
  return out;
}

}  // namespace

TEST_SUITE("stdlib") {

TEST_CASE("two") {
  Kernel k;
  auto two = build_two(k);
  REQUIRE(two.find<IsSet>());
  CHECK(two.find<IsSet>()->judgment() == Judgment{IsSet{GenExpr::two()}});
  const auto* dom = two.find<IsDomain>();
  REQUIRE(dom);
  CHECK(std::get<IsDomain>(dom->judgment()).eq.rows().size() == 4);
  for (const auto& t : two.theorems) CHECK(k.verify_trace(t).passed);
}

TEST_CASE("naturals") {
  Kernel k;
  auto nat = build_naturals(k);
  const auto* set = nat.find<IsSet>();
  REQUIRE(set);
  CHECK(set->judgment() == Judgment{IsSet{GenExpr::nat()}});
  const auto* dom = nat.find<IsDomain>();
  REQUIRE(dom);
  CHECK(k.eq_within_domain(*dom, ObjLit::numeral(3), ObjLit::numeral(3)).evaluate() == true);
  CHECK(k.eq_within_domain(*dom, ObjLit::numeral(3), ObjLit::numeral(4)).evaluate() == false);
  // Leaves: the generator declaration and H3, nothing else.
  std::set<std::string> leaves;
  for (const auto& l : set->leaves()) leaves.insert(l.rfind("decl", 0) == 0 ? "decl" : l);
  CHECK(leaves == std::set<std::string>{"decl", "H3"});
}

TEST_CASE("product domains") {
  Kernel k;
  auto two = build_two(k);
  auto nat = build_naturals(k);
  auto tt = build_product_domain(k, two, two);
  CHECK(tt.expr == GenExpr::product(GenExpr::two(), GenExpr::two()));
  CHECK(semantics::interpret(tt.expr, semantics::Model{}).objects.size() == 4);
  auto nt = build_product_domain(k, nat, two);
  const auto* d = nt.find<IsDomain>();
  REQUIRE(d);
  CHECK(std::get<IsDomain>(d->judgment()).eq ==
        FnExpr::builtin(BuiltinId::EqOf, {GenExpr::product(GenExpr::nat(), GenExpr::two())}));
  ConstructionResult bare;
  bare.expr = GenExpr::two();
  CHECK_THROWS_AS(build_product_domain(k, bare, two), KernelError);
}

TEST_CASE("powerset domains") {
  Kernel k;
  auto two = build_two(k);
  auto ptwo = build_powerset_domain(k, two);
  CHECK(ptwo.find<IsSet>()->judgment() == Judgment{IsSet{GenExpr::powerset(GenExpr::two())}});
  // Independent count: 2^2 binary tables on a 2-object carrier.
  CHECK(semantics::interpret(ptwo.expr, semantics::Model{}).objects.size() == (1u << 2));

  auto pnat = build_powerset_domain(k, build_naturals(k));
  CHECK(pnat.find<IsSet>()->judgment() == Judgment{IsSet{GenExpr::powerset(GenExpr::nat())}});
  auto ppnat = build_powerset_domain(k, pnat);
  const Theorem* s = ppnat.find<IsSet>();
  REQUIRE(s);
  CHECK(s->judgment() == Judgment{IsSet{GenExpr::powerset(GenExpr::powerset(GenExpr::nat()))}});
  CHECK(s->axioms_used() == std::multiset<AxiomId>{AxiomId::H3_NatSupportsQuant,
                                                   AxiomId::H4_PowersetQuant, AxiomId::H4_PowersetQuant});
  for (const auto& t : ppnat.theorems) CHECK(k.verify_trace(t).passed);

  // A bare domain lacks quantification.
  ConstructionResult dom_only;
  dom_only.expr = two.expr;
  dom_only.theorems = {*two.find<IsDomain>()};
  try {
    build_powerset_domain(k, dom_only);
    FAIL("expected a premise error");
  } catch (const KernelError& e) {
    CHECK(e.kind() == KernelError::Kind::Premise);
    CHECK(std::string(e.what()).find("SupportsQuant(Two)") != std::string::npos);
  }
}

TEST_CASE("standard constructions") {
  Kernel k;
  auto std_results = build_standard(k);
  std::vector<std::string> exprs;
  for (const auto& r : std_results) exprs.push_back(render(r.expr));
  CHECK(exprs == std::vector<std::string>{"Two", "Nat", "Two * Two", "Nat * Two", "P[Two]", "P[Nat]",
                                          "P[P[Nat]]"});
  for (const auto& r : std_results)
    for (const auto& t : r.theorems) {
      // Every theorem mentions its construction's expression.
      CHECK(render(t.judgment()).find(render(r.expr)) != std::string::npos);
    }
}

TEST_CASE("choice on a three-object set") {
  Kernel k;
  k.declare_generator(Ident("C"), std::vector<std::string>{"a", "b", "c"});
  auto C = named("C");
  FnExpr surj = FnExpr::table(C, GenExpr::two(),
                              {{ObjLit::atom("C", "a"), ObjLit::no()},
                               {ObjLit::atom("C", "b"), ObjLit::no()},
                               {ObjLit::atom("C", "c"), ObjLit::yes()}});
  auto r = choice_instance(k, surj, C, GenExpr::two());
  CHECK(r.theorem.judgment() == Judgment{HasSection{surj, C, GenExpr::two()}});
  // Oracle: every function Two -> C, filtered to those that are sections.
  std::vector<std::map<std::string, std::string>> sections;
  for (const char* s0 : {"a", "b", "c"})
    for (const char* s1 : {"a", "b", "c"}) {
      std::map<std::string, std::string> s = {{"no", s0}, {"yes", s1}};
      auto img = [](const std::string& x) { return x == "c" ? std::string("yes") : std::string("no"); };
      if (img(s0) == "no" && img(s1) == "yes") sections.push_back(s);
    }
  CHECK(sections.size() == 2);
  std::map<std::string, std::string> got;
  for (const auto& [c, d] : r.section.rows()) got[c.tag()] = d.tag();
  CHECK(std::find(sections.begin(), sections.end(), got) != sections.end());
}

TEST_CASE("choice on the identity of Two") {
  Kernel k;
  FnExpr id = FnExpr::table(GenExpr::two(), GenExpr::two(),
                            {{ObjLit::no(), ObjLit::no()}, {ObjLit::yes(), ObjLit::yes()}});
  auto r = choice_instance(k, id, GenExpr::two(), GenExpr::two());
  CHECK(r.section == id);
}

TEST_CASE("choice rejects a non-surjection with a counterexample") {
  Kernel k;
  k.declare_generator(Ident("D"), std::vector<std::string>{"a", "b"});
  FnExpr f = FnExpr::table(named("D"), GenExpr::two(),
                           {{ObjLit::atom("D", "a"), ObjLit::no()}, {ObjLit::atom("D", "b"), ObjLit::no()}});
  try {
    choice_instance(k, f, named("D"), GenExpr::two());
    FAIL("expected a counterexample");
  } catch (const ChoiceCounterexample& e) {
    CHECK(e.uncovered() == "two.yes");
  }
}

TEST_CASE("choice on every surjection between carriers of size <= 4") {
  Kernel k;
  for (std::size_t n = 0; n <= 4; ++n) k.declare_generator(Ident("S" + std::to_string(n)), tag_names(n));
  std::size_t surjections = 0;
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; m <= 4; ++m)
      for (const auto& f : all_functions(n, m)) {
        if (!surjective(f, m)) continue;
        ++surjections;
        std::string dn = "S" + std::to_string(n), cn = "S" + std::to_string(m);
        auto r = choice_instance(k, table_of(dn, cn, f), named(dn), named(cn));
        auto s = section_indices(r.section);
        REQUIRE(s.size() == m);
        for (std::size_t c = 0; c < m; ++c) CHECK(f[s[c]] == c);
      }
  // Sum over n, m <= 4 of m! S(n, m), plus the empty map onto the empty set.
  CHECK(surjections == 1 + 1 + 3 + 13 + 75);
}

}  // TEST_SUITE
