// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "ogk/kernel_testing.hpp"
#include "ogk/semantics.hpp"
#include "ogk/stdlib.hpp"

using namespace ogk;
using namespace ogk::semantics;

namespace {

GenExpr A() { return GenExpr::named(Ident("A")); }

Model with_a(std::size_t n) {
  Model m;
  Carrier c{"A", {}};
  for (std::size_t i = 0; i < n; ++i) c.objects.push_back("a" + std::to_string(i));
  m.assignments["A"] = c;
  return m;
}

// Bits of a powerset tag "{0110}".
std::vector<bool> bits_of(const std::string& tag) {
  std::vector<bool> b;
  for (char ch : tag.substr(1, tag.size() - 2)) b.push_back(ch == '1');
  return b;
}

// Splits a product tag "(x,y)" at its top-level comma.
std::pair<std::string, std::string> split_pair(const std::string& tag) {
  int depth = 0;
  for (std::size_t i = 1; i + 1 < tag.size(); ++i) {
    char c = tag[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ',' && depth == 0) return {tag.substr(1, i - 1), tag.substr(i + 1, tag.size() - i - 2)};
  }
  FAIL("not a pair tag: " << tag);
  return {};
}

FnExpr table_two_squared(bool nn, bool ny, bool yn, bool yy) {
  auto y = ObjLit::yes(), n = ObjLit::no();
  auto v = [&](bool b) { return b ? y : n; };
  return FnExpr::table(GenExpr::product(GenExpr::two(), GenExpr::two()), GenExpr::two(),
                       {{ObjLit::pair(n, n), v(nn)}, {ObjLit::pair(n, y), v(ny)},
                        {ObjLit::pair(y, n), v(yn)}, {ObjLit::pair(y, y), v(yy)}});
}

// An independent hereditarily-finite universe: sets as sorted vectors of
// canonical strings.
using HF = std::string;
std::vector<HF> hf_level(unsigned rank) {
  std::vector<HF> level = {"{}"};
  for (unsigned r = 0; r < rank; ++r) {
    std::vector<HF> next;
    std::size_t n = level.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::string s = "{";
      bool first = true;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) {
          s += (first ? "" : ",") + level[i];
          first = false;
        }
      next.push_back(s + "}");
    }
    level = next;
  }
  return level;
}

}  // namespace

TEST_SUITE("semantics") {

TEST_CASE("interpretation of structural expressions") {
  Model m;
  CHECK(interpret(GenExpr::powerset(GenExpr::two()), m).objects.size() == 4);
  CHECK(interpret(GenExpr::product(GenExpr::two(), GenExpr::two()), m).objects ==
        std::vector<std::string>{"(no,no)", "(no,yes)", "(yes,no)", "(yes,yes)"});
  CHECK(interpret(GenExpr::powerset(GenExpr::powerset(GenExpr::two())), m).objects.size() == 16);
  CHECK_THROWS_AS(interpret(A(), m), InterpretationError);
  CHECK(interpret(GenExpr::two(), with_a(1)).objects == std::vector<std::string>{"no", "yes"});
}

TEST_CASE("powerset cardinality for carriers up to 8") {
  for (std::size_t n = 0; n <= 8; ++n) {
    auto objs = interpret(GenExpr::powerset(A()), with_a(n)).objects;
    std::size_t expect = 1;
    for (std::size_t i = 0; i < n; ++i) expect *= 2;
    CHECK(objs.size() == expect);
    CHECK(std::set<std::string>(objs.begin(), objs.end()).size() == expect);
  }
}

TEST_CASE("the empty detector flags exactly the all-no table") {
  for (std::size_t n = 0; n <= 8; ++n) {
    FnTable t = interpret(FnExpr::builtin(BuiltinId::EmptyDetectorOf, {A()}), with_a(n));
    REQUIRE(t.domain.objects.size() == (std::size_t{1} << n));
    std::size_t yes_count = 0;
    for (std::size_t i = 0; i < t.image.size(); ++i) {
      REQUIRE(t.image[i]);
      bool flagged = t.codomain.objects[*t.image[i]] == "yes";
      auto b = bits_of(t.domain.objects[i]);
      bool all_no = std::none_of(b.begin(), b.end(), [](bool x) { return x; });
      CHECK(flagged == all_no);
      yes_count += flagged;
    }
    CHECK(yes_count == 1);
  }
}

TEST_CASE("extensional equality on powersets agrees pointwise") {
  for (std::size_t n = 0; n <= 5; ++n) {
    FnTable t = interpret(FnExpr::builtin(BuiltinId::EqOf, {GenExpr::powerset(A())}), with_a(n));
    std::size_t pairs = std::size_t{1} << n;
    REQUIRE(t.domain.objects.size() == pairs * pairs);
    for (std::size_t i = 0; i < t.image.size(); ++i) {
      auto [f, g] = split_pair(t.domain.objects[i]);
      bool agree = bits_of(f) == bits_of(g);
      CHECK((t.codomain.objects[*t.image[i]] == "yes") == agree);
    }
  }
}

TEST_CASE("judgment verification") {
  Model m;
  CHECK(verify_judgment(IsDomain{GenExpr::two(), table_two_squared(true, false, false, true)}, m).status ==
        Status::Holds);
  Verdict bad = verify_judgment(IsDomain{GenExpr::two(), table_two_squared(true, true, true, true)}, m);
  CHECK(bad.status == Status::Fails);
  CHECK_FALSE(bad.witness.empty());

  Verdict sq = verify_judgment(SupportsQuant{A()}, with_a(3));
  CHECK(sq.status == Status::Holds);
  // Independent count of the candidate tables the detector ranges over.
  CHECK(interpret(GenExpr::powerset(A()), with_a(3)).objects.size() == 8);

  CHECK(verify_judgment(SupportsQuant{GenExpr::nat()}, m).status == Status::NotFinitelyCheckable);
  Verdict nat_dom = verify_judgment(IsDomain{GenExpr::nat(), FnExpr::builtin(BuiltinId::EqOf, {GenExpr::nat()})}, m);
  CHECK(nat_dom.status == Status::Holds);
  CHECK(nat_dom.truncated);
}

TEST_CASE("a failing witness re-evaluates to failure") {
  Model m = with_a(2);
  FnExpr f = FnExpr::table(A(), GenExpr::two(), {{ObjLit::atom("A", "a0"), ObjLit::yes()}});
  Verdict v = verify_judgment(IsMor{f, A(), GenExpr::two()}, m);
  REQUIRE(v.status == Status::Fails);
  CHECK_FALSE(v.witness.empty());
  CHECK(verify_judgment(IsMor{f, A(), GenExpr::two()}, m).witness == v.witness);
}

TEST_CASE("canonical models are ordered by size") {
  Signature sig;
  auto models = canonical_models(IsGen{GenExpr::product(A(), GenExpr::named(Ident("B")))}, sig, 2);
  CHECK(models.size() == 9);
  std::size_t last = 0;
  for (const auto& m : models) {
    std::size_t total = m.assignments.at("A").objects.size() + m.assignments.at("B").objects.size();
    CHECK(total >= last);
    last = total;
  }
  sig["C"] = GeneratorInfo{std::vector<std::string>{"p", "q"}, std::nullopt};
  auto fixed = canonical_models(IsGen{GenExpr::named(Ident("C"))}, sig, 4);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0].assignments.at("C").objects == std::vector<std::string>{"p", "q"});
  // Numerals in the judgment force Nat to be large enough.
  auto nat = canonical_models(IsObj{ObjLit::numeral(5), GenExpr::nat()}, sig, 3);
  REQUIRE_FALSE(nat.empty());
  for (const auto& m : nat) CHECK(m.nat_bound >= 5);
}

TEST_CASE("axiom instances in the default model") {
  auto items = verify_axiom_instances(default_model());
  std::map<std::string, ReportItem> by_axiom;
  for (const auto& i : items) by_axiom[i.name.substr(0, 2)] = i;
  CHECK(by_axiom.at("H1").status == ItemStatus::Pass);
  CHECK(by_axiom.at("H2").status == ItemStatus::Pass);
  CHECK(by_axiom.at("H3").status == ItemStatus::Assumed);
  CHECK(by_axiom.at("H3").detail.find("truncated at") != std::string::npos);
  CHECK(by_axiom.at("H4").status == ItemStatus::Pass);
}

TEST_CASE("an unrelated one-object carrier leaves H1 alone") {
  Model m = default_model();
  m.assignments["TwoPrime"] = Carrier{"TwoPrime", {"only"}};
  for (const auto& i : verify_axiom_instances(m))
    if (i.name.rfind("H1", 0) == 0) CHECK(i.status == ItemStatus::Pass);
}

TEST_CASE("a corrupted powerset interpretation breaks H4") {
  Model m = default_model();
  m.corrupt_powerset = true;
  bool seen = false;
  for (const auto& i : verify_axiom_instances(m))
    if (i.name.rfind("H4", 0) == 0) {
      seen = true;
      CHECK(i.status == ItemStatus::Fail);
      CHECK(i.witness.has_value());
    }
  CHECK(seen);
}

TEST_CASE("sections of surjections") {
  Model m = with_a(3);
  FnExpr f = FnExpr::table(A(), GenExpr::two(),
                           {{ObjLit::atom("A", "a0"), ObjLit::no()},
                            {ObjLit::atom("A", "a1"), ObjLit::yes()},
                            {ObjLit::atom("A", "a2"), ObjLit::no()}});
  FnTable t = interpret(f, m);
  auto s = find_section(t);
  REQUIRE(s);
  for (std::size_t c = 0; c < s->size(); ++c) CHECK(*t.image[(*s)[c]] == c);
  FnExpr g = FnExpr::table(A(), GenExpr::two(),
                           {{ObjLit::atom("A", "a0"), ObjLit::no()},
                            {ObjLit::atom("A", "a1"), ObjLit::no()},
                            {ObjLit::atom("A", "a2"), ObjLit::no()}});
  CHECK_FALSE(find_section(interpret(g, m)));
}

TEST_CASE("hereditarily finite universes") {
  std::vector<std::size_t> sizes;
  for (unsigned r = 0; r <= 3; ++r) sizes.push_back(HFUniverse::build(r).size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 4, 16});
  for (unsigned r = 0; r <= 3; ++r) CHECK(hf_level(r).size() == sizes[r]);
  CHECK_THROWS_AS(HFUniverse::build(4), BoundError);
}

TEST_CASE("ZFC-1 instances") {
  for (unsigned r = 0; r <= 3; ++r) {
    auto u = HFUniverse::build(r);
    auto fams = check_zfc1_instances(u);
    REQUIRE(fams.size() == 5);
    for (const auto& f : fams) {
      INFO(f.name << " at rank " << r);
      CHECK(f.failures == 0);
    }
    // Oracle counts from the independent universe.
    auto level = hf_level(r);
    std::size_t n = level.size();
    std::size_t separation = 0;
    for (std::size_t x = 0; x < u.size(); ++x) separation += std::size_t{1} << u.members[x].size();
    std::map<std::string, std::uint64_t> got;
    for (const auto& f : fams) got[f.name] = f.instances;
    CHECK(got.at("extensionality") == n * n);
    CHECK(got.at("pairing") == n * (n + 1) / 2);
    CHECK(got.at("union") == n);
    CHECK(got.at("powerset") == n);
    CHECK(got.at("separation") == separation);
  }
  auto rank3 = check_zfc1_instances(HFUniverse::build(3));
  for (const auto& f : rank3)
    if (f.name == "pairing") CHECK(f.instances == 136);
  for (const auto& f : rank3)
    if (f.name == "separation") CHECK(f.instances == 81);
}

TEST_CASE("soundness sweep over the standard constructions") {
  Kernel k;
  std::vector<Theorem> thms;
  for (const auto& c : stdlib::build_standard(k)) thms.insert(thms.end(), c.theorems.begin(), c.theorems.end());
  auto r = soundness_sweep(thms, k.signature(), 3);
  CHECK(r.items.size() == thms.size());
  CHECK(r.fails == 0);
  CHECK(r.holds > 0);
  for (const auto& item : r.report_items()) {
    CHECK(item.status != ItemStatus::Fail);
    if (item.name.find("Nat") != std::string::npos) CHECK(item.detail.find("truncated at") != std::string::npos);
  }
  CHECK_THROWS_AS(soundness_sweep(thms, k.signature(), 5), BoundError);
}

TEST_CASE("soundness sweep flags a forged theorem") {
  Kernel k;
  k.declare_generator(Ident("C"), std::vector<std::string>{"a", "b"});
  Theorem donor = k.axiom(AxiomId::H1_TwoIsSet);
  FnExpr const_yes = FnExpr::table(
      GenExpr::product(GenExpr::named(Ident("C")), GenExpr::named(Ident("C"))), GenExpr::two(),
      {{ObjLit::pair(ObjLit::atom("C", "a"), ObjLit::atom("C", "a")), ObjLit::yes()},
       {ObjLit::pair(ObjLit::atom("C", "a"), ObjLit::atom("C", "b")), ObjLit::yes()},
       {ObjLit::pair(ObjLit::atom("C", "b"), ObjLit::atom("C", "a")), ObjLit::yes()},
       {ObjLit::pair(ObjLit::atom("C", "b"), ObjLit::atom("C", "b")), ObjLit::yes()}});
  Theorem forged = KernelTestAccess::forge(IsDomain{GenExpr::named(Ident("C")), const_yes}, donor);
  auto r = soundness_sweep({forged}, k.signature(), 3);
  REQUIRE(r.items.size() == 1);
  CHECK(r.fails == 1);
  REQUIRE(r.items[0].witness);
  CHECK_FALSE(r.items[0].witness->empty());
}

TEST_CASE("an empty sweep is empty") {
  Kernel k;
  auto r = soundness_sweep({}, k.signature(), 3);
  CHECK(r.items.empty());
  CHECK(r.report_items().empty());
}

}  // TEST_SUITE
