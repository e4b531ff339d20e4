// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ogk/stdlib.hpp"

namespace ogk::stdlib {

namespace {

using EK = KernelError::Kind;

FnExpr eq_of(const GenExpr& g) { return FnExpr::builtin(BuiltinId::EqOf, {g}); }

FnExpr diagonal_table() {
  std::vector<FnExpr::Row> rows;
  for (const auto& x : {ObjLit::no(), ObjLit::yes()})
    for (const auto& y : {ObjLit::no(), ObjLit::yes()})
      rows.emplace_back(ObjLit::pair(x, y), x == y ? ObjLit::yes() : ObjLit::no());
  return FnExpr::table(GenExpr::product(GenExpr::two(), GenExpr::two()), GenExpr::two(),
                       std::move(rows));
}

Theorem domain_with(Kernel& k, const Theorem& gen, const FnExpr& eq) {
  const GenExpr& g = std::get<IsGen>(gen.judgment()).gen;
  Theorem mor = k.mor_intro(eq, GenExpr::product(g, g), GenExpr::two());
  return k.domain_intro(gen, k.binfn_from_mor(mor));
}

}  // namespace

ConstructionResult build_two(Kernel& k) {
  ConstructionResult r;
  r.expr = GenExpr::two();
  Theorem gen = k.gen_intro(r.expr);
  Theorem dom = domain_with(k, gen, diagonal_table());
  Theorem set = k.axiom(AxiomId::H1_TwoIsSet);
  Theorem sq = k.squant_from_set(set);
  r.theorems = {gen, dom, set, sq};
  return r;
}

ConstructionResult build_naturals(Kernel& k) {
  ConstructionResult r;
  r.expr = GenExpr::nat();
  Theorem gen = k.gen_intro(r.expr);
  Theorem dom = domain_with(k, gen, eq_of(r.expr));
  Theorem sq = k.axiom(AxiomId::H3_NatSupportsQuant);
  Theorem set = k.set_intro(dom, sq);
  r.theorems = {gen, dom, sq, set};
  return r;
}

ConstructionResult build_product_domain(Kernel& k, const ConstructionResult& a,
                                        const ConstructionResult& b) {
  for (const auto* in : {&a, &b})
    if (!in->find<IsDomain>())
      throw KernelError(EK::Premise, "a product domain needs Domain(" + render(in->expr) +
                                         ", eq) for each factor");
  ConstructionResult r;
  r.expr = GenExpr::product(a.expr, b.expr);
  Theorem gen = k.gen_intro(r.expr);
  r.theorems = {gen, domain_with(k, gen, eq_of(r.expr))};
  return r;
}

ConstructionResult build_powerset_domain(Kernel& k, const ConstructionResult& a) {
  if (!a.find<IsDomain>())
    throw KernelError(EK::Premise, "powerset formation needs Domain(" + render(a.expr) + ", eq)");
  const Theorem* sq = a.find<SupportsQuant>();
  if (!sq)
    throw KernelError(EK::Premise, "H4 needs a premise SupportsQuant(" + render(a.expr) +
                                       "); only sets have domains as powersets");
  ConstructionResult r;
  r.expr = GenExpr::powerset(a.expr);
  Theorem gen = k.gen_intro(r.expr);
  Theorem dom = domain_with(k, gen, eq_of(r.expr));
  Theorem psq = k.squant_from_powerset(*sq);
  Theorem set = k.set_intro(dom, psq);
  r.theorems = {gen, dom, psq, set};
  return r;
}

std::vector<ConstructionResult> build_standard(Kernel& k) {
  auto two = build_two(k);
  auto nat = build_naturals(k);
  auto two2 = build_product_domain(k, two, two);
  auto nat_two = build_product_domain(k, nat, two);
  auto ptwo = build_powerset_domain(k, two);
  auto pnat = build_powerset_domain(k, nat);
  auto ppnat = build_powerset_domain(k, pnat);
  return {two, nat, two2, nat_two, ptwo, pnat, ppnat};
}

ChoiceCounterexample::ChoiceCounterexample(semantics::Model model, std::string uncovered)
    : std::runtime_error("not surjective in model " + model.describe() + ": " + uncovered +
                         " is not in the image"),
      model_(std::move(model)),
      uncovered_(std::move(uncovered)) {}

ChoiceResult choice_instance(Kernel& k, const FnExpr& surj, const GenExpr& dom,
                             const GenExpr& cod) {
  k.mor_intro(surj, dom, cod);
  Signature sig = k.signature();
  auto dom_objs = declared_objects(dom, sig);
  auto cod_objs = declared_objects(cod, sig);
  if (!dom_objs || !cod_objs)
    throw KernelError(EK::Hypothesis, "choice instances need finitely declared carriers");

  HasSection claim{surj, dom, cod};
  std::optional<std::vector<std::size_t>> section;
  for (const auto& m : semantics::canonical_models(claim, sig, 0)) {
    semantics::FnTable t = semantics::interpret(surj, m);
    std::vector<bool> hit(t.codomain.objects.size());
    for (const auto& y : t.image)
      if (y) hit[*y] = true;
    for (std::size_t c = 0; c < hit.size(); ++c)
      if (!hit[c]) throw ChoiceCounterexample(m, render((*cod_objs)[c]));
    auto s = semantics::find_section(t);
    if (!s) throw KernelError(EK::Hypothesis, "no section found in model " + m.describe());
    if (!section) section = s;
  }
  if (!section) throw KernelError(EK::Hypothesis, "no finite model to search for a section");

  Theorem thm = k.axiom(AxiomId::H2_Choice, {surj});
  std::vector<FnExpr::Row> rows;
  for (std::size_t c = 0; c < cod_objs->size(); ++c)
    rows.emplace_back((*cod_objs)[c], (*dom_objs)[(*section)[c]]);
  return {std::move(thm), FnExpr::table(cod, dom, std::move(rows))};
}

}  // namespace ogk::stdlib
