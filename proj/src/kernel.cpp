// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ogk/kernel.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "ogk/limits.hpp"

namespace ogk {

namespace {

using EK = KernelError::Kind;

[[noreturn]] void fail(EK kind, const std::string& what) { throw KernelError(kind, what); }

struct AxiomEntry {
  AxiomId id;
  const char* name;
  const char* statement;
};

constexpr std::array<AxiomEntry, 5> kAxioms = {{
    {AxiomId::H1_TwoIsSet, "H1", "there is a 2-element set: Two is a set"},
    {AxiomId::H2_Choice, "H2",
     "choice: every surjective morphism between sets admits a section"},
    {AxiomId::H3_NatSupportsQuant, "H3", "the natural numbers support quantification"},
    {AxiomId::H4_PowersetQuant, "H4",
     "if a logical domain supports quantification then so does its powerset"},
    {AxiomId::CLA_CoherentLimit, "CLA",
     "coherent limit: the union of a coherent family of finite restrictions of binary "
     "functions on Nat is a binary function on Nat"},
}};

struct RuleEntry {
  RuleId id;
  const char* name;
};

constexpr std::array<RuleEntry, 10> kRules = {{
    {RuleId::GenIntro, "gen_intro"},
    {RuleId::MorIntro, "mor_intro"},
    {RuleId::BinFnFromMor, "binfn"},
    {RuleId::DomainIntro, "domain_intro"},
    {RuleId::SetIntro, "set_intro"},
    {RuleId::SQuantFromPowerset, "H4"},
    {RuleId::SQuantFromSet, "set_unfold"},
    {RuleId::FamilyIntro, "family_intro"},
    {RuleId::CoherentLimit, "coherent_limit"},
    {RuleId::EqWithinDomain, "eq_within_domain"},
}};

}  // namespace

const char* axiom_name(AxiomId id) {
  for (const auto& a : kAxioms)
    if (a.id == id) return a.name;
  return "?";
}

const char* axiom_statement(AxiomId id) {
  for (const auto& a : kAxioms)
    if (a.id == id) return a.statement;
  return "?";
}

std::optional<AxiomId> axiom_from_name(const std::string& name) {
  for (const auto& a : kAxioms)
    if (name == a.name) return a.id;
  return std::nullopt;
}

const char* rule_name(RuleId id) {
  for (const auto& r : kRules)
    if (r.id == id) return r.name;
  return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  if (name == "squant_from_powerset") return RuleId::SQuantFromPowerset;
  for (const auto& r : kRules)
    if (name == r.name) return r.id;
  return std::nullopt;
}

const char* error_kind_name(KernelError::Kind kind) {
  switch (kind) {
    case EK::Schema: return "schema";
    case EK::NameClash: return "name-clash";
    case EK::Totality: return "totality";
    case EK::Codomain: return "codomain";
    case EK::Premise: return "premise";
    case EK::EqualityLaw: return "equality-law";
    case EK::CrossDomain: return "cross-domain-equality";
    case EK::Coherence: return "coherence";
    case EK::Hypothesis: return "hypothesis";
    case EK::Unresolved: return "unresolved";
  }
  return "?";
}

std::string TraceNode::label() const {
  switch (kind) {
    case Kind::Axiom: return axiom_name(axiom);
    case Kind::Rule: return rule_name(rule);
    case Kind::Decl: return "decl: " + decl;
  }
  return {};
}

//------------------------------------------------------------------------------
// Theorem

namespace {

void walk(const TraceNode& n, const std::function<void(const TraceNode&)>& f) {
  f(n);
  for (const auto& c : n.children) walk(*c, f);
}

}  // namespace

std::size_t Theorem::node_count() const {
  std::size_t count = 0;
  walk(*trace_, [&](const TraceNode&) { ++count; });
  return count;
}

std::multiset<AxiomId> Theorem::axioms_used() const {
  std::multiset<AxiomId> out;
  walk(*trace_, [&](const TraceNode& n) {
    if (n.kind == TraceNode::Kind::Axiom) out.insert(n.axiom);
    if (n.kind == TraceNode::Kind::Rule && n.rule == RuleId::SQuantFromPowerset)
      out.insert(AxiomId::H4_PowersetQuant);
    if (n.kind == TraceNode::Kind::Rule && n.rule == RuleId::CoherentLimit)
      out.insert(AxiomId::CLA_CoherentLimit);
  });
  return out;
}

std::vector<std::string> Theorem::leaves() const {
  std::vector<std::string> out;
  walk(*trace_, [&](const TraceNode& n) {
    if (n.children.empty()) out.push_back(n.label());
  });
  return out;
}

//------------------------------------------------------------------------------
// Declared objects

std::optional<std::vector<ObjLit>> declared_objects(const GenExpr& g, const Signature& sig) {
  switch (g.kind()) {
    case GenExpr::Kind::Two: return std::vector<ObjLit>{ObjLit::no(), ObjLit::yes()};
    case GenExpr::Kind::Named: {
      auto it = sig.find(g.name().text());
      if (it == sig.end() || !it->second.objects) return std::nullopt;
      std::vector<ObjLit> out;
      for (const auto& tag : *it->second.objects) out.push_back(ObjLit::atom(it->first, tag));
      return out;
    }
    case GenExpr::Kind::Product: {
      auto l = declared_objects(g.left(), sig);
      auto r = declared_objects(g.right(), sig);
      if (!l || !r) return std::nullopt;
      std::vector<ObjLit> out;
      for (const auto& x : *l)
        for (const auto& y : *r) out.push_back(ObjLit::pair(x, y));
      return out;
    }
    default: return std::nullopt;
  }
}

namespace {

bool is_numeral(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
         (s.size() == 1 || s[0] != '0');
}

}  // namespace

bool is_object_of(const ObjLit& o, const GenExpr& g, const Signature& sig) {
  switch (g.kind()) {
    case GenExpr::Kind::Two:
      return o.kind() == ObjLit::Kind::Atom && o.carrier() == "two" &&
             (o.tag() == "yes" || o.tag() == "no");
    case GenExpr::Kind::Nat:
      return o.kind() == ObjLit::Kind::Atom && o.carrier() == "nat" && is_numeral(o.tag());
    case GenExpr::Kind::Named: {
      if (o.kind() != ObjLit::Kind::Atom || o.carrier() != g.name().text()) return false;
      auto it = sig.find(o.carrier());
      if (it == sig.end()) return false;
      if (!it->second.objects) return true;
      const auto& objs = *it->second.objects;
      return std::find(objs.begin(), objs.end(), o.tag()) != objs.end();
    }
    case GenExpr::Kind::Product:
      return o.kind() == ObjLit::Kind::Pair && is_object_of(o.first(), g.left(), sig) &&
             is_object_of(o.second(), g.right(), sig);
    case GenExpr::Kind::Powerset:
      return g.base().is(GenExpr::Kind::Nat) && o.kind() == ObjLit::Kind::Limit &&
             o.family().resolved() && !o.family().flip;
  }
  return false;
}

//------------------------------------------------------------------------------
// Rule checking, shared by construction and replay.

namespace {

void require_well_formed(const GenExpr& g, const Signature& sig) {
  for (const Ident& n : free_names(g)) {
    auto it = sig.find(n.text());
    if (it == sig.end()) fail(EK::Unresolved, "undeclared generator '" + n.text() + "'");
    if (it->second.alias)
      fail(EK::Unresolved, "'" + n.text() + "' abbreviates " + render(*it->second.alias) +
                               " and must be expanded before reaching the kernel");
  }
}

std::string gen_decl_text(const GenExpr& g, const Signature& sig) {
  switch (g.kind()) {
    case GenExpr::Kind::Two: return "builtin Two";
    case GenExpr::Kind::Nat: return "builtin Nat";
    case GenExpr::Kind::Named: {
      std::string s = "generator " + g.name().text() + " primitive";
      const auto& objs = sig.at(g.name().text()).objects;
      if (objs) {
        s += " {";
        for (std::size_t i = 0; i < objs->size(); ++i) s += (i ? ", " : " ") + (*objs)[i];
        s += " }";
      }
      return s;
    }
    case GenExpr::Kind::Product: return "product formation: " + render(g);
    case GenExpr::Kind::Powerset: return "powerset formation: " + render(g);
  }
  return {};
}

// Whether eq_of(g) is a catalog equality: identity of tags, componentwise on
// products, extensional (via the empty detector) on powersets.
bool eq_catalog_supported(const GenExpr& g, const Signature& sig) {
  switch (g.kind()) {
    case GenExpr::Kind::Two:
    case GenExpr::Kind::Nat: return true;
    case GenExpr::Kind::Named: {
      auto it = sig.find(g.name().text());
      return it != sig.end() && it->second.objects.has_value();
    }
    case GenExpr::Kind::Product:
      return eq_catalog_supported(g.left(), sig) && eq_catalog_supported(g.right(), sig);
    case GenExpr::Kind::Powerset: return eq_catalog_supported(g.base(), sig);
  }
  return false;
}

template <class T>
const T& arg_as(const std::vector<BuiltinArg>& args, std::size_t i, const char* what,
                const char* builtin) {
  if (i >= args.size() || !std::holds_alternative<T>(args[i]))
    fail(EK::Schema, std::string("builtin ") + builtin + " expects " + what + " as argument " +
                         std::to_string(i + 1));
  return std::get<T>(args[i]);
}

// Domain and codomain a catalog builtin is guaranteed to have.
std::pair<GenExpr, GenExpr> builtin_signature(const FnExpr& f, const Signature& sig) {
  const char* name = builtin_name(f.builtin_id());
  const auto& args = f.args();
  auto arity = [&](std::size_t n) {
    if (args.size() != n)
      fail(EK::Schema, std::string("builtin ") + name + " takes " + std::to_string(n) +
                           " argument(s), got " + std::to_string(args.size()));
  };
  auto stream = [&](std::size_t i) {
    const auto& s = arg_as<StreamArg>(args, i, "a stream", name);
    try {
      limits::BitStream::parse(s.spec);
    } catch (const limits::StreamSpecError& e) {
      fail(EK::Schema, e.what());
    }
  };
  switch (f.builtin_id()) {
    case BuiltinId::EqOf: {
      arity(1);
      const auto& a = arg_as<GenExpr>(args, 0, "a generator", name);
      require_well_formed(a, sig);
      if (!eq_catalog_supported(a, sig))
        fail(EK::Schema, "eq_of has no catalog equality for " + render(a) +
                             " (primitive generators need declared objects)");
      return {GenExpr::product(a, a), GenExpr::two()};
    }
    case BuiltinId::EmptyDetectorOf: {
      arity(1);
      const auto& a = arg_as<GenExpr>(args, 0, "a generator", name);
      require_well_formed(a, sig);
      return {GenExpr::powerset(a), GenExpr::two()};
    }
    case BuiltinId::IndicatorStream:
      arity(1);
      stream(0);
      return {GenExpr::nat(), GenExpr::two()};
    case BuiltinId::Restrict:
      arity(2);
      stream(0);
      arg_as<std::uint64_t>(args, 1, "a numeral", name);
      return {GenExpr::nat(), GenExpr::two()};
    case BuiltinId::UnionOfFamily: {
      arity(1);
      const auto& fam = arg_as<FamilySpec>(args, 0, "a family", name);
      if (!fam.resolved()) fail(EK::Unresolved, "family '" + fam.name.text() + "' is unresolved");
      try {
        limits::BitStream::parse(*fam.stream);
      } catch (const limits::StreamSpecError& e) {
        fail(EK::Schema, e.what());
      }
      if (fam.flip)
        fail(EK::Coherence, "union_of_family needs a coherent family; '" + fam.name.text() +
                                "' is perturbed at stage " + std::to_string(fam.flip->first));
      return {GenExpr::nat(), GenExpr::two()};
    }
  }
  fail(EK::Schema, "unknown builtin");
}

// Rows of a table checked against dom/cod; returns the totality decl text.
std::string check_table(const FnExpr& f, const GenExpr& dom, const GenExpr& cod,
                        const Signature& sig) {
  if (!(f.domain() == dom) || !(f.codomain() == cod))
    fail(EK::Schema, "table is declared " + render(f.domain()) + " -> " + render(f.codomain()) +
                         ", not " + render(dom) + " -> " + render(cod));
  std::set<ObjLit> seen;
  for (const auto& [x, y] : f.rows()) {
    if (!seen.insert(x).second) fail(EK::Schema, "duplicate table row for " + render(x));
    if (!is_object_of(x, dom, sig))
      fail(EK::Totality, "row source " + render(x) + " is not an object of " + render(dom));
    if (!is_object_of(y, cod, sig))
      fail(EK::Codomain, "row target " + render(y) + " is not an object of " + render(cod));
  }
  auto objects = declared_objects(dom, sig);
  if (!objects)
    fail(EK::Totality, "totality of a table over " + render(dom) +
                           " is not checkable: its objects are not finitely declared");
  for (const auto& o : *objects)
    if (!seen.count(o)) fail(EK::Totality, "table has no row for " + render(o));
  return "table over " + std::to_string(objects->size()) + " objects: " + render(dom) + " -> " +
         render(cod);
}

std::string check_morphism(const FnExpr& f, const GenExpr& dom, const GenExpr& cod,
                           const Signature& sig) {
  require_well_formed(dom, sig);
  require_well_formed(cod, sig);
  switch (f.kind()) {
    case FnExpr::Kind::Ref:
      fail(EK::Unresolved, "morphism reference '" + f.ref_name().text() + "' is unresolved");
    case FnExpr::Kind::Table: return check_table(f, dom, cod, sig);
    case FnExpr::Kind::Builtin: {
      auto [d, c] = builtin_signature(f, sig);
      if (!(d == dom) || !(c == cod))
        fail(EK::Schema, std::string("catalog entry ") + builtin_name(f.builtin_id()) + " is " +
                             render(d) + " -> " + render(c) + ", not " + render(dom) + " -> " +
                             render(cod));
      return std::string("catalog ") + render(f) + ": " + render(d) + " -> " + render(c);
    }
  }
  fail(EK::Schema, "unknown function expression");
}

template <class T>
const T& premise_as(const Judgment& j, const char* expected, RuleId rule) {
  if (!std::holds_alternative<T>(j))
    fail(EK::Premise, std::string(rule_name(rule)) + " expects a premise of the form " + expected +
                          ", got " + render(j));
  return std::get<T>(j);
}

std::optional<bool> eval_eq_on_literals(const FnExpr& eq, const ObjLit& x, const ObjLit& y) {
  if (eq.kind() == FnExpr::Kind::Table) {
    ObjLit key = ObjLit::pair(x, y);
    for (const auto& [k, v] : eq.rows())
      if (k == key) return v == ObjLit::yes();
    return std::nullopt;
  }
  if (eq.kind() == FnExpr::Kind::Builtin && eq.builtin_id() == BuiltinId::EqOf) {
    std::function<std::optional<bool>(const ObjLit&, const ObjLit&)> same =
        [&](const ObjLit& a, const ObjLit& b) -> std::optional<bool> {
      if (a.kind() != b.kind()) return std::nullopt;
      switch (a.kind()) {
        case ObjLit::Kind::Atom: return a == b;
        case ObjLit::Kind::Pair: {
          auto l = same(a.first(), b.first());
          auto r = same(a.second(), b.second());
          if (!l || !r) return std::nullopt;
          return *l && *r;
        }
        case ObjLit::Kind::Limit:
          if (a == b) return true;
          return std::nullopt;
      }
      return std::nullopt;
    };
    return same(x, y);
  }
  return std::nullopt;
}

struct Step {
  Judgment conclusion;
  std::vector<std::string> decls;
};

Step check_step(const Signature& sig, TraceNode::Kind kind, AxiomId axiom, RuleId rule,
                const std::vector<RuleParam>& params, const std::vector<Judgment>& premises) {
  auto premise_count = [&](std::size_t n) {
    if (premises.size() != n)
      fail(EK::Premise, std::string(rule_name(rule)) + " takes " + std::to_string(n) +
                            " premise(s), got " + std::to_string(premises.size()));
  };
  auto param = [&]<class T>(std::size_t i, const char* what) -> const T& {
    if (i >= params.size() || !std::holds_alternative<T>(params[i]))
      fail(EK::Schema, std::string(kind == TraceNode::Kind::Axiom ? axiom_name(axiom)
                                                                  : rule_name(rule)) +
                           " expects " + what + " as parameter " + std::to_string(i + 1));
    return std::get<T>(params[i]);
  };

  if (kind == TraceNode::Kind::Axiom) {
    if (!premises.empty()) fail(EK::Schema, "axioms take no premises");
    switch (axiom) {
      case AxiomId::H1_TwoIsSet:
        if (!params.empty()) fail(EK::Schema, "H1 takes no parameters");
        return {IsSet{GenExpr::two()}, {"builtin Two"}};
      case AxiomId::H3_NatSupportsQuant:
        if (!params.empty()) fail(EK::Schema, "H3 takes no parameters");
        return {SupportsQuant{GenExpr::nat()}, {}};
      case AxiomId::H4_PowersetQuant:
        if (params.size() != 1) fail(EK::Schema, "H4 takes one generator parameter");
        fail(EK::Schema, "H4 is applied as a rule: use squant_from_powerset (rule H4)");
      case AxiomId::CLA_CoherentLimit:
        fail(EK::Schema, "the coherent limit axiom is applied through coherent_limit");
      case AxiomId::H2_Choice: {
        if (params.size() != 1) fail(EK::Schema, "H2 takes one surjection parameter");
        const auto& f = param.operator()<FnExpr>(0, "a table morphism");
        if (f.kind() != FnExpr::Kind::Table)
          fail(EK::Schema, "H2 needs a table morphism with explicit domain and codomain");
        check_morphism(f, f.domain(), f.codomain(), sig);
        auto targets = declared_objects(f.codomain(), sig);
        if (!targets)
          fail(EK::Hypothesis, "codomain " + render(f.codomain()) + " is not finitely declared");
        for (const auto& t : *targets) {
          bool covered = std::any_of(f.rows().begin(), f.rows().end(),
                                     [&](const FnExpr::Row& r) { return r.second == t; });
          if (!covered)
            fail(EK::Hypothesis, "not surjective: " + render(t) + " is not in the image");
        }
        return {HasSection{f, f.domain(), f.codomain()}, {}};
      }
    }
  }

  switch (rule) {
    case RuleId::GenIntro: {
      premise_count(0);
      const auto& g = param.operator()<GenExpr>(0, "a generator");
      require_well_formed(g, sig);
      return {IsGen{g}, {gen_decl_text(g, sig)}};
    }
    case RuleId::MorIntro: {
      premise_count(0);
      const auto& f = param.operator()<FnExpr>(0, "a function expression");
      const auto& dom = param.operator()<GenExpr>(1, "a domain");
      const auto& cod = param.operator()<GenExpr>(2, "a codomain");
      return {IsMor{f, dom, cod}, {check_morphism(f, dom, cod, sig)}};
    }
    case RuleId::BinFnFromMor: {
      premise_count(1);
      const auto& m = premise_as<IsMor>(premises[0], "Mor(f, G, Two)", rule);
      if (!m.cod.is(GenExpr::Kind::Two))
        fail(EK::Premise, "binfn needs a morphism into Two, got codomain " + render(m.cod));
      return {IsBinFn{m.fn, m.dom}, {}};
    }
    case RuleId::DomainIntro: {
      premise_count(2);
      const auto& g = premise_as<IsGen>(premises[0], "Gen(A)", rule);
      const auto& b = premise_as<IsBinFn>(premises[1], "BinFn(eq, A * A)", rule);
      if (!(b.dom == GenExpr::product(g.gen, g.gen)))
        fail(EK::Premise, "equality pairing is on " + render(b.dom) + ", expected " +
                              render(GenExpr::product(g.gen, g.gen)));
      const FnExpr& eq = b.fn;
      if (eq.kind() == FnExpr::Kind::Table) {
        for (const auto& [k, v] : eq.rows()) {
          bool same = k.first() == k.second();
          if (same != (v == ObjLit::yes()))
            fail(EK::EqualityLaw, "equality pairing returns " + render(v) + " on " + render(k));
        }
      } else if (!(eq.kind() == FnExpr::Kind::Builtin && eq.builtin_id() == BuiltinId::EqOf)) {
        fail(EK::EqualityLaw, render(eq) + " carries no equality guarantee");
      }
      return {IsDomain{g.gen, eq}, {}};
    }
    case RuleId::SetIntro: {
      premise_count(2);
      const auto& d = premise_as<IsDomain>(premises[0], "Domain(A, eq)", rule);
      const auto& q = premise_as<SupportsQuant>(premises[1], "SupportsQuant(A)", rule);
      if (!(d.gen == q.gen))
        fail(EK::Premise, "set_intro premises concern different generators: " + render(d.gen) +
                              " and " + render(q.gen));
      return {IsSet{d.gen}, {}};
    }
    case RuleId::SQuantFromPowerset: {
      premise_count(1);
      const auto& q = premise_as<SupportsQuant>(premises[0], "SupportsQuant(A)", rule);
      return {SupportsQuant{GenExpr::powerset(q.gen)}, {}};
    }
    case RuleId::SQuantFromSet: {
      premise_count(1);
      const auto& s = premise_as<IsSet>(premises[0], "Set(A)", rule);
      return {SupportsQuant{s.gen}, {}};
    }
    case RuleId::FamilyIntro: {
      premise_count(0);
      const auto& fam = param.operator()<FamilySpec>(0, "a family");
      if (!fam.resolved()) fail(EK::Unresolved, "family '" + fam.name.text() + "' is unresolved");
      std::uint64_t stages = 64;
      if (fam.flip) stages = std::max<std::uint64_t>(stages, fam.flip->first + 2);
      limits::CoherenceResult r;
      try {
        r = limits::check_family(fam, stages);
      } catch (const limits::StreamSpecError& e) {
        fail(EK::Schema, e.what());
      }
      if (!r.coherent)
        fail(EK::Coherence, "family '" + fam.name.text() + "' is not coherent: stage " +
                                std::to_string(*r.first_violation) + " disagrees with stage " +
                                std::to_string(*r.first_violation - 1));
      if (fam.flip)
        fail(EK::Coherence, "family '" + fam.name.text() + "' is perturbed at stage " +
                                std::to_string(fam.flip->first));
      return {IsCoherentFamily{fam},
              {"family " + fam.name.text() + " := restrict \"" + *fam.stream +
               "\" (restrictions of a total stream; " + std::to_string(stages) +
               " stages checked)"}};
    }
    case RuleId::CoherentLimit: {
      premise_count(1);
      const auto& c = premise_as<IsCoherentFamily>(premises[0], "Coherent(F)", rule);
      return {IsObj{ObjLit::limit(c.family), GenExpr::powerset(GenExpr::nat())}, {}};
    }
    case RuleId::EqWithinDomain: {
      premise_count(1);
      const auto& d = premise_as<IsDomain>(premises[0], "Domain(A, eq)", rule);
      const auto& x = param.operator()<ObjLit>(0, "an object");
      const auto& y = param.operator()<ObjLit>(1, "an object");
      for (const ObjLit* o : {&x, &y})
        if (!is_object_of(*o, d.gen, sig))
          fail(EK::CrossDomain, "equality is only defined within one domain: " + render(*o) +
                                    " is not an object of " + render(d.gen));
      auto v = eval_eq_on_literals(d.eq, x, y);
      if (!v) fail(EK::Premise, "equality of " + render(x) + " and " + render(y) + " is not decidable on literals");
      if (!*v) fail(EK::Premise, "the equality pairing of " + render(d.gen) + " returns two.no on (" +
                                     render(x) + ", " + render(y) + ")");
      return {IsEq{x, y, d.gen}, {}};
    }
  }
  fail(EK::Schema, "unknown rule");
}

// Recomputes `node` bottom-up, appending one NodeCheck per node in pre-order.
// Returns false if any node in the subtree fails.
bool replay(const Signature& sig, const TraceNode& node, std::vector<NodeCheck>& out) {
  std::size_t slot = out.size();
  out.push_back({node.label(), node.conclusion ? render(*node.conclusion) : "", true, ""});
  if (node.kind == TraceNode::Kind::Decl) return true;

  bool ok = true;
  std::vector<Judgment> premises;
  std::vector<std::string> decls;
  for (const auto& c : node.children) {
    if (c->kind == TraceNode::Kind::Decl) {
      decls.push_back(c->decl);
      replay(sig, *c, out);
    } else {
      ok = replay(sig, *c, out) && ok;
      if (c->conclusion) premises.push_back(*c->conclusion);
    }
  }
  NodeCheck& me = out[slot];
  if (!ok) {
    me.pass = false;
    me.message = "a premise failed to replay";
    return false;
  }
  try {
    Step step = check_step(sig, node.kind, node.axiom, node.rule, node.params, premises);
    if (!node.conclusion || !(step.conclusion == *node.conclusion)) {
      me.pass = false;
      me.message = "recomputed " + render(step.conclusion);
    } else if (step.decls != decls) {
      me.pass = false;
      me.message = "declaration leaves do not match";
    }
  } catch (const KernelError& e) {
    me.pass = false;
    me.message = e.what();
  }
  return out[slot].pass;
}

}  // namespace

//------------------------------------------------------------------------------
// Kernel

Theorem Kernel::apply(TraceNode::Kind kind, AxiomId axiom, RuleId rule,
                      std::vector<RuleParam> params, const std::vector<const Theorem*>& premises) {
  std::vector<Judgment> judgments;
  for (const Theorem* p : premises) judgments.push_back(p->judgment());
  Step step = [&] {
    std::lock_guard lock(mu_);
    return check_step(sig_, kind, axiom, rule, params, judgments);
  }();
  auto node = std::make_shared<TraceNode>();
  node->kind = kind;
  node->axiom = axiom;
  node->rule = rule;
  node->conclusion = step.conclusion;
  node->params = std::move(params);
  for (const Theorem* p : premises) node->children.push_back(p->trace_);
  for (auto& d : step.decls) {
    auto leaf = std::make_shared<TraceNode>();
    leaf->kind = TraceNode::Kind::Decl;
    leaf->decl = std::move(d);
    node->children.push_back(std::move(leaf));
  }
  return Theorem(std::move(step.conclusion), std::move(node));
}

Theorem Kernel::declare_generator(const Ident& name,
                                  std::optional<std::vector<std::string>> objects) {
  if (!Ident::is_valid(name.text()) || is_reserved_word(name.text()))
    fail(EK::Schema, "'" + name.text() + "' is not a valid generator name");
  if (objects) {
    std::set<std::string> seen;
    for (const auto& t : *objects) {
      if (!seen.insert(t).second) fail(EK::Schema, "object '" + t + "' declared twice");
    }
  }
  {
    std::lock_guard lock(mu_);
    if (sig_.count(name.text())) fail(EK::NameClash, "'" + name.text() + "' is already declared");
    sig_[name.text()] = GeneratorInfo{std::move(objects), std::nullopt};
  }
  return gen_intro(GenExpr::named(name));
}

Theorem Kernel::declare_alias(const Ident& name, const GenExpr& definition) {
  if (!Ident::is_valid(name.text()) || is_reserved_word(name.text()))
    fail(EK::Schema, "'" + name.text() + "' is not a valid generator name");
  Theorem thm = gen_intro(definition);
  std::lock_guard lock(mu_);
  if (sig_.count(name.text())) fail(EK::NameClash, "'" + name.text() + "' is already declared");
  sig_[name.text()] = GeneratorInfo{std::nullopt, definition};
  return thm;
}

Theorem Kernel::gen_intro(const GenExpr& g) {
  return apply(TraceNode::Kind::Rule, {}, RuleId::GenIntro, {g}, {});
}

Theorem Kernel::axiom(AxiomId id, const std::vector<RuleParam>& params) {
  return apply(TraceNode::Kind::Axiom, id, {}, params, {});
}

Theorem Kernel::mor_intro(const FnExpr& f, const GenExpr& dom, const GenExpr& cod) {
  return apply(TraceNode::Kind::Rule, {}, RuleId::MorIntro, {f, dom, cod}, {});
}

Theorem Kernel::binfn_from_mor(const Theorem& mor) {
  return apply(TraceNode::Kind::Rule, {}, RuleId::BinFnFromMor, {}, {&mor});
}

Theorem Kernel::domain_intro(const Theorem& gen, const Theorem& eq) {
  return apply(TraceNode::Kind::Rule, {}, RuleId::DomainIntro, {}, {&gen, &eq});
}

Theorem Kernel::set_intro(const Theorem& domain, const Theorem& squant) {
  return apply(TraceNode::Kind::Rule, {}, RuleId::SetIntro, {}, {&domain, &squant});
}

Theorem Kernel::squant_from_powerset(const Theorem& squant) {
  return apply(TraceNode::Kind::Rule, {}, RuleId::SQuantFromPowerset, {}, {&squant});
}

Theorem Kernel::squant_from_set(const Theorem& set) {
  return apply(TraceNode::Kind::Rule, {}, RuleId::SQuantFromSet, {}, {&set});
}

Theorem Kernel::family_intro(const FamilySpec& family) {
  return apply(TraceNode::Kind::Rule, {}, RuleId::FamilyIntro, {family}, {});
}

Theorem Kernel::coherent_limit(const Theorem& family) {
  return apply(TraceNode::Kind::Rule, {}, RuleId::CoherentLimit, {}, {&family});
}

EqQuery Kernel::eq_within_domain(const Theorem& domain, const ObjLit& x, const ObjLit& y) const {
  const auto* d = std::get_if<IsDomain>(&domain.judgment());
  if (!d) fail(EK::Premise, "eq_within_domain expects a Domain(A, eq) theorem");
  std::lock_guard lock(mu_);
  for (const ObjLit* o : {&x, &y})
    if (!is_object_of(*o, d->gen, sig_))
      fail(EK::CrossDomain, "equality is only defined within one domain: " + render(*o) +
                                " is not an object of " + render(d->gen));
  return EqQuery{d->gen, d->eq, x, y};
}

std::optional<bool> EqQuery::evaluate() const { return eval_eq_on_literals(eq, lhs, rhs); }

Theorem Kernel::eq_intro(const Theorem& domain, const ObjLit& x, const ObjLit& y) {
  return apply(TraceNode::Kind::Rule, {}, RuleId::EqWithinDomain, {x, y}, {&domain});
}

TraceReport Kernel::verify_trace(const Theorem& thm) const {
  TraceReport report;
  std::lock_guard lock(mu_);
  bool ok = replay(sig_, *thm.trace_, report.nodes);
  if (!thm.trace_->conclusion || !(*thm.trace_->conclusion == thm.judgment())) {
    ok = false;
    report.nodes.front().pass = false;
    report.root_message = "root of the trace concludes " +
                          (thm.trace_->conclusion ? render(*thm.trace_->conclusion) : "nothing") +
                          ", theorem claims " + render(thm.judgment());
  }
  report.passed = ok;
  return report;
}

Signature Kernel::signature() const {
  std::lock_guard lock(mu_);
  return sig_;
}

bool Kernel::is_declared(const std::string& name) const {
  std::lock_guard lock(mu_);
  return sig_.count(name) != 0;
}

}  // namespace ogk
