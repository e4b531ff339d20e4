// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ogk/elaborate.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ogk::surface {

namespace {

struct ElabError {
  std::string code;
  std::string message;
  std::optional<std::string> note;
};

[[noreturn]] void fail(const char* code, std::string msg,
                       std::optional<std::string> note = std::nullopt) {
  throw ElabError{code, std::move(msg), std::move(note)};
}

std::optional<GenExpr> carrier_of(const ObjLit& o) {
  switch (o.kind()) {
    case ObjLit::Kind::Atom:
      if (o.carrier() == "two") return GenExpr::two();
      if (o.carrier() == "nat") return GenExpr::nat();
      return GenExpr::named(Ident(o.carrier()));
    case ObjLit::Kind::Pair: {
      auto a = carrier_of(o.first());
      auto b = carrier_of(o.second());
      if (!a || !b) return std::nullopt;
      return GenExpr::product(*a, *b);
    }
    case ObjLit::Kind::Limit: return GenExpr::powerset(GenExpr::nat());
  }
  return std::nullopt;
}

// The static half of the cross-domain rule: literals whose carriers differ
// syntactically are never compared.
void check_same_domain(const IsEq& e) {
  auto a = carrier_of(e.lhs);
  auto b = carrier_of(e.rhs);
  if (a && b && !(*a == *b))
    fail("E0101",
         "equality is only defined within one domain: " + render(e.lhs) + " is an object of " +
             render(*a) + ", " + render(e.rhs) + " of " + render(*b));
  if (e.gen)
    for (const auto& c : {a, b})
      if (c && !(*c == *e.gen))
        fail("E0101", "equality is only defined within one domain: an operand lives in " +
                          render(*c) + ", not " + render(*e.gen));
}

template <class T>
const T* goal_as(const std::optional<Judgment>& goal) {
  return goal ? std::get_if<T>(&*goal) : nullptr;
}

[[noreturn]] void need_goal(const std::string& rule, const char* form) {
  fail("E0005", "cannot infer the parameters of " + rule,
       std::string("use it where the expected judgment has the form ") + form +
           ", or assert that judgment under a label first");
}

}  // namespace

//------------------------------------------------------------------------------
// Resolution

GenExpr Elaborator::resolve(const GenExpr& g) const {
  switch (g.kind()) {
    case GenExpr::Kind::Two:
    case GenExpr::Kind::Nat: return g;
    case GenExpr::Kind::Named: {
      auto a = aliases_.find(g.name().text());
      if (a != aliases_.end()) return a->second;
      if (!k_.is_declared(g.name().text()))
        fail("E0004", "unknown generator '" + g.name().text() + "'");
      return g;
    }
    case GenExpr::Kind::Product: return GenExpr::product(resolve(g.left()), resolve(g.right()));
    case GenExpr::Kind::Powerset: return GenExpr::powerset(resolve(g.base()));
  }
  return g;
}

FamilySpec Elaborator::resolve(const FamilySpec& f) const {
  if (f.stream) return f;
  auto it = families_.find(f.name.text());
  if (it == families_.end()) fail("E0004", "unknown family '" + f.name.text() + "'");
  return it->second;
}

ObjLit Elaborator::resolve(const ObjLit& o) const {
  switch (o.kind()) {
    case ObjLit::Kind::Atom:
      if (o.carrier() != "two" && o.carrier() != "nat" && !k_.is_declared(o.carrier()))
        fail("E0004", "unknown carrier '" + o.carrier() + "' in " + render(o));
      return o;
    case ObjLit::Kind::Pair: return ObjLit::pair(resolve(o.first()), resolve(o.second()));
    case ObjLit::Kind::Limit: return ObjLit::limit(resolve(o.family()));
  }
  return o;
}

FnExpr Elaborator::resolve(const FnExpr& f) const {
  switch (f.kind()) {
    case FnExpr::Kind::Ref: {
      auto it = morphisms_.find(f.ref_name().text());
      if (it == morphisms_.end()) fail("E0004", "unknown morphism '" + f.ref_name().text() + "'");
      return it->second;
    }
    case FnExpr::Kind::Table: {
      std::vector<FnExpr::Row> rows;
      for (const auto& [x, y] : f.rows()) rows.emplace_back(resolve(x), resolve(y));
      return FnExpr::table(resolve(f.domain()), resolve(f.codomain()), std::move(rows));
    }
    case FnExpr::Kind::Builtin: {
      std::vector<BuiltinArg> args;
      for (const auto& a : f.args()) {
        if (auto g = std::get_if<GenExpr>(&a))
          args.push_back(resolve(*g));
        else if (auto fam = std::get_if<FamilySpec>(&a))
          args.push_back(resolve(*fam));
        else
          args.push_back(a);
      }
      return FnExpr::builtin(f.builtin_id(), std::move(args));
    }
  }
  return f;
}

Judgment Elaborator::resolve(const Judgment& j) const {
  return std::visit(
      [&](const auto& x) -> Judgment {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IsGen>) return IsGen{resolve(x.gen)};
        else if constexpr (std::is_same_v<T, IsObj>) return IsObj{resolve(x.obj), resolve(x.gen)};
        else if constexpr (std::is_same_v<T, IsMor>)
          return IsMor{resolve(x.fn), resolve(x.dom), resolve(x.cod)};
        else if constexpr (std::is_same_v<T, IsBinFn>) return IsBinFn{resolve(x.fn), resolve(x.dom)};
        else if constexpr (std::is_same_v<T, IsDomain>) return IsDomain{resolve(x.gen), resolve(x.eq)};
        else if constexpr (std::is_same_v<T, SupportsQuant>) return SupportsQuant{resolve(x.gen)};
        else if constexpr (std::is_same_v<T, IsSet>) return IsSet{resolve(x.gen)};
        else if constexpr (std::is_same_v<T, IsCoherentFamily>)
          return IsCoherentFamily{resolve(x.family)};
        else if constexpr (std::is_same_v<T, IsEq>) {
          check_same_domain(x);
          std::optional<GenExpr> g;
          if (x.gen) g = resolve(*x.gen);
          return IsEq{resolve(x.lhs), resolve(x.rhs), g};
        } else
          return HasSection{resolve(x.fn), resolve(x.dom), resolve(x.cod)};
      },
      j);
}

//------------------------------------------------------------------------------
// Proofs

Theorem Elaborator::prove(const Proof& p, const std::optional<Judgment>& goal) {
  if (p.kind == Proof::Kind::Ref) {
    auto it = labels_.find(p.name);
    if (it != labels_.end()) return it->second;
    if (axiom_from_name(p.name)) return prove(Proof{Proof::Kind::Axiom, p.name, {}, p.span}, goal);
    fail("E0004", "unknown label '" + p.name + "'");
  }

  if (p.kind == Proof::Kind::Axiom) {
    auto id = axiom_from_name(p.name);
    if (!id) fail("E0004", "unknown axiom '" + p.name + "'");
    std::vector<RuleParam> params;
    if (*id == AxiomId::H2_Choice) {
      const auto* s = goal_as<HasSection>(goal);
      if (!s) need_goal("axiom H2", "Section(f, A, B)");
      params.push_back(s->fn);
    } else if (*id == AxiomId::H4_PowersetQuant) {
      if (const auto* q = goal_as<SupportsQuant>(goal); q && q->gen.is(GenExpr::Kind::Powerset))
        params.push_back(q->gen.base());
    }
    return k_.axiom(*id, params);
  }

  auto id = rule_from_name(p.name);
  if (!id) fail("E0004", "unknown rule '" + p.name + "'");
  auto arity = [&](std::size_t n) {
    if (p.premises.size() != n)
      fail("E0005", "rule " + p.name + " takes " + std::to_string(n) + " premise(s), got " +
                        std::to_string(p.premises.size()));
  };

  switch (*id) {
    case RuleId::GenIntro: {
      arity(0);
      const auto* g = goal_as<IsGen>(goal);
      if (!g) need_goal(p.name, "Gen(A)");
      return k_.gen_intro(g->gen);
    }
    case RuleId::MorIntro: {
      arity(0);
      const auto* m = goal_as<IsMor>(goal);
      if (!m) need_goal(p.name, "Mor(f, A, B)");
      return k_.mor_intro(m->fn, m->dom, m->cod);
    }
    case RuleId::BinFnFromMor: {
      arity(1);
      std::optional<Judgment> sub;
      if (const auto* b = goal_as<IsBinFn>(goal)) sub = IsMor{b->fn, b->dom, GenExpr::two()};
      return k_.binfn_from_mor(prove(p.premises[0], sub));
    }
    case RuleId::DomainIntro: {
      arity(2);
      std::optional<Judgment> g1, g2;
      if (const auto* d = goal_as<IsDomain>(goal)) {
        g1 = IsGen{d->gen};
        g2 = IsBinFn{d->eq, GenExpr::product(d->gen, d->gen)};
      }
      Theorem gen = prove(p.premises[0], g1);
      Theorem eq = prove(p.premises[1], g2);
      return k_.domain_intro(gen, eq);
    }
    case RuleId::SetIntro: {
      arity(2);
      std::optional<Judgment> g2;
      if (const auto* s = goal_as<IsSet>(goal)) g2 = SupportsQuant{s->gen};
      Theorem dom = prove(p.premises[0], std::nullopt);
      Theorem sq = prove(p.premises[1], g2);
      return k_.set_intro(dom, sq);
    }
    case RuleId::SQuantFromPowerset: {
      arity(1);
      std::optional<Judgment> sub;
      if (const auto* q = goal_as<SupportsQuant>(goal); q && q->gen.is(GenExpr::Kind::Powerset))
        sub = SupportsQuant{q->gen.base()};
      return k_.squant_from_powerset(prove(p.premises[0], sub));
    }
    case RuleId::SQuantFromSet: {
      arity(1);
      std::optional<Judgment> sub;
      if (const auto* q = goal_as<SupportsQuant>(goal)) sub = IsSet{q->gen};
      return k_.squant_from_set(prove(p.premises[0], sub));
    }
    case RuleId::FamilyIntro: {
      arity(0);
      const auto* c = goal_as<IsCoherentFamily>(goal);
      if (!c) need_goal(p.name, "Coherent(F)");
      return k_.family_intro(c->family);
    }
    case RuleId::CoherentLimit: {
      arity(1);
      std::optional<Judgment> sub;
      if (const auto* o = goal_as<IsObj>(goal); o && o->obj.kind() == ObjLit::Kind::Limit)
        sub = IsCoherentFamily{o->obj.family()};
      return k_.coherent_limit(prove(p.premises[0], sub));
    }
    case RuleId::EqWithinDomain: {
      arity(1);
      const auto* e = goal_as<IsEq>(goal);
      if (!e) need_goal(p.name, "Eq(x, y)");
      Theorem dom = prove(p.premises[0], std::nullopt);
      return k_.eq_intro(dom, e->lhs, e->rhs);
    }
  }
  fail("E0004", "unknown rule '" + p.name + "'");
}

//------------------------------------------------------------------------------
// Declarations

void Elaborator::run_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    s_.syntax_errors = true;
    s_.diagnostics.push_back({Severity::Error, "E0006", "cannot read '" + path.string() + "'",
                              Span{}, std::nullopt, path.string()});
    return;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::filesystem::path dir = path.parent_path();
  include_stack_.push_back(std::filesystem::weakly_canonical(path));
  run_source(buf.str(), path.string(), dir);
  include_stack_.pop_back();
}

void Elaborator::run_source(std::string_view source, const std::string& file,
                            const std::filesystem::path& dir) {
  ParseResult pr = parse_source(source, file);
  if (!pr.ok()) {
    s_.syntax_errors = true;
    s_.diagnostics.insert(s_.diagnostics.end(), pr.diagnostics.begin(), pr.diagnostics.end());
    return;
  }
  for (const Decl& d : pr.decls) run_decl(d, dir, file);
}

void Elaborator::run_decl(const Decl& d, const std::filesystem::path& dir, const std::string& file) {
  auto report = [&](const std::string& code, const std::string& msg,
                    std::optional<std::string> note = std::nullopt) {
    s_.diagnostics.push_back({Severity::Error, code, msg, d.span, std::move(note), file});
  };
  try {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, GeneratorDecl>) {
            const std::string& name = x.name.text();
            if (name == "two" || name == "nat")
              fail("E0008", "'" + name + "' names a builtin carrier");
            if (x.definition) {
              if (k_.is_declared(name)) fail("E0008", "generator '" + name + "' is already defined");
              GenExpr def = resolve(*x.definition);
              k_.declare_alias(x.name, def);
              aliases_.emplace(name, def);
            } else {
              if (x.objects) {
                std::set<std::string> seen;
                for (const auto& t : *x.objects)
                  if (!seen.insert(t).second)
                    fail("E0008", "object '" + t + "' is listed twice in generator '" + name + "'");
              }
              k_.declare_generator(x.name, x.objects);
            }
          } else if constexpr (std::is_same_v<T, MorphismDecl>) {
            const std::string& name = x.name.text();
            if (morphisms_.count(name)) fail("E0008", "morphism '" + name + "' is already defined");
            GenExpr dom = resolve(x.dom);
            GenExpr cod = resolve(x.cod);
            FnExpr body = resolve(x.body);
            k_.mor_intro(body, dom, cod);
            morphisms_.emplace(name, body);
          } else if constexpr (std::is_same_v<T, FamilyDecl>) {
            const std::string& name = x.family.name.text();
            if (families_.count(name)) fail("E0008", "family '" + name + "' is already defined");
            families_.emplace(name, x.family);
          } else if constexpr (std::is_same_v<T, AssertDecl>) {
            if (x.label && labels_.count(x.label->text()))
              fail("E0008", "label '" + x.label->text() + "' is already defined");
            Judgment goal = resolve(x.goal);
            Theorem thm = prove(x.proof, goal);
            bool matches = thm.judgment() == goal;
            // An Eq goal may leave its domain implicit.
            if (const auto* e = std::get_if<IsEq>(&goal); e && !e->gen)
              if (const auto* t = std::get_if<IsEq>(&thm.judgment()))
                matches = t->lhs == e->lhs && t->rhs == e->rhs;
            if (!matches)
              fail("E0102", "the proof establishes " + render(thm.judgment()) + ", not " +
                                render(goal));
            if (x.label) labels_.emplace(x.label->text(), thm);
            s_.asserts.push_back(AssertResult{
                x.label ? std::optional<std::string>(x.label->text()) : std::nullopt, thm, d.span,
                file});
          } else if constexpr (std::is_same_v<T, ModelCheckDecl>) {
            if (x.bound > 4) fail("E0009", "model check bound " + std::to_string(x.bound) + " exceeds 4");
            Judgment j = resolve(x.judgment);
            ModelCheckResult r;
            r.judgment = j;
            r.bound = x.bound;
            r.status = semantics::Status::NotFinitelyCheckable;
            for (const auto& m : semantics::canonical_models(j, k_.signature(), x.bound)) {
              semantics::Verdict v = semantics::verify_judgment(j, m);
              if (v.status == semantics::Status::NotFinitelyCheckable) {
                r.note = v.note;
                continue;
              }
              ++r.models_checked;
              if (v.truncated) r.truncated_at = std::max(r.truncated_at.value_or(0), m.nat_bound);
              if (v.status == semantics::Status::Fails) {
                r.status = semantics::Status::Fails;
                r.witness = v.witness;
                break;
              }
              r.status = semantics::Status::Holds;
            }
            s_.checks.push_back(std::move(r));
          } else {
            static_assert(std::is_same_v<T, IncludeDecl>);
            std::filesystem::path target = dir / x.path;
            auto canon = std::filesystem::weakly_canonical(target);
            if (std::find(include_stack_.begin(), include_stack_.end(), canon) != include_stack_.end()) {
              s_.syntax_errors = true;
              fail("E0006", "include cycle through '" + x.path + "'");
            }
            if (!std::filesystem::is_regular_file(target)) {
              s_.syntax_errors = true;
              fail("E0006", "cannot read included file '" + x.path + "'");
            }
            run_file(target);
          }
        },
        d.node);
  } catch (const ElabError& e) {
    report(e.code, e.message, e.note);
  } catch (const KernelError& e) {
    switch (e.kind()) {
      case KernelError::Kind::CrossDomain: report("E0101", e.what()); break;
      case KernelError::Kind::NameClash: report("E0008", e.what()); break;
      default:
        report("E0102", e.what(), std::string("kernel rejected: ") + error_kind_name(e.kind()));
    }
  } catch (const semantics::InterpretationError& e) {
    report("E0102", e.what(), "the judgment has no finite interpretation");
  }
}

}  // namespace ogk::surface
