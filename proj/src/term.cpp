// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ogk/term.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <stdexcept>
#include <string_view>

namespace ogk {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::array<std::string_view, 19> kReserved = {
    "generator", "primitive", "morphism", "table", "rule",  "assert", "by",
    "axiom",     "from",      "model",    "check", "upto",  "include", "family",
    "restrict",  "flip",      "limit",    "Two",   "Nat"};

}  // namespace

//------------------------------------------------------------------------------
// Ident

Ident::Ident(std::string text, std::optional<Span> span)
    : text_(std::move(text)), span_(span) {}

bool Ident::is_valid(const std::string& text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_reserved_word(const std::string& text) {
  return std::find(kReserved.begin(), kReserved.end(), text) != kReserved.end() || text == "P";
}

//------------------------------------------------------------------------------
// GenExpr

struct GenExpr::Node {
  Kind kind;
  Ident name;
  std::optional<GenExpr> a;
  std::optional<GenExpr> b;
  std::size_t depth = 1;
};

GenExpr GenExpr::two() {
  static const GenExpr g(std::make_shared<const Node>(Node{Kind::Two, {}, {}, {}, 1}));
  return g;
}

GenExpr GenExpr::nat() {
  static const GenExpr g(std::make_shared<const Node>(Node{Kind::Nat, {}, {}, {}, 1}));
  return g;
}

GenExpr GenExpr::named(Ident name) {
  return GenExpr(std::make_shared<const Node>(Node{Kind::Named, std::move(name), {}, {}, 1}));
}

GenExpr GenExpr::product(GenExpr left, GenExpr right) {
  std::size_t d = 1 + std::max(left.depth(), right.depth());
  return GenExpr(std::make_shared<const Node>(
      Node{Kind::Product, {}, std::move(left), std::move(right), d}));
}

GenExpr GenExpr::powerset(GenExpr base) {
  std::size_t d = 1 + base.depth();
  return GenExpr(
      std::make_shared<const Node>(Node{Kind::Powerset, {}, std::move(base), {}, d}));
}

GenExpr::Kind GenExpr::kind() const { return node_->kind; }
std::size_t GenExpr::depth() const { return node_->depth; }

const Ident& GenExpr::name() const {
  assert(kind() == Kind::Named);
  return node_->name;
}
const GenExpr& GenExpr::left() const {
  assert(kind() == Kind::Product);
  return *node_->a;
}
const GenExpr& GenExpr::right() const {
  assert(kind() == Kind::Product);
  return *node_->b;
}
const GenExpr& GenExpr::base() const {
  assert(kind() == Kind::Powerset);
  return *node_->a;
}

bool operator==(const GenExpr& a, const GenExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GenExpr::Kind::Two:
    case GenExpr::Kind::Nat: return true;
    case GenExpr::Kind::Named: return a.name() == b.name();
    case GenExpr::Kind::Product: return a.left() == b.left() && a.right() == b.right();
    case GenExpr::Kind::Powerset: return a.base() == b.base();
  }
  return false;
}

//------------------------------------------------------------------------------
// ObjLit

struct ObjLit::Node {
  Kind kind;
  std::string carrier;
  std::string tag;
  std::optional<ObjLit> first;
  std::optional<ObjLit> second;
  std::optional<FamilySpec> family;
};

ObjLit ObjLit::atom(std::string carrier, std::string tag) {
  return ObjLit(std::make_shared<const Node>(
      Node{Kind::Atom, std::move(carrier), std::move(tag), {}, {}, {}}));
}

ObjLit ObjLit::pair(ObjLit first, ObjLit second) {
  return ObjLit(std::make_shared<const Node>(
      Node{Kind::Pair, {}, {}, std::move(first), std::move(second), {}}));
}

ObjLit ObjLit::limit(FamilySpec family) {
  return ObjLit(
      std::make_shared<const Node>(Node{Kind::Limit, {}, {}, {}, {}, std::move(family)}));
}

ObjLit::Kind ObjLit::kind() const { return node_->kind; }
const std::string& ObjLit::carrier() const { return node_->carrier; }
const std::string& ObjLit::tag() const { return node_->tag; }
const ObjLit& ObjLit::first() const { return *node_->first; }
const ObjLit& ObjLit::second() const { return *node_->second; }
const FamilySpec& ObjLit::family() const { return *node_->family; }

bool operator==(const ObjLit& a, const ObjLit& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ObjLit::Kind::Atom: return a.carrier() == b.carrier() && a.tag() == b.tag();
    case ObjLit::Kind::Pair: return a.first() == b.first() && a.second() == b.second();
    case ObjLit::Kind::Limit: return a.family() == b.family();
  }
  return false;
}

bool operator<(const ObjLit& a, const ObjLit& b) { return render(a) < render(b); }

//------------------------------------------------------------------------------
// FnExpr

struct FnExpr::Node {
  Kind kind;
  std::optional<GenExpr> domain;
  std::optional<GenExpr> codomain;
  std::vector<Row> rows;
  BuiltinId builtin = BuiltinId::EqOf;
  std::vector<BuiltinArg> args;
  Ident ref;
};

namespace {

struct BuiltinEntry {
  BuiltinId id;
  const char* name;
};

constexpr std::array<BuiltinEntry, 5> kBuiltins = {{
    {BuiltinId::EqOf, "eq_of"},
    {BuiltinId::EmptyDetectorOf, "empty_detector_of"},
    {BuiltinId::Restrict, "restrict"},
    {BuiltinId::UnionOfFamily, "union_of_family"},
    {BuiltinId::IndicatorStream, "indicator_stream"},
}};

}  // namespace

const char* builtin_name(BuiltinId id) {
  for (const auto& e : kBuiltins)
    if (e.id == id) return e.name;
  return "?";
}

std::optional<BuiltinId> builtin_from_name(const std::string& name) {
  for (const auto& e : kBuiltins)
    if (name == e.name) return e.id;
  return std::nullopt;
}

FnExpr FnExpr::table(GenExpr domain, GenExpr codomain, std::vector<Row> rows) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Table;
  n->domain = std::move(domain);
  n->codomain = std::move(codomain);
  n->rows = std::move(rows);
  return FnExpr(std::move(n));
}

FnExpr FnExpr::builtin(BuiltinId id, std::vector<BuiltinArg> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Builtin;
  n->builtin = id;
  n->args = std::move(args);
  return FnExpr(std::move(n));
}

FnExpr FnExpr::ref(Ident name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ref;
  n->ref = std::move(name);
  return FnExpr(std::move(n));
}

FnExpr::Kind FnExpr::kind() const { return node_->kind; }
const GenExpr& FnExpr::domain() const { return *node_->domain; }
const GenExpr& FnExpr::codomain() const { return *node_->codomain; }
const std::vector<FnExpr::Row>& FnExpr::rows() const { return node_->rows; }
BuiltinId FnExpr::builtin_id() const { return node_->builtin; }
const std::vector<BuiltinArg>& FnExpr::args() const { return node_->args; }
const Ident& FnExpr::ref_name() const { return node_->ref; }

bool operator==(const FnExpr& a, const FnExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FnExpr::Kind::Table:
      return a.domain() == b.domain() && a.codomain() == b.codomain() && a.rows() == b.rows();
    case FnExpr::Kind::Builtin: return a.builtin_id() == b.builtin_id() && a.args() == b.args();
    case FnExpr::Kind::Ref: return a.ref_name() == b.ref_name();
  }
  return false;
}

//------------------------------------------------------------------------------
// Rendering

const char* judgment_head(const Judgment& j) {
  return std::visit(Overloaded{
                        [](const IsGen&) { return "Gen"; },
                        [](const IsObj&) { return "Obj"; },
                        [](const IsMor&) { return "Mor"; },
                        [](const IsBinFn&) { return "BinFn"; },
                        [](const IsDomain&) { return "Domain"; },
                        [](const SupportsQuant&) { return "SupportsQuant"; },
                        [](const IsSet&) { return "Set"; },
                        [](const IsCoherentFamily&) { return "Coherent"; },
                        [](const IsEq&) { return "Eq"; },
                        [](const HasSection&) { return "Section"; },
                    },
                    j);
}

std::string render(const GenExpr& g) {
  switch (g.kind()) {
    case GenExpr::Kind::Two: return "Two";
    case GenExpr::Kind::Nat: return "Nat";
    case GenExpr::Kind::Named: return g.name().text();
    case GenExpr::Kind::Powerset: return "P[" + render(g.base()) + "]";
    case GenExpr::Kind::Product: {
      // `*` is left-associative; a product on the right needs parentheses.
      std::string rhs = render(g.right());
      if (g.right().is(GenExpr::Kind::Product)) rhs = "(" + rhs + ")";
      return render(g.left()) + " * " + rhs;
    }
  }
  return {};
}

std::string render(const FamilySpec& f) {
  if (!f.stream) return f.name.text();
  std::string out = f.name.text() + "{\"" + *f.stream + "\"";
  if (f.flip)
    out += " flip " + std::to_string(f.flip->first) + " " + std::to_string(f.flip->second);
  return out + "}";
}

std::string render(const ObjLit& o) {
  switch (o.kind()) {
    case ObjLit::Kind::Atom: return o.carrier() + "." + o.tag();
    case ObjLit::Kind::Pair: return "(" + render(o.first()) + ", " + render(o.second()) + ")";
    case ObjLit::Kind::Limit: return "limit(" + render(o.family()) + ")";
  }
  return {};
}

namespace {

std::string render_arg(const BuiltinArg& a) {
  return std::visit(Overloaded{
                        [](const GenExpr& g) { return render(g); },
                        [](const StreamArg& s) { return "\"" + s.spec + "\""; },
                        [](std::uint64_t n) { return std::to_string(n); },
                        [](const FamilySpec& f) { return render(f); },
                    },
                    a);
}

}  // namespace

std::string render(const FnExpr& f) {
  switch (f.kind()) {
    case FnExpr::Kind::Table: {
      std::string out = "table " + render(f.domain()) + " -> " + render(f.codomain()) + " {";
      for (std::size_t i = 0; i < f.rows().size(); ++i) {
        out += i == 0 ? " " : ", ";
        out += render(f.rows()[i].first) + " -> " + render(f.rows()[i].second);
      }
      return out + " }";
    }
    case FnExpr::Kind::Builtin: {
      std::string out = std::string("rule ") + builtin_name(f.builtin_id());
      if (f.args().empty()) return out;
      out += "(";
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i) out += ", ";
        out += render_arg(f.args()[i]);
      }
      return out + ")";
    }
    case FnExpr::Kind::Ref: return f.ref_name().text();
  }
  return {};
}

std::string render(const Judgment& j) {
  std::string args = std::visit(
      Overloaded{
          [](const IsGen& x) { return render(x.gen); },
          [](const IsObj& x) { return render(x.obj) + ", " + render(x.gen); },
          [](const IsMor& x) {
            return render(x.fn) + ", " + render(x.dom) + ", " + render(x.cod);
          },
          [](const IsBinFn& x) { return render(x.fn) + ", " + render(x.dom); },
          [](const IsDomain& x) { return render(x.gen) + ", " + render(x.eq); },
          [](const SupportsQuant& x) { return render(x.gen); },
          [](const IsSet& x) { return render(x.gen); },
          [](const IsCoherentFamily& x) { return render(x.family); },
          [](const IsEq& x) {
            std::string s = render(x.lhs) + ", " + render(x.rhs);
            if (x.gen) s += ", " + render(*x.gen);
            return s;
          },
          [](const HasSection& x) {
            return render(x.fn) + ", " + render(x.dom) + ", " + render(x.cod);
          },
      },
      j);
  return std::string(judgment_head(j)) + "(" + args + ")";
}

std::string render_term(const AnyTerm& t) {
  return std::visit([](const auto& x) { return render(x); }, t);
}

bool structurally_equal(const AnyTerm& a, const AnyTerm& b) {
  if (a.index() != b.index())
    throw std::invalid_argument("structurally_equal: terms of different syntactic kinds");
  return a == b;
}

//------------------------------------------------------------------------------
// Free names

namespace {

void collect(const GenExpr& g, std::set<Ident>& out) {
  switch (g.kind()) {
    case GenExpr::Kind::Named: out.insert(g.name()); break;
    case GenExpr::Kind::Product:
      collect(g.left(), out);
      collect(g.right(), out);
      break;
    case GenExpr::Kind::Powerset: collect(g.base(), out); break;
    default: break;
  }
}

void collect(const FnExpr& f, std::set<Ident>& out) {
  if (f.kind() == FnExpr::Kind::Table) {
    collect(f.domain(), out);
    collect(f.codomain(), out);
  } else if (f.kind() == FnExpr::Kind::Builtin) {
    for (const auto& a : f.args())
      if (const auto* g = std::get_if<GenExpr>(&a)) collect(*g, out);
  }
}

void collect(const Judgment& j, std::set<Ident>& out) {
  std::visit(Overloaded{
                 [&](const IsGen& x) { collect(x.gen, out); },
                 [&](const IsObj& x) { collect(x.gen, out); },
                 [&](const IsMor& x) {
                   collect(x.fn, out);
                   collect(x.dom, out);
                   collect(x.cod, out);
                 },
                 [&](const IsBinFn& x) {
                   collect(x.fn, out);
                   collect(x.dom, out);
                 },
                 [&](const IsDomain& x) {
                   collect(x.gen, out);
                   collect(x.eq, out);
                 },
                 [&](const SupportsQuant& x) { collect(x.gen, out); },
                 [&](const IsSet& x) { collect(x.gen, out); },
                 [&](const IsCoherentFamily&) {},
                 [&](const IsEq& x) {
                   if (x.gen) collect(*x.gen, out);
                 },
                 [&](const HasSection& x) {
                   collect(x.fn, out);
                   collect(x.dom, out);
                   collect(x.cod, out);
                 },
             },
             j);
}

bool obj_mentions_nat(const ObjLit& o) {
  switch (o.kind()) {
    case ObjLit::Kind::Atom: return o.carrier() == "nat";
    case ObjLit::Kind::Pair: return obj_mentions_nat(o.first()) || obj_mentions_nat(o.second());
    case ObjLit::Kind::Limit: return true;
  }
  return false;
}

bool fn_mentions_nat(const FnExpr& f) {
  switch (f.kind()) {
    case FnExpr::Kind::Table:
      if (mentions_nat(f.domain()) || mentions_nat(f.codomain())) return true;
      for (const auto& [x, y] : f.rows())
        if (obj_mentions_nat(x) || obj_mentions_nat(y)) return true;
      return false;
    case FnExpr::Kind::Builtin:
      for (const auto& a : f.args()) {
        if (const auto* g = std::get_if<GenExpr>(&a)) {
          if (mentions_nat(*g)) return true;
        } else {
          return true;  // streams, numerals and families all live on Nat
        }
      }
      return f.builtin_id() != BuiltinId::EqOf && f.builtin_id() != BuiltinId::EmptyDetectorOf;
    case FnExpr::Kind::Ref: return false;
  }
  return false;
}

}  // namespace

std::set<Ident> free_names(const GenExpr& g) {
  std::set<Ident> out;
  collect(g, out);
  return out;
}

std::set<Ident> free_names(const FnExpr& f) {
  std::set<Ident> out;
  collect(f, out);
  return out;
}

std::set<Ident> free_names(const Judgment& j) {
  std::set<Ident> out;
  collect(j, out);
  return out;
}

bool mentions_nat(const GenExpr& g) {
  switch (g.kind()) {
    case GenExpr::Kind::Nat: return true;
    case GenExpr::Kind::Product: return mentions_nat(g.left()) || mentions_nat(g.right());
    case GenExpr::Kind::Powerset: return mentions_nat(g.base());
    default: return false;
  }
}

bool mentions_nat(const Judgment& j) {
  return std::visit(
      Overloaded{
          [](const IsGen& x) { return mentions_nat(x.gen); },
          [](const IsObj& x) { return obj_mentions_nat(x.obj) || mentions_nat(x.gen); },
          [](const IsMor& x) {
            return fn_mentions_nat(x.fn) || mentions_nat(x.dom) || mentions_nat(x.cod);
          },
          [](const IsBinFn& x) { return fn_mentions_nat(x.fn) || mentions_nat(x.dom); },
          [](const IsDomain& x) { return mentions_nat(x.gen) || fn_mentions_nat(x.eq); },
          [](const SupportsQuant& x) { return mentions_nat(x.gen); },
          [](const IsSet& x) { return mentions_nat(x.gen); },
          [](const IsCoherentFamily&) { return true; },
          [](const IsEq& x) {
            return obj_mentions_nat(x.lhs) || obj_mentions_nat(x.rhs) ||
                   (x.gen && mentions_nat(*x.gen));
          },
          [](const HasSection& x) {
            return fn_mentions_nat(x.fn) || mentions_nat(x.dom) || mentions_nat(x.cod);
          },
      },
      j);
}

}  // namespace ogk
