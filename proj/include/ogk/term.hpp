// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

// Immutable syntax trees for generator expressions, object literals,
// function expressions and judgments. No logic lives here: equality is
// structural and rendering targets the `.og` surface grammar.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ogk {

struct Span {
  int line = 0;
  int column = 0;
  std::size_t begin = 0;  // byte offsets, half-open
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

// A name. Two Idents are the same name iff their text is equal.
class Ident {
 public:
  Ident() = default;
  explicit Ident(std::string text, std::optional<Span> span = std::nullopt);

  const std::string& text() const { return text_; }
  const std::optional<Span>& span() const { return span_; }

  static bool is_valid(const std::string& text);

  friend bool operator==(const Ident& a, const Ident& b) { return a.text_ == b.text_; }
  friend bool operator<(const Ident& a, const Ident& b) { return a.text_ < b.text_; }

 private:
  std::string text_;
  std::optional<Span> span_;
};

//------------------------------------------------------------------------------
// Generator expressions

class GenExpr {
 public:
  enum class Kind { Two, Nat, Named, Product, Powerset };

  static GenExpr two();
  static GenExpr nat();
  static GenExpr named(Ident name);
  static GenExpr product(GenExpr left, GenExpr right);
  static GenExpr powerset(GenExpr base);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const Ident& name() const;      // Named
  const GenExpr& left() const;    // Product
  const GenExpr& right() const;   // Product
  const GenExpr& base() const;    // Powerset

  std::size_t depth() const;

  friend bool operator==(const GenExpr& a, const GenExpr& b);

 private:
  struct Node;
  explicit GenExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

//------------------------------------------------------------------------------
// Families of finite restrictions, addressed by name and described by a
// stream from the coherent-limits catalog. `flip` perturbs one stage:
// bit `flip->second` of stage `flip->first` is inverted.

struct FamilySpec {
  Ident name;
  std::optional<std::string> stream;  // nullopt: unresolved reference
  std::optional<std::pair<std::uint64_t, std::uint64_t>> flip;

  bool resolved() const { return stream.has_value(); }
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

//------------------------------------------------------------------------------
// Object literals: tagged constants naming an object of a carrier.
//   two.yes   nat.3   G.a   (x, y)   limit(F)

class ObjLit {
 public:
  enum class Kind { Atom, Pair, Limit };

  static ObjLit atom(std::string carrier, std::string tag);
  static ObjLit pair(ObjLit first, ObjLit second);
  static ObjLit limit(FamilySpec family);

  static ObjLit yes() { return atom("two", "yes"); }
  static ObjLit no() { return atom("two", "no"); }
  static ObjLit numeral(std::uint64_t n) { return atom("nat", std::to_string(n)); }

  Kind kind() const;
  const std::string& carrier() const;  // Atom
  const std::string& tag() const;      // Atom
  const ObjLit& first() const;         // Pair
  const ObjLit& second() const;        // Pair
  const FamilySpec& family() const;    // Limit

  friend bool operator==(const ObjLit& a, const ObjLit& b);
  friend bool operator<(const ObjLit& a, const ObjLit& b);

 private:
  struct Node;
  explicit ObjLit(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

//------------------------------------------------------------------------------
// Function expressions

enum class BuiltinId { EqOf, EmptyDetectorOf, Restrict, UnionOfFamily, IndicatorStream };

const char* builtin_name(BuiltinId id);
std::optional<BuiltinId> builtin_from_name(const std::string& name);

// Stream descriptions are kept as catalog strings; see limits.hpp.
struct StreamArg {
  std::string spec;
  friend bool operator==(const StreamArg&, const StreamArg&) = default;
};

using BuiltinArg = std::variant<GenExpr, StreamArg, std::uint64_t, FamilySpec>;

class FnExpr {
 public:
  enum class Kind { Table, Builtin, Ref };
  using Row = std::pair<ObjLit, ObjLit>;

  static FnExpr table(GenExpr domain, GenExpr codomain, std::vector<Row> rows);
  static FnExpr builtin(BuiltinId id, std::vector<BuiltinArg> args);
  static FnExpr ref(Ident name);

  Kind kind() const;
  const GenExpr& domain() const;           // Table
  const GenExpr& codomain() const;         // Table
  const std::vector<Row>& rows() const;    // Table
  BuiltinId builtin_id() const;            // Builtin
  const std::vector<BuiltinArg>& args() const;  // Builtin
  const Ident& ref_name() const;           // Ref

  friend bool operator==(const FnExpr& a, const FnExpr& b);

 private:
  struct Node;
  explicit FnExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

//------------------------------------------------------------------------------
// Judgments

struct IsGen {
  GenExpr gen;
  friend bool operator==(const IsGen&, const IsGen&) = default;
};
struct IsObj {
  ObjLit obj;
  GenExpr gen;
  friend bool operator==(const IsObj&, const IsObj&) = default;
};
struct IsMor {
  FnExpr fn;
  GenExpr dom;
  GenExpr cod;
  friend bool operator==(const IsMor&, const IsMor&) = default;
};
// Definitionally IsMor(fn, dom, Two).
struct IsBinFn {
  FnExpr fn;
  GenExpr dom;
  friend bool operator==(const IsBinFn&, const IsBinFn&) = default;
};
struct IsDomain {
  GenExpr gen;
  FnExpr eq;
  friend bool operator==(const IsDomain&, const IsDomain&) = default;
};
struct SupportsQuant {
  GenExpr gen;
  friend bool operator==(const SupportsQuant&, const SupportsQuant&) = default;
};
struct IsSet {
  GenExpr gen;
  friend bool operator==(const IsSet&, const IsSet&) = default;
};
struct IsCoherentFamily {
  FamilySpec family;
  friend bool operator==(const IsCoherentFamily&, const IsCoherentFamily&) = default;
};
// x and y are the same object of `gen`, as decided by the domain's pairing.
struct IsEq {
  ObjLit lhs;
  ObjLit rhs;
  std::optional<GenExpr> gen;
  friend bool operator==(const IsEq&, const IsEq&) = default;
};
// The surjection fn : dom -> cod admits a section (choice, section form).
struct HasSection {
  FnExpr fn;
  GenExpr dom;
  GenExpr cod;
  friend bool operator==(const HasSection&, const HasSection&) = default;
};

using Judgment = std::variant<IsGen, IsObj, IsMor, IsBinFn, IsDomain, SupportsQuant, IsSet,
                              IsCoherentFamily, IsEq, HasSection>;

// Surface keyword of a judgment form ("Gen", "Set", ...).
const char* judgment_head(const Judgment& j);

//------------------------------------------------------------------------------
// Operations

std::string render(const GenExpr& g);
std::string render(const ObjLit& o);
std::string render(const FnExpr& f);
std::string render(const FamilySpec& f);
std::string render(const Judgment& j);

std::set<Ident> free_names(const GenExpr& g);
std::set<Ident> free_names(const FnExpr& f);
std::set<Ident> free_names(const Judgment& j);

// Structural identity, spans ignored. Same as operator== for every kind.
template <class T>
bool structurally_equal(const T& a, const T& b) {
  return a == b;
}

// Dynamically-kinded form; throws std::invalid_argument on a kind mismatch.
using AnyTerm = std::variant<GenExpr, FnExpr, Judgment>;
bool structurally_equal(const AnyTerm& a, const AnyTerm& b);
std::string render_term(const AnyTerm& t);

// True iff some Named leaf, table domain/codomain or nested expression of
// `j` mentions Nat.
bool mentions_nat(const GenExpr& g);
bool mentions_nat(const Judgment& j);

// Words the surface grammar reserves; never valid as user names.
bool is_reserved_word(const std::string& text);

}  // namespace ogk
