// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

// The trusted kernel. Theorem values can only be created by the member
// functions of Kernel; each carries a replayable trace whose leaves are
// axioms or defining declarations.

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ogk/term.hpp"

namespace ogk {

enum class AxiomId { H1_TwoIsSet, H2_Choice, H3_NatSupportsQuant, H4_PowersetQuant, CLA_CoherentLimit };

inline constexpr AxiomId kAllAxioms[] = {AxiomId::H1_TwoIsSet, AxiomId::H2_Choice,
                                         AxiomId::H3_NatSupportsQuant, AxiomId::H4_PowersetQuant,
                                         AxiomId::CLA_CoherentLimit};

const char* axiom_name(AxiomId id);  // "H1" ... "CLA"
const char* axiom_statement(AxiomId id);
std::optional<AxiomId> axiom_from_name(const std::string& name);

enum class RuleId {
  GenIntro,
  MorIntro,
  BinFnFromMor,
  DomainIntro,
  SetIntro,
  SQuantFromPowerset,  // H4
  SQuantFromSet,       // unfolds the definition of a set
  FamilyIntro,
  CoherentLimit,       // CLA
  EqWithinDomain,
};

const char* rule_name(RuleId id);  // surface spelling, e.g. "set_intro"
std::optional<RuleId> rule_from_name(const std::string& name);

class KernelError : public std::runtime_error {
 public:
  enum class Kind {
    Schema,
    NameClash,
    Totality,
    Codomain,
    Premise,
    EqualityLaw,
    CrossDomain,
    Coherence,
    Hypothesis,
    Unresolved,
  };

  KernelError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* error_kind_name(KernelError::Kind kind);

struct GeneratorInfo {
  // Declared object tags of a primitive generator, when finitely listed.
  std::optional<std::vector<std::string>> objects;
  // Set for names introduced as abbreviations of closed expressions.
  std::optional<GenExpr> alias;
};

using Signature = std::map<std::string, GeneratorInfo>;

// Objects of `g` denotable by literals, in canonical order; nullopt when `g`
// is not finitely enumerable from the declarations.
std::optional<std::vector<ObjLit>> declared_objects(const GenExpr& g, const Signature& sig);
bool is_object_of(const ObjLit& o, const GenExpr& g, const Signature& sig);

using RuleParam = std::variant<GenExpr, FnExpr, ObjLit, FamilySpec>;

struct TraceNode {
  enum class Kind { Axiom, Rule, Decl };

  Kind kind = Kind::Decl;
  AxiomId axiom = AxiomId::H1_TwoIsSet;
  RuleId rule = RuleId::GenIntro;
  std::string decl;                   // Decl leaves only
  std::optional<Judgment> conclusion;  // absent on Decl leaves
  std::vector<RuleParam> params;
  std::vector<std::shared_ptr<const TraceNode>> children;

  std::string label() const;
};

using Trace = std::shared_ptr<const TraceNode>;

class Theorem {
 public:
  const Judgment& judgment() const { return judgment_; }
  const TraceNode& trace() const { return *trace_; }

  std::size_t node_count() const;
  // Axiom applications in the trace, counting H4 and CLA rule nodes.
  std::multiset<AxiomId> axioms_used() const;
  // Leaf labels ("H3", "decl: ...") in pre-order.
  std::vector<std::string> leaves() const;

 private:
  friend class Kernel;
  friend struct KernelTestAccess;
  Theorem(Judgment j, Trace t) : judgment_(std::move(j)), trace_(std::move(t)) {}

  Judgment judgment_;
  Trace trace_;
};

struct NodeCheck {
  std::string label;
  std::string conclusion;
  bool pass = true;
  std::string message;
};

struct TraceReport {
  bool passed = true;
  std::vector<NodeCheck> nodes;  // pre-order, root first
  std::string root_message;
};

// An equality question about two objects of one logical domain.
struct EqQuery {
  GenExpr domain;
  FnExpr eq;
  ObjLit lhs;
  ObjLit rhs;
  // Kernel-side evaluation on literals; nullopt when not decidable there.
  std::optional<bool> evaluate() const;
};

class Kernel {
 public:
  Kernel() = default;
  Kernel(const Kernel&) = delete;
  Kernel& operator=(const Kernel&) = delete;

  // Declarations (append-only). Both return the IsGen theorem they justify.
  Theorem declare_generator(const Ident& name,
                            std::optional<std::vector<std::string>> objects = std::nullopt);
  Theorem declare_alias(const Ident& name, const GenExpr& definition);

  Theorem gen_intro(const GenExpr& g);
  Theorem axiom(AxiomId id, const std::vector<RuleParam>& params = {});
  Theorem mor_intro(const FnExpr& f, const GenExpr& dom, const GenExpr& cod);
  Theorem binfn_from_mor(const Theorem& mor);
  Theorem domain_intro(const Theorem& gen, const Theorem& eq);
  Theorem set_intro(const Theorem& domain, const Theorem& squant);
  Theorem squant_from_powerset(const Theorem& squant);
  Theorem squant_from_set(const Theorem& set);
  Theorem family_intro(const FamilySpec& family);
  Theorem coherent_limit(const Theorem& family);
  EqQuery eq_within_domain(const Theorem& domain, const ObjLit& x, const ObjLit& y) const;
  Theorem eq_intro(const Theorem& domain, const ObjLit& x, const ObjLit& y);

  TraceReport verify_trace(const Theorem& thm) const;

  Signature signature() const;
  bool is_declared(const std::string& name) const;

 private:
  Theorem apply(TraceNode::Kind kind, AxiomId axiom, RuleId rule, std::vector<RuleParam> params,
                const std::vector<const Theorem*>& premises);

  mutable std::mutex mu_;
  Signature sig_;
};

}  // namespace ogk
