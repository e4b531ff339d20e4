// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

// Brute-force finite semantics. Interprets expressions over explicit finite
// carriers and evaluates judgments by exhaustive search. Nothing here calls
// into the kernel's rule checker; it only reads Theorem judgments.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ogk/kernel.hpp"
#include "ogk/report.hpp"
#include "ogk/term.hpp"

namespace ogk::semantics {

class InterpretationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The interpretation exists but is too large to enumerate.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Carrier {
  std::string name;
  std::vector<std::string> objects;  // distinct tags, canonical order

  friend bool operator==(const Carrier&, const Carrier&) = default;
};

struct Model {
  // Named generators only; Two, products and powersets are structural.
  std::map<std::string, Carrier> assignments;
  // Nat is interpreted as {0, ..., nat_bound}; every verdict that touches it
  // is flagged as truncated.
  std::uint64_t nat_bound = 3;
  // Test hook: powerset interpretations lose their all-no table.
  bool corrupt_powerset = false;

  std::string describe() const;
};

enum class Status { Holds, Fails, NotFinitelyCheckable };

struct Verdict {
  Status status = Status::Holds;
  Witness witness;  // nonempty when status is Fails
  bool truncated = false;
  std::string note;
};

// Objects of the interpretation, in canonical order:
//   Two: no, yes     Nat: 0..nat_bound     named: assigned tags
//   A * B: "(a,b)" with the left component most significant
//   P[A]: "{b0b1...}" one bit per object of A, masks ascending
// Throws InterpretationError for unassigned names and TooLarge beyond the
// enumeration caps (powerset bases of 16 objects, carriers of 2^22 objects).
Carrier interpret(const GenExpr& g, const Model& m);

// Index of the object a literal denotes in interpret(g, m), if any.
std::optional<std::size_t> object_index(const ObjLit& o, const GenExpr& g, const Model& m);

struct FnTable {
  Carrier domain;
  Carrier codomain;
  // image[i] is the codomain index of domain object i, when defined.
  std::vector<std::optional<std::size_t>> image;
};

// Tables are read against their declared domain and codomain; builtins
// against their catalog ones.
FnTable interpret(const FnExpr& f, const Model& m);

Verdict verify_judgment(const Judgment& j, const Model& m);

// Canonical models for the free names of `j`: declared carriers are fixed,
// undeclared primitives range over sizes 0..max_size, Nat (when mentioned)
// over truncations of size 1..max_size, raised so that every numeral in the
// judgment denotes. Sizes ascending, names lexicographic.
std::vector<Model> canonical_models(const Judgment& j, const Signature& sig,
                                    std::uint64_t max_size);

struct SweepItem {
  std::string judgment;
  std::uint64_t models_checked = 0;
  Status status = Status::Holds;
  std::optional<std::uint64_t> truncated_at;  // largest nat_bound used
  std::string note;
  std::optional<Witness> witness;
};

struct SweepReport {
  std::vector<SweepItem> items;
  std::uint64_t holds = 0;
  std::uint64_t fails = 0;
  std::uint64_t not_checkable = 0;

  std::vector<ReportItem> report_items() const;
};

// max_size must be <= 4.
SweepReport soundness_sweep(const std::vector<Theorem>& theorems, const Signature& sig,
                            std::uint64_t max_size);

// Default model for axiom-instance checks: carriers C1..C4 of sizes 1..4.
Model default_model();

// H1, H2, H4 checked exhaustively within bounds; H3 reported as assumed.
std::vector<ReportItem> verify_axiom_instances(const Model& m);

// Exhaustive section search; nullopt when `f` is not a total surjection or
// no section exists. The section maps codomain index to domain index.
std::optional<std::vector<std::size_t>> find_section(const FnTable& f);

//------------------------------------------------------------------------------
// Hereditarily finite sets.

struct HFUniverse {
  unsigned rank = 0;
  // members[x]: sorted element indices of set x. Index = Ackermann code.
  std::vector<std::vector<std::size_t>> members;

  // rank <= 3; throws BoundError beyond.
  static HFUniverse build(unsigned rank);
  std::size_t size() const { return members.size(); }
};

struct Zfc1Family {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::optional<Witness> first_failure;
};

// Extensionality, pairing, union, powerset and full-subset separation, each
// checked for every instance over the universe's elements.
std::vector<Zfc1Family> check_zfc1_instances(const HFUniverse& u);
std::vector<ReportItem> zfc1_report_items(const std::vector<Zfc1Family>& families);

}  // namespace ogk::semantics
