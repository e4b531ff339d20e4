// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

// Binary functions on the naturals, their finite restrictions, coherent
// families and unions, and the eventually-periodic "small model" that holds
// every finite stage of the squares indicator but not its limit.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ogk/term.hpp"

namespace ogk::limits {

class StreamSpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CoherenceError : public std::runtime_error {
 public:
  CoherenceError(std::uint64_t index, const std::string& what)
      : std::runtime_error(what), index_(index) {}
  // Stage n whose restriction to [0, n-1] disagrees with stage n-1.
  std::uint64_t index() const { return index_; }

 private:
  std::uint64_t index_;
};

// A total binary function on the naturals drawn from a fixed catalog.
class BitStream {
 public:
  enum class Kind { Periodic, Squares, PowersOfTwo, FiniteSupport, Xor, Shift, Flip };

  static BitStream periodic(std::vector<bool> preperiod, std::vector<bool> period);
  static BitStream squares();
  static BitStream powers_of_two();
  static BitStream finite_support(std::vector<bool> bits);
  static BitStream xor_of(BitStream a, BitStream b);
  static BitStream shift_of(BitStream s, std::uint64_t offset);
  static BitStream flip_at(BitStream s, std::uint64_t index);

  // Catalog strings: periodic:<pre>/<per>, squares, pow2, finite:<bits>,
  // xor(a,b), shift(a,k), flip(a,i).
  static BitStream parse(std::string_view spec);
  std::string spec() const;

  Kind kind() const;
  bool value_at(std::uint64_t n) const;
  // Values on [0, n].
  std::vector<bool> prefix(std::uint64_t n) const;

  const std::vector<bool>& preperiod() const;  // Periodic
  const std::vector<bool>& period() const;     // Periodic
  const std::vector<bool>& bits() const;       // FiniteSupport
  const BitStream& first() const;              // Xor, Shift, Flip
  const BitStream& second() const;             // Xor
  std::uint64_t offset() const;                // Shift (offset), Flip (index)

 private:
  struct Node;
  explicit BitStream(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// A binary function on [0, upper].
struct PartialBitMap {
  std::uint64_t upper = 0;
  std::vector<bool> bits;  // size upper + 1

  friend bool operator==(const PartialBitMap&, const PartialBitMap&) = default;
};

PartialBitMap restrict(const BitStream& s, std::uint64_t n);

struct CoherenceResult {
  bool coherent = true;
  // Index n of the first stage with family[n] restricted to [0, n-1] differing
  // from family[n-1].
  std::optional<std::uint64_t> first_violation;
};

// family[n].upper must equal n for every n; throws ShapeError otherwise.
CoherenceResult is_coherent(std::span<const PartialBitMap> family);

using FamilyRule = std::function<PartialBitMap(std::uint64_t)>;

// Stage n of a catalog family description (see FamilySpec).
PartialBitMap member_at(const FamilySpec& family, std::uint64_t n);
FamilyRule family_rule(const FamilySpec& family);

// Catalog families are coherent at every stage exactly when unperturbed.
// Checks the first `stages` stages and reports what it saw.
CoherenceResult check_family(const FamilySpec& family, std::uint64_t stages);

// The union of a coherent family: value_at(i) = family(i).bits[i]. Coherence
// of each transition is verified lazily on access.
class LimitStream {
 public:
  explicit LimitStream(FamilyRule rule) : rule_(std::move(rule)) {}
  bool value_at(std::uint64_t i) const;

 private:
  FamilyRule rule_;
};

LimitStream union_limit(FamilyRule family);

//------------------------------------------------------------------------------
// The eventually-periodic small model.

struct EpWitness {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  friend bool operator==(const EpWitness&, const EpWitness&) = default;
};

struct EpVerdict {
  bool member = false;  // false means non-member up to the bounds
  std::optional<EpWitness> witness;
};

// Lexicographic (p, q) search for the first witness with
// value_at(i) == value_at(i + q) for p <= i <= horizon - q.
// Requires horizon >= preperiod_bound + 2 * period_bound.
EpVerdict ep_decide(const BitStream& s, std::uint64_t preperiod_bound,
                    std::uint64_t period_bound, std::uint64_t horizon);

// Direct scan of a claimed witness up to the horizon.
bool witness_holds(const BitStream& s, const EpWitness& w, std::uint64_t horizon);

// Witness predicted from the structure of `s` when it is built from members
// only (closure under finite-support embedding, xor, shift and flip).
std::optional<EpWitness> predicted_witness(const BitStream& s);

//------------------------------------------------------------------------------
// The gap demonstration.

struct GapOptions {
  std::uint64_t preperiod_bound = 64;
  std::uint64_t period_bound = 64;
  std::uint64_t horizon = 4096;
  std::uint64_t max_stage = 256;
  std::uint64_t closure_cases = 100;
  std::uint64_t seed = 20240601;
  // Control hook: replace the squares indicator by another stream.
  std::optional<BitStream> subject;
};

struct GapReport {
  std::string subject;
  std::uint64_t stages_checked = 0;
  std::uint64_t stages_member = 0;
  std::uint64_t closure_checked = 0;
  std::uint64_t closure_passed = 0;
  bool union_matches = false;
  std::optional<std::uint64_t> union_mismatch_at;
  EpVerdict subject_verdict;
  bool gap_demonstrated = false;
  std::string conclusion;
  std::vector<std::string> closure_failures;
};

// Throws BoundError when the horizon is below preperiod + 2 * period bounds.
GapReport demonstrate_gap(const GapOptions& options = {});

}  // namespace ogk::limits
