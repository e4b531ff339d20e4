// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ogk/limits.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>

namespace ogk::limits {

struct BitStream::Node {
  Kind kind;
  std::vector<bool> pre;  // Periodic preperiod / FiniteSupport bits
  std::vector<bool> per;
  std::optional<BitStream> a;
  std::optional<BitStream> b;
  std::uint64_t k = 0;
};

namespace {

std::string bit_string(const std::vector<bool>& bits) {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

std::vector<bool> parse_bits(std::string_view text, std::string_view whole) {
  std::vector<bool> bits;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw StreamSpecError("malformed stream spec '" + std::string(whole) +
                            "': expected bits 0/1");
    bits.push_back(c == '1');
  }
  return bits;
}

bool is_square(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  BitStream parse_all() {
    BitStream s = parse_one();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  BitStream parse_one() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (word == "squares") return BitStream::squares();
    if (word == "pow2") return BitStream::powers_of_two();
    if (word == "periodic" || word == "finite") {
      expect(':');
      start = pos_;
      while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1' ||
                                     (word == "periodic" && text_[pos_] == '/')))
        ++pos_;
      std::string_view body = text_.substr(start, pos_ - start);
      if (word == "finite") return BitStream::finite_support(parse_bits(body, text_));
      auto slash = body.find('/');
      if (slash == std::string_view::npos) fail("periodic needs <pre>/<per>");
      auto per = parse_bits(body.substr(slash + 1), text_);
      if (per.empty()) fail("periodic needs a nonempty period");
      return BitStream::periodic(parse_bits(body.substr(0, slash), text_), std::move(per));
    }
    if (word == "xor") {
      expect('(');
      BitStream a = parse_one();
      expect(',');
      BitStream b = parse_one();
      expect(')');
      return BitStream::xor_of(std::move(a), std::move(b));
    }
    if (word == "shift" || word == "flip") {
      expect('(');
      BitStream a = parse_one();
      expect(',');
      std::uint64_t k = parse_number();
      expect(')');
      return word == "shift" ? BitStream::shift_of(std::move(a), k)
                             : BitStream::flip_at(std::move(a), k);
    }
    fail(word.empty() ? "expected a stream" : "unknown stream '" + std::string(word) + "'");
  }

  std::uint64_t parse_number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw StreamSpecError("malformed stream spec '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BitStream BitStream::periodic(std::vector<bool> preperiod, std::vector<bool> period) {
  if (period.empty()) throw StreamSpecError("periodic stream needs a nonempty period");
  return BitStream(std::make_shared<const Node>(
      Node{Kind::Periodic, std::move(preperiod), std::move(period), {}, {}, 0}));
}

BitStream BitStream::squares() {
  static const BitStream s(std::make_shared<const Node>(Node{Kind::Squares, {}, {}, {}, {}, 0}));
  return s;
}

BitStream BitStream::powers_of_two() {
  static const BitStream s(
      std::make_shared<const Node>(Node{Kind::PowersOfTwo, {}, {}, {}, {}, 0}));
  return s;
}

BitStream BitStream::finite_support(std::vector<bool> bits) {
  return BitStream(
      std::make_shared<const Node>(Node{Kind::FiniteSupport, std::move(bits), {}, {}, {}, 0}));
}

BitStream BitStream::xor_of(BitStream a, BitStream b) {
  return BitStream(
      std::make_shared<const Node>(Node{Kind::Xor, {}, {}, std::move(a), std::move(b), 0}));
}

BitStream BitStream::shift_of(BitStream s, std::uint64_t offset) {
  return BitStream(
      std::make_shared<const Node>(Node{Kind::Shift, {}, {}, std::move(s), {}, offset}));
}

BitStream BitStream::flip_at(BitStream s, std::uint64_t index) {
  return BitStream(
      std::make_shared<const Node>(Node{Kind::Flip, {}, {}, std::move(s), {}, index}));
}

BitStream BitStream::parse(std::string_view spec) { return SpecParser(spec).parse_all(); }

std::string BitStream::spec() const {
  switch (kind()) {
    case Kind::Periodic: return "periodic:" + bit_string(preperiod()) + "/" + bit_string(period());
    case Kind::Squares: return "squares";
    case Kind::PowersOfTwo: return "pow2";
    case Kind::FiniteSupport: return "finite:" + bit_string(bits());
    case Kind::Xor: return "xor(" + first().spec() + "," + second().spec() + ")";
    case Kind::Shift: return "shift(" + first().spec() + "," + std::to_string(offset()) + ")";
    case Kind::Flip: return "flip(" + first().spec() + "," + std::to_string(offset()) + ")";
  }
  return {};
}

BitStream::Kind BitStream::kind() const { return node_->kind; }
const std::vector<bool>& BitStream::preperiod() const { return node_->pre; }
const std::vector<bool>& BitStream::period() const { return node_->per; }
const std::vector<bool>& BitStream::bits() const { return node_->pre; }
const BitStream& BitStream::first() const { return *node_->a; }
const BitStream& BitStream::second() const { return *node_->b; }
std::uint64_t BitStream::offset() const { return node_->k; }

bool BitStream::value_at(std::uint64_t n) const {
  const Node& x = *node_;
  switch (x.kind) {
    case Kind::Periodic:
      if (n < x.pre.size()) return x.pre[n];
      return x.per[(n - x.pre.size()) % x.per.size()];
    case Kind::Squares: return is_square(n);
    case Kind::PowersOfTwo: return n != 0 && (n & (n - 1)) == 0;
    case Kind::FiniteSupport: return n < x.pre.size() && x.pre[n];
    case Kind::Xor: return x.a->value_at(n) != x.b->value_at(n);
    case Kind::Shift: return x.a->value_at(n + x.k);
    case Kind::Flip: return n == x.k ? !x.a->value_at(n) : x.a->value_at(n);
  }
  return false;
}

std::vector<bool> BitStream::prefix(std::uint64_t n) const {
  std::vector<bool> out(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) out[i] = value_at(i);
  return out;
}

//------------------------------------------------------------------------------

PartialBitMap restrict(const BitStream& s, std::uint64_t n) { return {n, s.prefix(n)}; }

CoherenceResult is_coherent(std::span<const PartialBitMap> family) {
  for (std::size_t n = 0; n < family.size(); ++n) {
    if (family[n].upper != n || family[n].bits.size() != n + 1)
      throw ShapeError("family stage " + std::to_string(n) + " has domain [0," +
                       std::to_string(family[n].upper) + "]");
  }
  for (std::size_t n = 0; n + 1 < family.size(); ++n) {
    const auto& next = family[n + 1].bits;
    if (!std::equal(family[n].bits.begin(), family[n].bits.end(), next.begin()))
      return {false, n + 1};
  }
  return {true, std::nullopt};
}

PartialBitMap member_at(const FamilySpec& family, std::uint64_t n) {
  if (!family.stream)
    throw StreamSpecError("family '" + family.name.text() + "' has no stream description");
  PartialBitMap m = restrict(BitStream::parse(*family.stream), n);
  if (family.flip && family.flip->first == n && family.flip->second <= n)
    m.bits[family.flip->second] = !m.bits[family.flip->second];
  return m;
}

FamilyRule family_rule(const FamilySpec& family) {
  BitStream s = BitStream::parse(family.stream.value_or(""));
  auto flip = family.flip;
  return [s, flip](std::uint64_t n) {
    PartialBitMap m = restrict(s, n);
    if (flip && flip->first == n && flip->second <= n)
      m.bits[flip->second] = !m.bits[flip->second];
    return m;
  };
}

CoherenceResult check_family(const FamilySpec& family, std::uint64_t stages) {
  FamilyRule rule = family_rule(family);
  std::vector<PartialBitMap> maps;
  maps.reserve(stages);
  for (std::uint64_t n = 0; n < stages; ++n) maps.push_back(rule(n));
  return is_coherent(maps);
}

bool LimitStream::value_at(std::uint64_t i) const {
  PartialBitMap here = rule_(i);
  if (i > 0) {
    PartialBitMap before = rule_(i - 1);
    if (!std::equal(before.bits.begin(), before.bits.end(), here.bits.begin()))
      throw CoherenceError(i, "coherence violated at stage transition " + std::to_string(i - 1) +
                                  "->" + std::to_string(i));
  }
  return here.bits[i];
}

LimitStream union_limit(FamilyRule family) { return LimitStream(std::move(family)); }

//------------------------------------------------------------------------------

namespace {

bool witness_holds_on(const std::vector<bool>& bits, const EpWitness& w) {
  std::uint64_t horizon = bits.size() - 1;
  if (w.period == 0 || w.period > horizon) return false;
  for (std::uint64_t i = w.preperiod; i + w.period <= horizon; ++i)
    if (bits[i] != bits[i + w.period]) return false;
  return true;
}

}  // namespace

EpVerdict ep_decide(const BitStream& s, std::uint64_t preperiod_bound,
                    std::uint64_t period_bound, std::uint64_t horizon) {
  if (horizon < preperiod_bound + 2 * period_bound)
    throw BoundError("horizon " + std::to_string(horizon) + " is below preperiod bound + 2 * " +
                     "period bound = " + std::to_string(preperiod_bound + 2 * period_bound));
  std::vector<bool> bits = s.prefix(horizon);
  for (std::uint64_t p = 0; p <= preperiod_bound; ++p)
    for (std::uint64_t q = 1; q <= period_bound; ++q)
      if (witness_holds_on(bits, {p, q})) return {true, EpWitness{p, q}};
  return {false, std::nullopt};
}

bool witness_holds(const BitStream& s, const EpWitness& w, std::uint64_t horizon) {
  return witness_holds_on(s.prefix(horizon), w);
}

std::optional<EpWitness> predicted_witness(const BitStream& s) {
  using K = BitStream::Kind;
  switch (s.kind()) {
    case K::Periodic: return EpWitness{s.preperiod().size(), s.period().size()};
    case K::FiniteSupport: return EpWitness{s.bits().size(), 1};
    case K::Squares:
    case K::PowersOfTwo: return std::nullopt;
    case K::Xor: {
      auto a = predicted_witness(s.first());
      auto b = predicted_witness(s.second());
      if (!a || !b) return std::nullopt;
      return EpWitness{std::max(a->preperiod, b->preperiod), std::lcm(a->period, b->period)};
    }
    case K::Shift: {
      auto a = predicted_witness(s.first());
      if (!a) return std::nullopt;
      std::uint64_t p = a->preperiod > s.offset() ? a->preperiod - s.offset() : 0;
      return EpWitness{p, a->period};
    }
    case K::Flip: {
      auto a = predicted_witness(s.first());
      if (!a) return std::nullopt;
      return EpWitness{std::max(a->preperiod, s.offset() + 1), a->period};
    }
  }
  return std::nullopt;
}

//------------------------------------------------------------------------------

namespace {

BitStream random_member(std::mt19937_64& rng) {
  auto bits = [&](std::size_t n) {
    std::vector<bool> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng() & 1;
    return v;
  };
  if (rng() % 3 == 0) return BitStream::finite_support(bits(rng() % 12));
  return BitStream::periodic(bits(rng() % 6), bits(1 + rng() % 6));
}

}  // namespace

GapReport demonstrate_gap(const GapOptions& o) {
  if (o.horizon < o.preperiod_bound + 2 * o.period_bound)
    throw BoundError("horizon " + std::to_string(o.horizon) +
                     " is below preperiod bound + 2 * period bound");
  const BitStream subject = o.subject.value_or(BitStream::squares());
  GapReport r;
  r.subject = subject.spec();

  // (a) every finite stage, extended by zeros, lies in the small model.
  for (std::uint64_t n = 0; n <= o.max_stage; ++n) {
    BitStream stage = BitStream::finite_support(restrict(subject, n).bits);
    std::uint64_t pre_bound = std::max(o.preperiod_bound, n + 1);
    std::uint64_t horizon = std::max(o.horizon, pre_bound + 2 * o.period_bound);
    ++r.stages_checked;
    if (ep_decide(stage, pre_bound, o.period_bound, horizon).member) ++r.stages_member;
  }

  // (b) closure of the small model under xor, shift and flip.
  std::mt19937_64 rng(o.seed);
  for (std::uint64_t c = 0; c < o.closure_cases; ++c) {
    BitStream a = random_member(rng);
    BitStream built = a;
    switch (rng() % 3) {
      case 0: built = BitStream::xor_of(a, random_member(rng)); break;
      case 1: built = BitStream::shift_of(a, rng() % 16); break;
      default: built = BitStream::flip_at(a, rng() % 32); break;
    }
    ++r.closure_checked;
    auto w = predicted_witness(built);
    bool ok = w && w->preperiod <= o.preperiod_bound && w->period <= o.period_bound &&
              witness_holds(built, *w, o.horizon) &&
              ep_decide(built, o.preperiod_bound, o.period_bound, o.horizon).member;
    if (ok)
      ++r.closure_passed;
    else
      r.closure_failures.push_back(built.spec());
  }

  // (c) the union of the restrictions is the subject itself.
  LimitStream limit = union_limit([&](std::uint64_t n) { return restrict(subject, n); });
  r.union_matches = true;
  for (std::uint64_t i = 0; i <= o.horizon; ++i) {
    if (limit.value_at(i) != subject.value_at(i)) {
      r.union_matches = false;
      r.union_mismatch_at = i;
      break;
    }
  }

  // (d) the limit itself is not in the small model.
  r.subject_verdict = ep_decide(subject, o.preperiod_bound, o.period_bound, o.horizon);

  bool sub_checks = r.stages_member == r.stages_checked &&
                    r.closure_passed == r.closure_checked && r.union_matches;
  r.gap_demonstrated = sub_checks && !r.subject_verdict.member;
  if (r.gap_demonstrated) {
    r.conclusion =
        "the eventually-periodic small model contains every finite stage of " + r.subject +
        " but not its coherent limit (a desk-scale analogue, not a ZFC model)";
  } else if (!sub_checks) {
    r.conclusion = "sub-check failed; no conclusion drawn";
  } else {
    r.conclusion = "conclusion withdrawn: " + r.subject +
                   " is itself eventually periodic, so its limit lies in the small model";
  }
  return r;
}

}  // namespace ogk::limits
