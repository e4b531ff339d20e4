// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "ogk/limits.hpp"

using namespace ogk;
using namespace ogk::limits;

namespace {

std::vector<bool> bits(std::initializer_list<int> b) {
  std::vector<bool> v;
  for (int x : b) v.push_back(x != 0);
  return v;
}

// Brute-force membership: the first (p, q) in lexicographic order whose
// periodicity holds on the prefix [0, horizon].
std::optional<EpWitness> naive_ep(const BitStream& s, std::uint64_t pb, std::uint64_t qb, std::uint64_t h) {
  std::vector<bool> v = s.prefix(h + 1);
  for (std::uint64_t p = 0; p <= pb; ++p)
    for (std::uint64_t q = 1; q <= qb; ++q) {
      bool ok = true;
      for (std::uint64_t i = p; i + q <= h && ok; ++i) ok = v[i] == v[i + q];
      if (ok) return EpWitness{p, q};
    }
  return std::nullopt;
}

BitStream random_stream(std::mt19937_64& rng, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  auto rand_bits = [&](int max_len, bool nonempty) {
    std::vector<bool> b(pick(max_len) + (nonempty ? 1 : 0));
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = pick(2);
    return b;
  };
  switch (depth <= 0 ? pick(2) : pick(5)) {
    case 0: return BitStream::periodic(rand_bits(5, false), rand_bits(5, true));
    case 1: return BitStream::finite_support(rand_bits(8, false));
    case 2: return BitStream::xor_of(random_stream(rng, depth - 1), random_stream(rng, depth - 1));
    case 3: return BitStream::shift_of(random_stream(rng, depth - 1), pick(6));
    default: return BitStream::flip_at(random_stream(rng, depth - 1), pick(12));
  }
}

}  // namespace

TEST_SUITE("limits") {

TEST_CASE("restrictions") {
  CHECK(restrict(BitStream::squares(), 5).bits == bits({1, 1, 0, 0, 1, 0}));
  CHECK(restrict(BitStream::periodic({}, bits({1, 0})), 3).bits == bits({1, 0, 1, 0}));
  auto r0 = restrict(BitStream::powers_of_two(), 0);
  CHECK(r0.upper == 0);
  CHECK(r0.bits == std::vector<bool>{BitStream::powers_of_two().value_at(0)});
}

TEST_CASE("stream catalog strings") {
  for (const char* spec : {"periodic:1/01", "squares", "pow2", "finite:1101", "xor(squares,pow2)",
                           "shift(periodic:/10,3)", "flip(finite:1,4)"}) {
    BitStream s = BitStream::parse(spec);
    CHECK(s.spec() == spec);
    CHECK(BitStream::parse(s.spec()).prefix(50) == s.prefix(50));
  }
  CHECK_THROWS_AS(BitStream::parse("periodic:1/"), StreamSpecError);
  CHECK_THROWS_AS(BitStream::parse("cubes"), StreamSpecError);
  CHECK_THROWS_AS(BitStream::parse("xor(squares)"), StreamSpecError);
}

TEST_CASE("coherence") {
  std::vector<PartialBitMap> fam;
  for (std::uint64_t n = 0; n <= 16; ++n) fam.push_back(restrict(BitStream::squares(), n));
  CHECK(is_coherent(fam).coherent);
  auto broken = fam;
  broken[7].bits[3] = !broken[7].bits[3];
  auto r = is_coherent(broken);
  CHECK_FALSE(r.coherent);
  CHECK(r.first_violation == 7);
  std::vector<PartialBitMap> single = {restrict(BitStream::squares(), 0)};
  CHECK(is_coherent(single).coherent);
  auto bad_shape = fam;
  bad_shape[2].upper = 5;
  CHECK_THROWS_AS(is_coherent(bad_shape), ShapeError);
}

TEST_CASE("coherence is monotone in the number of stages") {
  std::vector<PartialBitMap> fam;
  for (std::uint64_t n = 0; n <= 20; ++n) fam.push_back(restrict(BitStream::powers_of_two(), n));
  fam[15].bits[2] = !fam[15].bits[2];
  for (std::size_t n = 1; n <= fam.size(); ++n) {
    bool c = is_coherent(std::span<const PartialBitMap>(fam.data(), n)).coherent;
    CHECK(c == (n <= 15));
  }
}

TEST_CASE("unions of coherent families") {
  auto pow2 = BitStream::powers_of_two();
  auto lim = union_limit([&](std::uint64_t n) { return restrict(pow2, n); });
  for (std::uint64_t i = 0; i <= 4096; ++i) REQUIRE(lim.value_at(i) == pow2.value_at(i));
  auto zero = union_limit([](std::uint64_t n) { return PartialBitMap{n, std::vector<bool>(n + 1, false)}; });
  for (std::uint64_t i = 0; i <= 100; ++i) CHECK_FALSE(zero.value_at(i));
  FamilySpec flipped{Ident("f"), "squares", std::make_pair<std::uint64_t, std::uint64_t>(3, 1)};
  auto bad = union_limit(family_rule(flipped));
  CHECK_THROWS_AS((void)[&] { for (std::uint64_t i = 0; i <= 10; ++i) (void)bad.value_at(i); }(),
                  CoherenceError);
}

TEST_CASE("round-trip for every catalog stream") {
  for (const char* spec : {"periodic:1/01", "squares", "pow2", "finite:1101", "xor(squares,pow2)",
                           "shift(squares,3)", "flip(pow2,4)"}) {
    FamilySpec f{Ident("f"), spec, std::nullopt};
    auto lim = union_limit(family_rule(f));
    BitStream s = BitStream::parse(spec);
    for (std::uint64_t i = 0; i <= 4096; ++i) REQUIRE(lim.value_at(i) == s.value_at(i));
  }
}

TEST_CASE("membership in the eventually-periodic model") {
  // 1 then (01)* is 1010..., already periodic from index 0, so the
  // lexicographically first witness is (0, 2); (1, 2) also holds.
  BitStream one_then_01 = BitStream::periodic(bits({1}), bits({0, 1}));
  auto a = ep_decide(one_then_01, 8, 8, 64);
  CHECK(a.member);
  CHECK(a.witness == EpWitness{0, 2});
  CHECK(a.witness == naive_ep(one_then_01, 8, 8, 64));
  CHECK(witness_holds(one_then_01, EpWitness{1, 2}, 64));
  // With a preperiod bit that differs from the cycle, (1, 2) is first.
  CHECK(ep_decide(BitStream::periodic(bits({0}), bits({0, 1})), 8, 8, 64).witness == EpWitness{1, 2});
  auto b = ep_decide(BitStream::squares(), 64, 64, 4096);
  CHECK_FALSE(b.member);
  CHECK(naive_ep(BitStream::squares(), 64, 64, 4096) == std::nullopt);
  auto c = ep_decide(BitStream::finite_support(bits({1, 1, 0, 1})), 8, 8, 64);
  CHECK(c.member);
  CHECK(c.witness == EpWitness{4, 1});
  CHECK_THROWS_AS(ep_decide(BitStream::squares(), 64, 64, 100), BoundError);
}

TEST_CASE("ep_decide agrees with a naive scan and its witnesses hold") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    BitStream s = random_stream(rng, 3);
    INFO(s.spec());
    auto v = ep_decide(s, 16, 16, 256);
    auto naive = naive_ep(s, 16, 16, 256);
    REQUIRE(v.member == naive.has_value());
    if (v.member) {
      CHECK(v.witness == naive);
      CHECK(witness_holds(s, *v.witness, 4096));
    }
  }
}

TEST_CASE("closure of members with predicted witnesses") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    BitStream s = random_stream(rng, 3);
    INFO(s.spec());
    auto w = predicted_witness(s);
    REQUIRE(w);
    CHECK(witness_holds(s, *w, 4096));
    CHECK(ep_decide(s, 64, 64, 4096).member);
  }
  CHECK_FALSE(predicted_witness(BitStream::squares()));
}

TEST_CASE("the gap demonstration") {
  GapReport g = demonstrate_gap();
  CHECK(g.stages_checked == 257);
  CHECK(g.stages_member == 257);
  CHECK(g.closure_checked == 100);
  CHECK(g.closure_passed == 100);
  CHECK(g.union_matches);
  CHECK_FALSE(g.subject_verdict.member);
  CHECK(g.gap_demonstrated);
  CHECK(g.conclusion.find("not a ZFC model") != std::string::npos);
}

TEST_CASE("the gap control with a periodic subject") {
  GapOptions o;
  o.subject = BitStream::periodic(bits({1}), bits({0, 1}));
  GapReport g = demonstrate_gap(o);
  CHECK(g.subject_verdict.member);
  CHECK_FALSE(g.gap_demonstrated);
  CHECK(g.conclusion.rfind("conclusion withdrawn", 0) == 0);
}

TEST_CASE("the gap demonstration refuses a short horizon") {
  GapOptions o;
  o.horizon = 100;
  CHECK_THROWS_AS(demonstrate_gap(o), BoundError);
}

}  // TEST_SUITE
