// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

// Hereditarily finite sets under the Ackermann coding: the members of code x
// are the codes i with bit i of x set. The universe of rank r is an initial
// segment of the codes, so membership tables are plain vectors.

#include <algorithm>
#include <string>

#include "ogk/semantics.hpp"

namespace ogk::semantics {

namespace {

std::size_t universe_size(unsigned rank) {
  std::size_t n = 1;
  for (unsigned r = 0; r < rank; ++r) n = std::size_t{1} << n;
  return n;
}

std::vector<std::vector<std::size_t>> decode(std::size_t count) {
  std::vector<std::vector<std::size_t>> out(count);
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t i = 0; (x >> i) != 0; ++i)
      if ((x >> i) & 1) out[x].push_back(i);
  return out;
}

std::string show(const std::vector<std::vector<std::size_t>>& members, std::size_t x) {
  std::string s = "{";
  for (std::size_t k = 0; k < members[x].size(); ++k)
    s += (k ? "," : "") + show(members, members[x][k]);
  return s + "}";
}

// First z among `members` whose elements are exactly `want` (sorted).
std::optional<std::size_t> find_set(const std::vector<std::vector<std::size_t>>& members,
                                    const std::vector<std::size_t>& want) {
  for (std::size_t z = 0; z < members.size(); ++z)
    if (members[z] == want) return z;
  return std::nullopt;
}

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

HFUniverse HFUniverse::build(unsigned rank) {
  if (rank > 3)
    throw BoundError("hereditarily finite universes are limited to rank 3 (rank " +
                     std::to_string(rank) + " has 2^16 elements)");
  HFUniverse u;
  u.rank = rank;
  u.members = decode(universe_size(rank));
  return u;
}

std::vector<Zfc1Family> check_zfc1_instances(const HFUniverse& u) {
  const auto& m = u.members;
  const std::size_t n = m.size();
  // Pairs and powersets of rank-r sets live one rank up.
  const auto above = decode(universe_size(u.rank + 1));

  auto named = [](const char* name) {
    Zfc1Family f;
    f.name = name;
    return f;
  };
  auto fail = [&](Zfc1Family& f, Witness w) {
    if (f.failures++ == 0) f.first_failure = std::move(w);
  };

  Zfc1Family ext = named("extensionality");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ++ext.instances;
      if (m[x] == m[y] && x != y) fail(ext, {{"x", show(m, x)}, {"y", show(m, y)}});
    }

  Zfc1Family pairing = named("pairing");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      ++pairing.instances;
      std::vector<std::size_t> want{x};
      if (y != x) want.push_back(y);
      if (!find_set(above, want)) fail(pairing, {{"x", show(m, x)}, {"y", show(m, y)}});
    }

  Zfc1Family uni = named("union");
  for (std::size_t x = 0; x < n; ++x) {
    ++uni.instances;
    std::vector<std::size_t> want;
    for (auto y : m[x]) want.insert(want.end(), m[y].begin(), m[y].end());
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    if (!find_set(m, want)) fail(uni, {{"x", show(m, x)}});
  }

  Zfc1Family pow = named("powerset");
  for (std::size_t x = 0; x < n; ++x) {
    ++pow.instances;
    std::vector<std::size_t> want;
    for (std::size_t y = 0; y < n; ++y)
      if (subset(m[y], m[x])) want.push_back(y);
    // Every subset of x must be in the universe for `want` to be the powerset.
    std::size_t expected = std::size_t{1} << m[x].size();
    if (want.size() != expected || !find_set(above, want)) fail(pow, {{"x", show(m, x)}});
  }

  Zfc1Family sep = named("separation");
  for (std::size_t x = 0; x < n; ++x) {
    const auto& elems = m[x];
    for (std::size_t sel = 0; sel < (std::size_t{1} << elems.size()); ++sel) {
      ++sep.instances;
      std::vector<std::size_t> want;
      for (std::size_t k = 0; k < elems.size(); ++k)
        if ((sel >> k) & 1) want.push_back(elems[k]);
      auto z = find_set(m, want);
      if (!z || !subset(m[*z], m[x]))
        fail(sep, {{"x", show(m, x)}, {"selection", std::to_string(sel)}});
    }
  }

  return {ext, pairing, uni, pow, sep};
}

std::vector<ReportItem> zfc1_report_items(const std::vector<Zfc1Family>& families) {
  std::vector<ReportItem> out;
  for (const auto& f : families) {
    ReportItem r;
    r.name = "ZFC-1 " + f.name;
    r.status = f.failures == 0 ? ItemStatus::Pass : ItemStatus::Fail;
    r.detail = std::to_string(f.instances) + " instance(s), " + std::to_string(f.failures) +
               " failure(s)";
    r.witness = f.first_failure;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ogk::semantics
