// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

// Random term generators and source paths shared by the tests.

#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "ogk/term.hpp"

namespace ogk::testing {

inline std::filesystem::path source_dir() { return OGK_SOURCE_DIR; }
inline std::filesystem::path prelude_path() { return source_dir() / "share" / "prelude.og"; }
inline std::filesystem::path corpus_dir() { return source_dir() / "tests" / "corpus"; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Trees of depth <= max_depth over a small alphabet, so that independent
// draws collide often enough to exercise equality.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  GenExpr gen(int depth) {
    std::size_t choice = depth <= 1 ? pick(3) : pick(5);
    switch (choice) {
      case 0: return GenExpr::two();
      case 1: return GenExpr::nat();
      case 2: return GenExpr::named(Ident(kNames[pick(std::size(kNames))]));
      case 3: return GenExpr::product(gen(depth - 1), gen(depth - 1));
      default: return GenExpr::powerset(gen(depth - 1));
    }
  }

  FamilySpec family() {
    FamilySpec f{Ident(kFamilies[pick(std::size(kFamilies))]), kStreams[pick(std::size(kStreams))],
                 std::nullopt};
    if (pick(3) == 0) f.flip = std::make_pair<std::uint64_t, std::uint64_t>(pick(8), pick(8));
    return f;
  }

  ObjLit obj(int depth) {
    std::size_t choice = depth <= 1 ? pick(3) : pick(5);
    switch (choice) {
      case 0: return pick(2) ? ObjLit::yes() : ObjLit::no();
      case 1: return ObjLit::numeral(pick(6));
      case 2: return ObjLit::atom(kNames[pick(std::size(kNames))], kTags[pick(std::size(kTags))]);
      case 3: return ObjLit::pair(obj(depth - 1), obj(depth - 1));
      default: return ObjLit::limit(family());
    }
  }

  FnExpr fn(int depth) {
    switch (pick(3)) {
      case 0: {
        std::vector<FnExpr::Row> rows;
        std::size_t n = pick(4);
        for (std::size_t i = 0; i < n; ++i) rows.emplace_back(obj(depth - 1), obj(depth - 1));
        return FnExpr::table(gen(depth - 1), gen(depth - 1), std::move(rows));
      }
      case 1: {
        switch (pick(5)) {
          case 0: return FnExpr::builtin(BuiltinId::EqOf, {gen(depth - 1)});
          case 1: return FnExpr::builtin(BuiltinId::EmptyDetectorOf, {gen(depth - 1)});
          case 2:
            return FnExpr::builtin(BuiltinId::Restrict,
                                   {StreamArg{kStreams[pick(std::size(kStreams))]}, std::uint64_t{pick(9)}});
          case 3: return FnExpr::builtin(BuiltinId::UnionOfFamily, {family()});
          default:
            return FnExpr::builtin(BuiltinId::IndicatorStream, {StreamArg{kStreams[pick(std::size(kStreams))]}});
        }
      }
      default: return FnExpr::ref(Ident(kMorphisms[pick(std::size(kMorphisms))]));
    }
  }

  Judgment judgment(int depth) {
    int d = depth - 1;
    switch (pick(10)) {
      case 0: return IsGen{gen(d)};
      case 1: return IsObj{obj(d), gen(d)};
      case 2: return IsMor{fn(d), gen(d), gen(d)};
      case 3: return IsBinFn{fn(d), gen(d)};
      case 4: return IsDomain{gen(d), fn(d)};
      case 5: return SupportsQuant{gen(d)};
      case 6: return IsSet{gen(d)};
      case 7: return IsCoherentFamily{family()};
      case 8: {
        std::optional<GenExpr> g;
        if (pick(2)) g = gen(d);
        return IsEq{obj(d), obj(d), g};
      }
      default: return HasSection{fn(d), gen(d), gen(d)};
    }
  }

 private:
  static constexpr const char* kNames[] = {"A", "B", "color"};
  static constexpr const char* kTags[] = {"a", "b", "0"};
  static constexpr const char* kFamilies[] = {"F", "sq"};
  static constexpr const char* kStreams[] = {"squares", "periodic:1/01", "xor(pow2,finite:101)"};
  static constexpr const char* kMorphisms[] = {"f", "eq_two"};
  std::mt19937_64 rng_;
};

}  // namespace ogk::testing
