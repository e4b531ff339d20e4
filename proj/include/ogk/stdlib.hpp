// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

// Untrusted scripts over the kernel that build the standard objects: Two,
// the naturals, products and powersets of domains, and choice instances.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ogk/kernel.hpp"
#include "ogk/semantics.hpp"

namespace ogk::stdlib {

struct ConstructionResult {
  GenExpr expr = GenExpr::two();
  std::vector<Theorem> theorems;

  // The first theorem whose judgment is of form T, if any.
  template <class T>
  const Theorem* find() const {
    for (const auto& t : theorems)
      if (std::holds_alternative<T>(t.judgment())) return &t;
    return nullptr;
  }
};

ConstructionResult build_two(Kernel& k);
ConstructionResult build_naturals(Kernel& k);
// Componentwise equality; both inputs need a Domain theorem.
ConstructionResult build_product_domain(Kernel& k, const ConstructionResult& a,
                                        const ConstructionResult& b);
// Extensional equality through the empty detector; the input needs Domain
// and SupportsQuant theorems.
ConstructionResult build_powerset_domain(Kernel& k, const ConstructionResult& a);

// Two, Nat, Two * Two, Nat * Two, P[Two], P[Nat], P[P[Nat]] in that order.
std::vector<ConstructionResult> build_standard(Kernel& k);

// A surjection that misses an object in some checked model.
class ChoiceCounterexample : public std::runtime_error {
 public:
  ChoiceCounterexample(semantics::Model model, std::string uncovered);
  const semantics::Model& model() const { return model_; }
  const std::string& uncovered() const { return uncovered_; }

 private:
  semantics::Model model_;
  std::string uncovered_;
};

struct ChoiceResult {
  Theorem theorem;
  FnExpr section;  // table cod -> dom
};

// `surj` must be a table over declared carriers. The section is found by
// exhaustive search in the declared model and checked in every canonical
// model of the section judgment.
ChoiceResult choice_instance(Kernel& k, const FnExpr& surj, const GenExpr& dom, const GenExpr& cod);

}  // namespace ogk::stdlib
