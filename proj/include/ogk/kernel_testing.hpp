// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

// Test hooks that bypass the kernel's sealing. Nothing outside tests/ may
// include this header.

#pragma once

#include "ogk/kernel.hpp"

namespace ogk {

struct KernelTestAccess {
  // A theorem claiming `j` while carrying `donor`'s trace.
  static Theorem forge(Judgment j, const Theorem& donor) {
    return Theorem(std::move(j), donor.trace_);
  }
  // A theorem whose root trace node claims `j`, with the original premises.
  static Theorem forge_root(Judgment j, const Theorem& donor) {
    auto node = std::make_shared<TraceNode>(*donor.trace_);
    node->conclusion = j;
    return Theorem(std::move(j), std::move(node));
  }
};

}  // namespace ogk
