// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

// Batch front end shared by the `ogk` executable and the tests.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ogk/report.hpp"

namespace ogk::cli {

enum class Command { Check, Model, Limits, Axioms };
enum class Format { Text, Json };

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

struct RunConfig {
  Command command = Command::Check;
  std::vector<std::string> inputs;  // files, or stream specs for `limits`
  std::uint64_t max_size = 3;
  std::uint64_t horizon = 4096;
  std::uint64_t preperiod_bound = 64;
  std::uint64_t period_bound = 64;
  Format format = Format::Text;
  std::optional<std::string> out;
  std::optional<std::string> timings;
  bool demo = false;
  bool color = false;
};

struct RunResult {
  int exit_code = kExitOk;
  Report report;
  // Wall-clock seconds per phase; only ever written to the timings sidecar.
  std::vector<std::pair<std::string, double>> timings;
};

// Builds the report without writing it anywhere. Diagnostics go to `err`.
RunResult execute(const RunConfig& config, std::ostream& err);

// execute() followed by emission to config.out or `out`; an unwritable
// destination turns the exit code into kExitInternal.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

std::string emit(const Report& r, Format format, bool color);

}  // namespace ogk::cli
