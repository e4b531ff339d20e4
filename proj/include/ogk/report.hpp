// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ogk {

enum class ItemStatus { Pass, Fail, Assumed, Skipped };

const char* status_name(ItemStatus s);
std::optional<ItemStatus> status_from_name(const std::string& s);

using Witness = std::map<std::string, std::string>;

struct ReportItem {
  std::string name;
  ItemStatus status = ItemStatus::Pass;
  std::string detail;
  std::optional<Witness> witness;

  friend bool operator==(const ReportItem&, const ReportItem&) = default;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int assumed = 0;
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  std::string version;
  std::string command;
  std::vector<ReportItem> items;

  Summary summary() const;
  friend bool operator==(const Report&, const Report&) = default;
};

extern const char* const kToolVersion;

// {version, command, items: [{name, status, detail, witness?}], summary}
std::string to_json(const Report& r);
// Throws std::runtime_error on malformed input.
Report report_from_json(const std::string& text);

// One item per line, summary last.
void write_text(const Report& r, std::ostream& out, bool color = false);

}  // namespace ogk
