// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ogk/report.hpp"

#include <stdexcept>

#include "json.hpp"

namespace ogk {

const char* const kToolVersion = "ogk 0.1.0 (og-syntax 1)";

const char* status_name(ItemStatus s) {
  switch (s) {
    case ItemStatus::Pass: return "pass";
    case ItemStatus::Fail: return "fail";
    case ItemStatus::Assumed: return "assumed";
    case ItemStatus::Skipped: return "skipped";
  }
  return "?";
}

std::optional<ItemStatus> status_from_name(const std::string& s) {
  for (auto st : {ItemStatus::Pass, ItemStatus::Fail, ItemStatus::Assumed, ItemStatus::Skipped})
    if (s == status_name(st)) return st;
  return std::nullopt;
}

Summary Report::summary() const {
  Summary s;
  for (const auto& item : items) {
    if (item.status == ItemStatus::Pass) ++s.pass;
    if (item.status == ItemStatus::Fail) ++s.fail;
    if (item.status == ItemStatus::Assumed) ++s.assumed;
  }
  return s;
}

std::string to_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json items = ordered_json::array();
  for (const auto& item : r.items) {
    ordered_json j;
    j["name"] = item.name;
    j["status"] = status_name(item.status);
    j["detail"] = item.detail;
    if (item.witness) {
      ordered_json w = ordered_json::object();
      for (const auto& [k, v] : *item.witness) w[k] = v;
      j["witness"] = std::move(w);
    }
    items.push_back(std::move(j));
  }
  Summary s = r.summary();
  ordered_json out;
  out["version"] = r.version;
  out["command"] = r.command;
  out["items"] = std::move(items);
  out["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"assumed", s.assumed}};
  return out.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
  Report r;
  try {
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    for (const auto& ji : j.at("items")) {
      ReportItem item;
      item.name = ji.at("name").get<std::string>();
      auto st = status_from_name(ji.at("status").get<std::string>());
      if (!st) throw std::runtime_error("malformed report: unknown status");
      item.status = *st;
      item.detail = ji.at("detail").get<std::string>();
      if (ji.contains("witness")) item.witness = ji.at("witness").get<Witness>();
      r.items.push_back(std::move(item));
    }
    const auto& js = j.at("summary");
    Summary s{js.at("pass").get<int>(), js.at("fail").get<int>(), js.at("assumed").get<int>()};
    if (!(s == r.summary())) throw std::runtime_error("malformed report: summary does not match items");
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
  return r;
}

void write_text(const Report& r, std::ostream& out, bool color) {
  auto paint = [&](ItemStatus s) -> std::string {
    std::string word = status_name(s);
    if (!color) return word;
    switch (s) {
      case ItemStatus::Pass: return "\033[32m" + word + "\033[0m";
      case ItemStatus::Fail: return "\033[31m" + word + "\033[0m";
      case ItemStatus::Assumed: return "\033[33m" + word + "\033[0m";
      case ItemStatus::Skipped: return "\033[90m" + word + "\033[0m";
    }
    return word;
  };
  for (const auto& item : r.items) {
    out << paint(item.status) << "  " << item.name;
    if (!item.detail.empty()) out << "  -- " << item.detail;
    if (item.witness) {
      out << "  [witness:";
      for (const auto& [k, v] : *item.witness) out << " " << k << "=" << v;
      out << "]";
    }
    out << "\n";
  }
  Summary s = r.summary();
  out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.assumed << " assumed\n";
}

}  // namespace ogk
