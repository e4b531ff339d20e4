// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ogk/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ogk/elaborate.hpp"
#include "ogk/kernel.hpp"
#include "ogk/limits.hpp"
#include "ogk/semantics.hpp"
#include "ogk/stdlib.hpp"

namespace ogk::cli {

namespace {

// Raised for bad invocations; becomes exit 2.
struct UsageError {
  std::string message;
};

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<std::pair<std::string, double>>& sink, std::string phase)
      : sink_(sink), phase_(std::move(phase)), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
    sink_.emplace_back(phase_, d.count());
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::string phase_;
  std::chrono::steady_clock::time_point start_;
};

std::string axiom_list(const Theorem& t) {
  std::string s = "{";
  bool first = true;
  for (AxiomId a : t.axioms_used()) {
    s += (first ? "" : ", ") + std::string(axiom_name(a));
    first = false;
  }
  return s + "}";
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Check: return "check";
    case Command::Model: return "model";
    case Command::Limits: return "limits";
    case Command::Axioms: return "axioms";
  }
  return "?";
}

void require_files(const RunConfig& c) {
  for (const auto& f : c.inputs)
    if (!std::filesystem::is_regular_file(f)) throw UsageError{"cannot read '" + f + "'"};
}

// Elaborates the inputs in order on one kernel; diagnostics go to `err` and
// become failing items.
surface::Session elaborate(Kernel& k, const RunConfig& c, std::vector<ReportItem>& items,
                           std::ostream& err) {
  surface::Elaborator el(k);
  for (const auto& f : c.inputs) el.run_file(f);
  surface::Session s = el.take_session();
  for (const auto& d : s.diagnostics) {
    err << surface::format(d) << "\n";
    ReportItem item{"diagnostic " + d.code, ItemStatus::Fail, surface::format(d), std::nullopt};
    items.push_back(std::move(item));
  }
  return s;
}

ReportItem model_check_item(const surface::ModelCheckResult& r) {
  ReportItem item;
  item.name = "model check " + render(r.judgment) + " upto " + std::to_string(r.bound);
  switch (r.status) {
    case semantics::Status::Holds:
      item.status = ItemStatus::Pass;
      item.detail = "holds in " + std::to_string(r.models_checked) + " model(s)";
      if (r.truncated_at) item.detail += ", Nat truncated at " + std::to_string(*r.truncated_at);
      break;
    case semantics::Status::Fails:
      item.status = ItemStatus::Fail;
      item.detail = "fails";
      item.witness = r.witness;
      break;
    case semantics::Status::NotFinitelyCheckable:
      item.status = ItemStatus::Skipped;
      item.detail = "not finitely checkable: " + r.note;
      break;
  }
  return item;
}

int exit_for(const Report& r) { return r.summary().fail == 0 ? kExitOk : kExitFail; }

RunResult run_check(const RunConfig& c, std::ostream& err) {
  if (c.inputs.empty()) throw UsageError{"check needs at least one .og file"};
  require_files(c);
  RunResult res;
  Kernel k;
  std::vector<ReportItem> diag_items;
  surface::Session s;
  {
    Stopwatch sw(res.timings, "elaborate");
    s = elaborate(k, c, diag_items, err);
  }
  Stopwatch sw(res.timings, "verify");
  for (const auto& a : s.asserts) {
    TraceReport tr = k.verify_trace(a.theorem);
    ReportItem item;
    item.name = "theorem " + render(a.theorem.judgment());
    item.status = tr.passed ? ItemStatus::Pass : ItemStatus::Fail;
    item.detail = (a.label ? *a.label + ": " : std::string()) +
                  std::to_string(a.theorem.node_count()) + " node(s), axioms " +
                  axiom_list(a.theorem);
    if (!tr.passed) item.detail += "; replay failed: " + tr.root_message;
    res.report.items.push_back(std::move(item));
  }
  for (const auto& m : s.checks) res.report.items.push_back(model_check_item(m));
  res.report.items.insert(res.report.items.end(), diag_items.begin(), diag_items.end());
  res.exit_code = s.syntax_errors ? kExitUsage : exit_for(res.report);
  return res;
}

RunResult run_model(const RunConfig& c, std::ostream& err) {
  if (c.max_size > 4) throw UsageError{"--max-size must be at most 4"};
  require_files(c);
  RunResult res;
  Kernel k;
  std::vector<Theorem> theorems;
  bool syntax_errors = false;
  {
    Stopwatch sw(res.timings, "derive");
    if (c.inputs.empty()) {
      for (const auto& r : stdlib::build_standard(k))
        theorems.insert(theorems.end(), r.theorems.begin(), r.theorems.end());
    } else {
      surface::Session s = elaborate(k, c, res.report.items, err);
      syntax_errors = s.syntax_errors;
      for (const auto& a : s.asserts) theorems.push_back(a.theorem);
    }
  }
  {
    Stopwatch sw(res.timings, "soundness sweep");
    auto items = semantics::soundness_sweep(theorems, k.signature(), c.max_size).report_items();
    res.report.items.insert(res.report.items.end(), items.begin(), items.end());
  }
  {
    Stopwatch sw(res.timings, "axiom instances");
    auto items = semantics::verify_axiom_instances(semantics::default_model());
    res.report.items.insert(res.report.items.end(), items.begin(), items.end());
  }
  {
    Stopwatch sw(res.timings, "zfc-1 instances");
    auto families = semantics::check_zfc1_instances(semantics::HFUniverse::build(3));
    auto items = semantics::zfc1_report_items(families);
    res.report.items.insert(res.report.items.end(), items.begin(), items.end());
  }
  res.exit_code = syntax_errors ? kExitUsage : exit_for(res.report);
  return res;
}

std::string bounds_text(const RunConfig& c) {
  return "(" + std::to_string(c.preperiod_bound) + ", " + std::to_string(c.period_bound) + ", " +
         std::to_string(c.horizon) + ")";
}

RunResult run_limits(const RunConfig& c) {
  if (!c.demo && c.inputs.empty()) throw UsageError{"limits needs --demo or stream specs"};
  RunResult res;
  auto& items = res.report.items;
  auto pass_if = [](bool b) { return b ? ItemStatus::Pass : ItemStatus::Fail; };
  try {
    if (c.demo) {
      limits::GapOptions o;
      o.preperiod_bound = c.preperiod_bound;
      o.period_bound = c.period_bound;
      o.horizon = c.horizon;
      limits::GapReport g;
      {
        Stopwatch sw(res.timings, "gap");
        g = limits::demonstrate_gap(o);
      }
      items.push_back({"gap (a) finite stages are members", pass_if(g.stages_member == g.stages_checked),
                       std::to_string(g.stages_member) + "/" + std::to_string(g.stages_checked) +
                           " zero-extended restrictions of " + g.subject + " are eventually periodic",
                       std::nullopt});
      ReportItem closure{"gap (b) closure spot-checks", pass_if(g.closure_passed == g.closure_checked),
                         std::to_string(g.closure_passed) + "/" + std::to_string(g.closure_checked) +
                             " xor/shift/flip results are members with their predicted witness",
                         std::nullopt};
      if (!g.closure_failures.empty()) closure.witness = Witness{{"stream", g.closure_failures.front()}};
      items.push_back(std::move(closure));
      ReportItem uni{"gap (c) union round-trip", pass_if(g.union_matches),
                     "union of the restrictions equals " + g.subject + " on [0, " +
                         std::to_string(c.horizon) + "]",
                     std::nullopt};
      if (g.union_mismatch_at) uni.witness = Witness{{"index", std::to_string(*g.union_mismatch_at)}};
      items.push_back(std::move(uni));
      ReportItem d{"gap (d) limit outside the small model", pass_if(!g.subject_verdict.member),
                   g.subject + " is non-member up to bounds " + bounds_text(c), std::nullopt};
      if (g.subject_verdict.witness)
        d.witness = Witness{{"preperiod", std::to_string(g.subject_verdict.witness->preperiod)},
                            {"period", std::to_string(g.subject_verdict.witness->period)}};
      items.push_back(std::move(d));

      // Control: a periodic subject must flip (d) and withdraw the conclusion.
      limits::GapOptions ctl = o;
      ctl.subject = limits::BitStream::parse("periodic:1/01");
      limits::GapReport cg;
      {
        Stopwatch sw(res.timings, "control");
        cg = limits::demonstrate_gap(ctl);
      }
      items.push_back({"gap control with " + cg.subject,
                       pass_if(cg.subject_verdict.member && !cg.gap_demonstrated),
                       "(d) flips to member; " + cg.conclusion, std::nullopt});
      items.push_back({"gap conclusion", pass_if(g.gap_demonstrated), g.conclusion, std::nullopt});
    }
    std::optional<Stopwatch> sw;
    if (!c.inputs.empty()) sw.emplace(res.timings, "ep_decide");
    for (const auto& spec : c.inputs) {
      limits::BitStream s = limits::BitStream::parse(spec);
      auto v = limits::ep_decide(s, c.preperiod_bound, c.period_bound, c.horizon);
      ReportItem item{"ep " + s.spec(), ItemStatus::Pass, "", std::nullopt};
      if (v.member) {
        item.detail = "member, witness (" + std::to_string(v.witness->preperiod) + ", " +
                      std::to_string(v.witness->period) + ")";
      } else {
        item.detail = "non-member up to bounds " + bounds_text(c);
      }
      items.push_back(std::move(item));
    }
  } catch (const limits::StreamSpecError& e) {
    throw UsageError{e.what()};
  } catch (const limits::BoundError& e) {
    throw UsageError{e.what()};
  }
  res.exit_code = exit_for(res.report);
  return res;
}

RunResult run_axioms() {
  RunResult res;
  for (AxiomId a : kAllAxioms)
    res.report.items.push_back({axiom_name(a), ItemStatus::Assumed, axiom_statement(a), std::nullopt});
  return res;
}

}  // namespace

std::string emit(const Report& r, Format format, bool color) {
  if (format == Format::Json) return to_json(r);
  std::ostringstream os;
  write_text(r, os, color);
  return os.str();
}

RunResult execute(const RunConfig& config, std::ostream& err) {
  RunResult res;
  try {
    switch (config.command) {
      case Command::Check: res = run_check(config, err); break;
      case Command::Model: res = run_model(config, err); break;
      case Command::Limits: res = run_limits(config); break;
      case Command::Axioms: res = run_axioms(); break;
    }
  } catch (const UsageError& e) {
    err << "ogk: error: " << e.message << "\n";
    res = RunResult{};
    res.exit_code = kExitUsage;
  }
  res.report.version = kToolVersion;
  res.report.command = command_name(config.command);
  for (const auto& in : config.inputs) res.report.command += " " + in;
  return res;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunResult res;
  try {
    res = execute(config, err);
  } catch (const std::exception& e) {
    err << "ogk: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  // Bad invocations produce no report at all.
  if (res.exit_code == kExitUsage && res.report.items.empty()) return res.exit_code;
  std::string text = emit(res.report, config.format, config.color && !config.out);
  if (config.out) {
    std::ofstream f(*config.out, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
      err << "ogk: error: cannot write '" << *config.out << "'\n";
      return kExitInternal;
    }
  } else {
    out << text;
  }
  if (config.timings) {
    nlohmann::ordered_json j;
    j["command"] = res.report.command;
    j["phases"] = nlohmann::ordered_json::array();
    for (const auto& [phase, secs] : res.timings) j["phases"].push_back({{"phase", phase}, {"seconds", secs}});
    std::ofstream f(*config.timings, std::ios::binary);
    if (!f || !(f << j.dump(2) << "\n")) {
      err << "ogk: error: cannot write '" << *config.timings << "'\n";
      return kExitInternal;
    }
  }
  return res.exit_code;
}

}  // namespace ogk::cli
