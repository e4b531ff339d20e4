// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ogk/cli.hpp"

namespace {

void add_output_flags(CLI::App* sub, ogk::cli::RunConfig& c, std::string& format) {
  sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", c.out, "write the report to this file");
  sub->add_option("--timings", c.timings, "write per-phase wall-clock seconds as JSON");
}

}  // namespace

int main(int argc, char** argv) {
  using ogk::cli::Command;
  ogk::cli::RunConfig config;
  std::string format = "text";

  CLI::App app{"ogk: proof kernel and finite model checker for object generators"};
  app.set_version_flag("--version", std::string(ogk::kToolVersion));
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "elaborate and replay .og files");
  check->add_option("files", config.inputs, ".og files, elaborated in order")->required();
  add_output_flags(check, config, format);

  auto* model = app.add_subcommand("model", "soundness sweep and axiom instance checks");
  model->add_option("files", config.inputs, ".og files (default: the standard constructions)");
  model->add_option("--max-size", config.max_size, "largest free carrier size (at most 4)");
  add_output_flags(model, config, format);

  auto* limits = app.add_subcommand("limits", "eventually-periodic membership and the gap demo");
  limits->add_option("streams", config.inputs, "stream specs such as periodic:0/01 or squares");
  limits->add_flag("--demo", config.demo, "run the gap demonstration");
  limits->add_option("--horizon", config.horizon);
  limits->add_option("--preperiod-bound", config.preperiod_bound);
  limits->add_option("--period-bound", config.period_bound);
  add_output_flags(limits, config, format);

  auto* axioms = app.add_subcommand("axioms", "list the assumed axioms");
  add_output_flags(axioms, config, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ogk::cli::kExitOk : ogk::cli::kExitUsage;
  }

  if (check->parsed()) config.command = Command::Check;
  if (model->parsed()) config.command = Command::Model;
  if (limits->parsed()) config.command = Command::Limits;
  if (axioms->parsed()) config.command = Command::Axioms;
  config.format = format == "json" ? ogk::cli::Format::Json : ogk::cli::Format::Text;
  const char* color = std::getenv("OGK_COLOR");
  config.color = color != nullptr && std::string(color) == "1";

  return ogk::cli::run(config, std::cout, std::cerr);
}
