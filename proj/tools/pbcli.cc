// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pbcli: generate instances, run budgeting rules, check representation
// axioms and run satisfaction experiments.
//
// Exit codes: 0 success, 1 malformed input or I/O failure, 2 contract or
// configuration error, 3 axiom violated (check-axiom only). Errors print a
// single "error: <kind>: <message>" line on stderr.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pb/axioms.h"
#include "pb/culture.h"
#include "pb/errors.h"
#include "pb/harness.h"
#include "pb/io.h"
#include "pb/rules.h"

namespace {

constexpr int kExitMalformed = 1;
constexpr int kExitContract = 2;
constexpr int kExitViolated = 3;

int ExitCodeFor(const pb::Error& error) {
  const std::string& kind = error.kind();
  if (kind == "validation" || kind == "io") return kExitMalformed;
  return kExitContract;
}

void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    pb::WriteFileAtomically(out_path, text);
  }
}

// A gen config is either a culture config or an experiment config, in which
// case `case_name` picks the case (first case by default).
pb::CultureConfig LoadCulture(const pb::Json& json,
                              const std::string& case_name) {
  if (!json.is_object() || !json.contains("cases")) {
    return pb::CultureConfigFromJson(json);
  }
  const pb::ExperimentConfig experiment = pb::ExperimentConfigFromJson(json);
  for (const pb::CaseConfig& c : experiment.cases) {
    if (case_name.empty() || pb::ParseCase(case_name) == c.which) {
      return pb::EffectiveCulture(experiment, c);
    }
  }
  throw pb::ConfigError("case " + case_name + " is not in the config");
}

struct GenArgs {
  std::string config;
  std::string case_name;
  std::uint64_t trial = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int RunGen(const GenArgs& args) {
  pb::CultureConfig culture =
      LoadCulture(pb::ReadJsonFile(args.config), args.case_name);
  if (args.seed) culture.master_seed = *args.seed;
  const pb::Instance instance = pb::Generate(culture, args.trial);
  Emit(pb::ToJson(instance).dump() + "\n", args.out);
  return 0;
}

struct RunRuleArgs {
  std::string rule;
  std::string instance;
  std::string scoring = "approval";
  std::string quota = "hare";
  bool trace = false;
  std::string out;
};

int RunRunRule(const RunRuleArgs& args) {
  const pb::RuleKind rule = pb::ParseRuleKind(args.rule);
  pb::RuleOptions options;
  options.scoring = pb::ParseScoringMode(args.scoring);
  options.quota = pb::ParseQuotaKind(args.quota);
  const pb::Instance instance =
      pb::InstanceFromJson(pb::ReadJsonFile(args.instance));
  const pb::RuleOutcome outcome = pb::RunRule(instance, rule, options);
  pb::Json json = pb::ToJson(outcome.budget);
  if (args.trace) {
    json["trace"] = pb::ToJson(outcome.trace);
    if (outcome.assignment) {
      json["assignment"] = pb::ToJson(*outcome.assignment);
    }
  }
  Emit(json.dump() + "\n", args.out);
  return 0;
}

struct CheckAxiomArgs {
  std::string axiom;
  std::string instance;
  std::string budget;
  std::string out;
};

int RunCheckAxiom(const CheckAxiomArgs& args) {
  const pb::Axiom axiom = pb::ParseAxiom(args.axiom);
  const pb::Instance instance =
      pb::InstanceFromJson(pb::ReadJsonFile(args.instance));
  const pb::Budget budget =
      pb::BudgetFromJson(instance, pb::ReadJsonFile(args.budget));
  if (!pb::IsFeasible(instance, budget)) {
    throw pb::ContractError("budget exceeds the limit");
  }
  const pb::AxiomReport report = pb::CheckAxiom(instance, budget, axiom);
  Emit(pb::ToJson(report).dump() + "\n", args.out);
  return report.satisfied ? 0 : kExitViolated;
}

struct ExperimentArgs {
  std::string config;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
};

int RunExperimentCommand(const ExperimentArgs& args) {
  pb::ExperimentConfig config =
      pb::ExperimentConfigFromJson(pb::ReadJsonFile(args.config));
  if (args.seed) config.master_seed = *args.seed;
  if (args.workers) config.workers = *args.workers;
  const pb::ExperimentResult result = pb::RunExperiment(config);

  std::filesystem::create_directories(args.out_dir);
  std::ostringstream csv;
  pb::WriteResultsCsv(result, csv);
  const std::filesystem::path dir(args.out_dir);
  pb::WriteFileAtomically(dir / "results.csv", csv.str());
  pb::EmitPlotData(result, dir);
  std::cout << csv.str();
  return 0;
}

struct PlotDataArgs {
  std::string results;
  std::string out_dir;
};

int RunPlotData(const PlotDataArgs& args) {
  std::ifstream in(args.results);
  if (!in) throw pb::IoError("cannot read " + args.results);
  const pb::ExperimentResult result = pb::ParseResultsCsv(in);
  std::filesystem::create_directories(args.out_dir);
  for (const auto& path : pb::EmitPlotData(result, args.out_dir)) {
    std::cout << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Participatory budgeting rules, axioms and experiments"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate one random instance");
  gen_cmd->add_option("--config", gen.config, "Culture or experiment config")
      ->required();
  gen_cmd->add_option("--case", gen.case_name,
                      "Case to use from an experiment config");
  gen_cmd->add_option("--trial", gen.trial, "Trial index")->required();
  gen_cmd->add_option("--seed", gen.seed, "Override the master seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  RunRuleArgs run;
  auto* run_cmd = app.add_subcommand("run-rule", "Elect a budget");
  run_cmd->add_option("--rule", run.rule, "sccr | smr | stv")
      ->required()
      ->check(CLI::IsMember({"sccr", "smr", "stv"}));
  run_cmd->add_option("--instance", run.instance, "Instance JSON")->required();
  run_cmd->add_option("--scoring", run.scoring, "approval | borda")
      ->check(CLI::IsMember({"approval", "borda"}));
  run_cmd->add_option("--quota", run.quota, "hare | droop")
      ->check(CLI::IsMember({"hare", "droop"}));
  run_cmd->add_flag("--trace", run.trace, "Include the selection trace");
  run_cmd->add_option("--out", run.out, "Output file (default stdout)");

  CheckAxiomArgs check;
  auto* check_cmd =
      app.add_subcommand("check-axiom", "Check a budget against an axiom");
  check_cmd->add_option("--axiom", check.axiom, "ujr | strong-bjr")
      ->required()
      ->check(CLI::IsMember({"ujr", "strong-bjr"}));
  check_cmd->add_option("--instance", check.instance, "Instance JSON")
      ->required();
  check_cmd->add_option("--budget", check.budget, "Budget JSON")->required();
  check_cmd->add_option("--out", check.out, "Output file (default stdout)");

  ExperimentArgs experiment;
  auto* experiment_cmd =
      app.add_subcommand("experiment", "Run a satisfaction experiment");
  experiment_cmd->add_option("--config", experiment.config, "Experiment JSON")
      ->required();
  experiment_cmd->add_option("--out-dir", experiment.out_dir)->required();
  experiment_cmd->add_option("--seed", experiment.seed,
                             "Override the master seed");
  experiment_cmd->add_option("--workers", experiment.workers,
                             "Worker threads (0 = all cores)");

  PlotDataArgs plot;
  auto* plot_cmd =
      app.add_subcommand("plot-data", "Re-emit figure CSVs from results");
  plot_cmd->add_option("--results", plot.results, "Results CSV")->required();
  plot_cmd->add_option("--out-dir", plot.out_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitContract;
  }

  try {
    if (*gen_cmd) return RunGen(gen);
    if (*run_cmd) return RunRunRule(run);
    if (*check_cmd) return RunCheckAxiom(check);
    if (*experiment_cmd) return RunExperimentCommand(experiment);
    if (*plot_cmd) return RunPlotData(plot);
  } catch (const pb::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: io: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitContract;
}
