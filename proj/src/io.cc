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

#include "pb/io.h"

#include <fstream>
#include <system_error>

#include "pb/errors.h"

namespace pb {
namespace {

// Runs `fn`, turning nlohmann type/range errors into ValidationError.
template <typename Fn>
auto Structured(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& Require(const Json& json, const char* key, const char* what) {
  if (!json.is_object() || !json.contains(key)) {
    throw ValidationError(std::string(what) + " is missing \"" + key + "\"");
  }
  return json.at(key);
}

std::vector<ProjectId> IdList(const Json& json) {
  std::vector<ProjectId> ids;
  for (const Json& id : json) ids.push_back(id.get<ProjectId>());
  return ids;
}

Json RangeToJson(const IntRange& range) { return Json::array({range.lo, range.hi}); }

IntRange RangeFromJson(const Json& json) {
  if (!json.is_array() || json.size() != 2) {
    throw ValidationError("range must be a two-element array");
  }
  return IntRange{json[0].get<int>(), json[1].get<int>()};
}

}  // namespace

Json ToJson(const Instance& instance) {
  Json json;
  json["limit"] = instance.limit();
  Json projects = Json::array();
  for (const Project& p : instance.projects()) {
    projects.push_back({{"id", p.id}, {"cost", p.cost}});
  }
  json["projects"] = std::move(projects);
  Json ballots = Json::array();
  for (const ApprovalBallot& ballot : instance.ballots()) {
    ballots.push_back(Json(std::vector<ProjectId>(ballot.approved().begin(),
                                                  ballot.approved().end())));
  }
  json["ballots"] = std::move(ballots);
  if (instance.has_rankings()) {
    Json rankings = Json::array();
    for (const Ranking& ranking : instance.rankings()) {
      rankings.push_back(Json(std::vector<ProjectId>(ranking.order().begin(),
                                                     ranking.order().end())));
    }
    json["rankings"] = std::move(rankings);
  }
  if (instance.allow_zero_cost()) json["allow_zero_cost"] = true;
  return json;
}

Instance InstanceFromJson(const Json& json) {
  return Structured("instance", [&] {
    const Money limit = Require(json, "limit", "instance").get<Money>();
    std::vector<Project> projects;
    for (const Json& p : Require(json, "projects", "instance")) {
      projects.push_back(
          Project{Require(p, "id", "project").get<ProjectId>(),
                  Require(p, "cost", "project").get<Money>()});
    }
    std::vector<ApprovalBallot> ballots;
    for (const Json& b : Require(json, "ballots", "instance")) {
      if (!b.is_array()) throw ValidationError("ballot must be an array");
      ballots.emplace_back(IdList(b));
    }
    std::optional<std::vector<Ranking>> rankings;
    if (json.contains("rankings") && !json["rankings"].is_null()) {
      rankings.emplace();
      for (const Json& r : json["rankings"]) {
        if (!r.is_array()) throw ValidationError("ranking must be an array");
        rankings->emplace_back(IdList(r));
      }
    }
    const bool allow_zero_cost = json.value("allow_zero_cost", false);
    return Instance(std::move(projects), std::move(ballots), limit,
                    std::move(rankings), allow_zero_cost);
  });
}

Json ToJson(const Budget& budget) {
  return {{"selected", std::vector<ProjectId>(budget.selected().begin(),
                                              budget.selected().end())},
          {"total_cost", budget.total_cost()}};
}

Budget BudgetFromJson(const Instance& instance, const Json& json) {
  return Structured("budget", [&] {
    Budget budget =
        Budget::Of(instance, IdList(Require(json, "selected", "budget")));
    if (json.contains("total_cost") &&
        json["total_cost"].get<Money>() != budget.total_cost()) {
      throw ValidationError(
          "budget total_cost " + json["total_cost"].dump() +
          " does not match the project costs (" +
          std::to_string(budget.total_cost()) + ")");
    }
    return budget;
  });
}

Json ToJson(const AxiomReport& report) {
  Json json;
  json["axiom"] = std::string(ToString(report.axiom));
  json["satisfied"] = report.satisfied;
  if (report.witness) {
    json["witness"] = {{"project", report.witness->project},
                       {"voters", report.witness->voters}};
  } else {
    json["witness"] = nullptr;
  }
  return json;
}

Json ToJson(const Rational& value) {
  if (denominator(value) == 1) {
    return numerator(value).convert_to<long long>();
  }
  return value.str();
}

Json ToJson(const RuleTrace& trace) {
  Json steps = Json::array();
  for (const TraceStep& step : trace.steps) {
    steps.push_back({{"iteration", step.iteration},
                     {"project", step.project},
                     {"score", ToJson(step.score)},
                     {"voters", step.voters}});
  }
  return steps;
}

Json ToJson(const Assignment& assignment) {
  Json rep = Json::array();
  for (VoterId v = 0; v < assignment.num_voters(); ++v) {
    const auto r = assignment.representative(v);
    rep.push_back(r ? Json(*r) : Json(nullptr));
  }
  return {{"capacity", assignment.capacity()}, {"representative", rep}};
}

Json ToJson(const CultureConfig& config) {
  Json json;
  json["voters"] = RangeToJson(config.voters);
  json["projects"] = RangeToJson(config.projects);
  if (config.cost.kind == CostModel::Kind::kUnit) {
    json["cost"] = {{"model", "unit"}};
  } else {
    json["cost"] = {{"model", "uniform_int"},
                    {"min", config.cost.min},
                    {"max", config.cost.max}};
  }
  json["limit"] = config.limit == LimitModel::kUniformCommittee
                      ? "uniform_committee"
                      : "uniform_budget";
  if (config.ballots.kind == BallotModel::Kind::kPrefix) {
    json["ballots"] = {{"model", "prefix"}};
  } else {
    json["ballots"] = {{"model", "bernoulli"}, {"p", config.ballots.p}};
  }
  json["master_seed"] = config.master_seed;
  return json;
}

CultureConfig CultureConfigFromJson(const Json& json,
                                    const CultureConfig& defaults) {
  return Structured("culture config", [&] {
    if (!json.is_object()) {
      throw ValidationError("culture config must be an object");
    }
    CultureConfig config = defaults;
    if (json.contains("voters")) config.voters = RangeFromJson(json["voters"]);
    if (json.contains("projects")) {
      config.projects = RangeFromJson(json["projects"]);
    }
    if (json.contains("cost")) {
      const Json& cost = json["cost"];
      const std::string model = Require(cost, "model", "cost").get<std::string>();
      if (model == "unit") {
        config.cost = CostModel{};
      } else if (model == "uniform_int") {
        config.cost = CostModel{CostModel::Kind::kUniformInt,
                                Require(cost, "min", "cost").get<Money>(),
                                Require(cost, "max", "cost").get<Money>()};
      } else {
        throw ConfigError("unknown cost model '" + model + "'");
      }
    }
    if (json.contains("limit")) {
      const std::string model = json["limit"].get<std::string>();
      if (model == "uniform_committee") {
        config.limit = LimitModel::kUniformCommittee;
      } else if (model == "uniform_budget") {
        config.limit = LimitModel::kUniformBudget;
      } else {
        throw ConfigError("unknown limit model '" + model + "'");
      }
    }
    if (json.contains("ballots")) {
      const Json& ballots = json["ballots"];
      const std::string model =
          Require(ballots, "model", "ballots").get<std::string>();
      if (model == "prefix") {
        config.ballots = BallotModel{};
      } else if (model == "bernoulli") {
        config.ballots = BallotModel{BallotModel::Kind::kBernoulli,
                                     ballots.value("p", 0.5)};
      } else {
        throw ConfigError("unknown ballot model '" + model + "'");
      }
    }
    if (json.contains("master_seed")) {
      config.master_seed = json["master_seed"].get<std::uint64_t>();
    }
    config.Validate();
    return config;
  });
}

Json ToJson(const ExperimentConfig& config) {
  Json json;
  json["master_seed"] = config.master_seed;
  json["trial_counts"] = config.trial_counts;
  json["axiom"] = std::string(ToString(config.axiom));
  json["scoring"] = std::string(ToString(config.rule_options.scoring));
  json["quota"] = std::string(ToString(config.rule_options.quota));
  json["workers"] = config.workers;
  json["record_timing"] = config.record_timing;
  Json cases = Json::array();
  for (const CaseConfig& c : config.cases) {
    Json rules = Json::array();
    for (RuleKind rule : c.rules) rules.push_back(std::string(ToString(rule)));
    Json culture = ToJson(c.culture);
    culture.erase("master_seed");
    cases.push_back({{"case", std::string(ToString(c.which))},
                     {"rules", rules},
                     {"culture", culture}});
  }
  json["cases"] = cases;
  return json;
}

ExperimentConfig ExperimentConfigFromJson(const Json& json) {
  return Structured("experiment config", [&] {
    if (!json.is_object()) {
      throw ValidationError("experiment config must be an object");
    }
    ExperimentConfig config;
    config.master_seed = json.value<std::uint64_t>("master_seed", 0);
    if (json.contains("trial_counts")) {
      config.trial_counts = json["trial_counts"].get<std::vector<int>>();
    }
    config.axiom = ParseAxiom(json.value("axiom", std::string("ujr")));
    config.rule_options.scoring =
        ParseScoringMode(json.value("scoring", std::string("approval")));
    config.rule_options.quota =
        ParseQuotaKind(json.value("quota", std::string("hare")));
    config.workers = json.value("workers", 0);
    config.record_timing = json.value("record_timing", true);

    for (const Json& c : Require(json, "cases", "experiment config")) {
      CaseConfig case_config;
      case_config.which =
          ParseCase(Require(c, "case", "case").get<std::string>());
      const CultureConfig defaults =
          case_config.which == Case::kEqualValued
              ? CultureConfig::EqualValued()
              : CultureConfig::GeneralCase();
      case_config.culture = c.contains("culture")
                                ? CultureConfigFromJson(c["culture"], defaults)
                                : defaults;
      if (c.contains("rules")) {
        for (const Json& rule : c["rules"]) {
          case_config.rules.push_back(ParseRuleKind(rule.get<std::string>()));
        }
      } else if (case_config.which == Case::kEqualValued) {
        case_config.rules = {RuleKind::kSccr, RuleKind::kSmr, RuleKind::kStv};
      } else {
        case_config.rules = {RuleKind::kSccr};
      }
      config.cases.push_back(std::move(case_config));
    }
    config.Validate();
    return config;
  });
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.string() + " is not valid JSON: " + e.what());
  }
}

void WriteFileAtomically(const std::filesystem::path& path,
                         const std::string& content) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw IoError("cannot write " + path.string());
    }
  }
  std::error_code error;
  std::filesystem::rename(temp, path, error);
  if (error) {
    std::filesystem::remove(temp, error);
    throw IoError("cannot write " + path.string());
  }
}

}  // namespace pb
