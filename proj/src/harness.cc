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

#include "pb/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "pb/io.h"

namespace pb {
namespace {

bool ProducesRankings(const CultureConfig& culture) {
  return culture.ballots.kind == BallotModel::Kind::kPrefix;
}

// Outcome of one trial for every rule of a case.
struct TrialSlot {
  std::vector<char> satisfied;
  std::vector<std::int64_t> nanos;
  std::exception_ptr error;
  std::string error_message;
};

bool EvaluateRule(const Instance& instance, RuleKind rule,
                  const ExperimentConfig& config) {
  const RuleOutcome outcome = RunRule(instance, rule, config.rule_options);
  if (!IsFeasible(instance, outcome.budget)) {
    throw ContractError(std::string(ToString(rule)) +
                        " returned an infeasible budget");
  }
  return CheckAxiom(instance, outcome.budget, config.axiom).satisfied;
}

std::vector<TrialSlot> RunCase(const ExperimentConfig& config,
                               const CaseConfig& case_config, int trials) {
  const CultureConfig culture = EffectiveCulture(config, case_config);
  std::vector<TrialSlot> slots(trials);
  std::atomic<int> next{0};

  auto work = [&] {
    for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
      TrialSlot& slot = slots[t];
      try {
        const auto start = std::chrono::steady_clock::now();
        const Instance instance = Generate(culture, t);
        auto mark = std::chrono::steady_clock::now();
        const std::int64_t gen_nanos =
            std::chrono::duration_cast<std::chrono::nanoseconds>(mark - start)
                .count();
        for (RuleKind rule : case_config.rules) {
          slot.satisfied.push_back(EvaluateRule(instance, rule, config));
          const auto now = std::chrono::steady_clock::now();
          slot.nanos.push_back(
              gen_nanos +
              std::chrono::duration_cast<std::chrono::nanoseconds>(now - mark)
                  .count());
          mark = now;
        }
      } catch (const std::exception& e) {
        slot.error = std::current_exception();
        slot.error_message = e.what();
      }
    }
  };

  int workers = config.workers;
  if (workers <= 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = std::min(workers, std::max(trials, 1));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& thread : pool) thread.join();

  for (int t = 0; t < trials; ++t) {
    if (slots[t].error) {
      throw TrialError("case " + std::string(ToString(case_config.which)) +
                           ", seed " + std::to_string(culture.master_seed) +
                           ", trial " + std::to_string(t) + ": " +
                           slots[t].error_message,
                       culture.master_seed, t);
    }
  }
  return slots;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::int64_t ParseInteger(const std::string& text, const char* what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ValidationError(std::string("bad ") + what + " '" + text + "'");
  }
  return value;
}

// "94.39" -> 9439. Exactly two decimals.
std::int64_t ParseCenti(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos || text.size() - dot != 3) {
    throw ValidationError("bad probability '" + text + "'");
  }
  return ParseInteger(text.substr(0, dot), "probability") * 100 +
         ParseInteger(text.substr(dot + 1), "probability");
}

}  // namespace

std::string_view ToString(Case c) {
  return c == Case::kEqualValued ? "equal_valued" : "general_case";
}

Case ParseCase(std::string_view name) {
  if (name == "equal_valued") return Case::kEqualValued;
  if (name == "general_case") return Case::kGeneralCase;
  throw ConfigError("unknown case '" + std::string(name) + "'");
}

void ExperimentConfig::Validate() const {
  if (trial_counts.empty()) throw ConfigError("no trial counts");
  for (int count : trial_counts) {
    if (count <= 0) throw ConfigError("trial counts must be positive");
  }
  if (cases.empty()) throw ConfigError("no cases");
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const CaseConfig& c = cases[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (cases[j].which == c.which) {
        throw ConfigError("case " + std::string(ToString(c.which)) +
                          " listed twice");
      }
    }
    if (c.rules.empty()) {
      throw ConfigError("case " + std::string(ToString(c.which)) +
                        " has no rules");
    }
    c.culture.Validate();
    if (c.which == Case::kEqualValued &&
        c.culture.cost.kind != CostModel::Kind::kUnit) {
      throw ConfigError("equal_valued case requires unit costs");
    }
    for (RuleKind rule : c.rules) {
      if (c.which == Case::kGeneralCase && rule != RuleKind::kSccr) {
        throw ConfigError("general_case only runs sccr, not " +
                          std::string(ToString(rule)));
      }
      const bool needs_rankings =
          rule == RuleKind::kStv ||
          (rule_options.scoring == ScoringMode::kBorda);
      if (needs_rankings && !ProducesRankings(c.culture)) {
        throw ConfigError(std::string(ToString(rule)) +
                          " needs rankings; use prefix ballots");
      }
    }
  }
}

ExperimentConfig ExperimentConfig::StandardStudy(std::uint64_t master_seed) {
  ExperimentConfig config;
  config.master_seed = master_seed;
  config.cases.push_back(CaseConfig{
      Case::kEqualValued, CultureConfig::EqualValued(master_seed),
      {RuleKind::kSccr, RuleKind::kSmr, RuleKind::kStv}});
  config.cases.push_back(CaseConfig{Case::kGeneralCase,
                                    CultureConfig::GeneralCase(master_seed),
                                    {RuleKind::kSccr}});
  return config;
}

const ResultRow* ExperimentResult::Find(int trial_count, Case which,
                                        RuleKind rule) const {
  for (const ResultRow& row : rows) {
    if (row.trial_count == trial_count && row.which == which &&
        row.rule == rule) {
      return &row;
    }
  }
  return nullptr;
}

std::int64_t ProbabilityCenti(std::int64_t satisfied, std::int64_t trials) {
  // round(10000 * s / M), halves up.
  return (20000 * satisfied + trials) / (2 * trials);
}

std::string FormatCenti(std::int64_t centi) {
  std::string fraction = std::to_string(centi % 100);
  if (fraction.size() < 2) fraction.insert(0, "0");
  return std::to_string(centi / 100) + "." + fraction;
}

CultureConfig EffectiveCulture(const ExperimentConfig& config,
                               const CaseConfig& case_config) {
  CultureConfig culture = case_config.culture;
  culture.master_seed = config.master_seed;
  return culture;
}

TrialRecord ReplayTrial(const ExperimentConfig& config, Case which,
                        RuleKind rule, std::uint64_t trial_index) {
  config.Validate();
  for (const CaseConfig& case_config : config.cases) {
    if (case_config.which != which) continue;
    Instance instance =
        Generate(EffectiveCulture(config, case_config), trial_index);
    RuleOutcome outcome = RunRule(instance, rule, config.rule_options);
    AxiomReport report = CheckAxiom(instance, outcome.budget, config.axiom);
    return TrialRecord{std::move(instance), std::move(outcome),
                       std::move(report)};
  }
  throw ConfigError("case " + std::string(ToString(which)) +
                    " is not configured");
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  const int max_trials =
      *std::max_element(config.trial_counts.begin(), config.trial_counts.end());

  ExperimentResult result;
  // satisfied prefix counts and elapsed prefix sums per (case, rule).
  std::map<std::pair<int, int>, std::vector<std::int64_t>> satisfied_prefix;
  std::map<std::pair<int, int>, std::vector<std::int64_t>> nanos_prefix;

  for (std::size_t c = 0; c < config.cases.size(); ++c) {
    const CaseConfig& case_config = config.cases[c];
    const std::vector<TrialSlot> slots =
        RunCase(config, case_config, max_trials);
    for (std::size_t r = 0; r < case_config.rules.size(); ++r) {
      SeriesVerdicts series{case_config.which, case_config.rules[r], {}};
      std::vector<std::int64_t> satisfied(max_trials + 1, 0);
      std::vector<std::int64_t> nanos(max_trials + 1, 0);
      for (int t = 0; t < max_trials; ++t) {
        series.satisfied.push_back(slots[t].satisfied[r]);
        satisfied[t + 1] = satisfied[t] + slots[t].satisfied[r];
        nanos[t + 1] = nanos[t] + slots[t].nanos[r];
      }
      const auto key = std::make_pair(static_cast<int>(c), static_cast<int>(r));
      satisfied_prefix[key] = std::move(satisfied);
      nanos_prefix[key] = std::move(nanos);
      result.verdicts.push_back(std::move(series));
    }
  }

  for (int count : config.trial_counts) {
    for (std::size_t c = 0; c < config.cases.size(); ++c) {
      const CaseConfig& case_config = config.cases[c];
      for (std::size_t r = 0; r < case_config.rules.size(); ++r) {
        const auto key =
            std::make_pair(static_cast<int>(c), static_cast<int>(r));
        ResultRow row;
        row.trial_count = count;
        row.which = case_config.which;
        row.rule = case_config.rules[r];
        row.probability_centi =
            ProbabilityCenti(satisfied_prefix[key][count], count);
        row.elapsed_ms =
            config.record_timing ? nanos_prefix[key][count] / 1000000 : 0;
        result.rows.push_back(row);
      }
    }
  }
  return result;
}

void WriteResultsCsv(const ExperimentResult& result, std::ostream& out) {
  out << "trial_count,case,rule,probability_pct,elapsed_ms\n";
  for (const ResultRow& row : result.rows) {
    out << row.trial_count << ',' << ToString(row.which) << ','
        << ToString(row.rule) << ',' << FormatCenti(row.probability_centi)
        << ',' << row.elapsed_ms << '\n';
  }
}

ExperimentResult ParseResultsCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      line != "trial_count,case,rule,probability_pct,elapsed_ms") {
    throw ValidationError("results csv has an unexpected header");
  }
  ExperimentResult result;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const std::vector<std::string> fields = SplitCsvLine(line);
    if (fields.size() != 5) {
      throw ValidationError("results csv line " + std::to_string(line_number) +
                            " has " + std::to_string(fields.size()) +
                            " fields");
    }
    ResultRow row;
    try {
      row.trial_count =
          static_cast<int>(ParseInteger(fields[0], "trial count"));
      row.which = ParseCase(fields[1]);
      row.rule = ParseRuleKind(fields[2]);
      row.probability_centi = ParseCenti(fields[3]);
      row.elapsed_ms = ParseInteger(fields[4], "elapsed_ms");
    } catch (const Error& e) {
      throw ValidationError("results csv line " + std::to_string(line_number) +
                            ": " + e.what());
    }
    if (row.trial_count <= 0 || row.probability_centi < 0 ||
        row.probability_centi > 10000) {
      throw ValidationError("results csv line " + std::to_string(line_number) +
                            " is out of range");
    }
    result.rows.push_back(row);
  }
  return result;
}

std::vector<std::filesystem::path> EmitPlotData(
    const ExperimentResult& result, const std::filesystem::path& dir) {
  if (result.rows.empty()) throw ContractError("no results to plot");

  std::vector<Case> order;
  for (const ResultRow& row : result.rows) {
    if (std::find(order.begin(), order.end(), row.which) == order.end()) {
      order.push_back(row.which);
    }
  }

  std::vector<std::filesystem::path> written;
  for (Case which : order) {
    std::vector<ResultRow> rows;
    for (const ResultRow& row : result.rows) {
      if (row.which == which) rows.push_back(row);
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ResultRow& a, const ResultRow& b) {
                       return a.trial_count < b.trial_count;
                     });
    std::ostringstream csv;
    csv << "trial_count,rule,probability_pct\n";
    for (const ResultRow& row : rows) {
      csv << row.trial_count << ',' << ToString(row.rule) << ','
          << FormatCenti(row.probability_centi) << '\n';
    }
    const std::filesystem::path path =
        dir / (std::string(ToString(which)) + ".csv");
    WriteFileAtomically(path, csv.str());
    written.push_back(path);
  }
  return written;
}

}  // namespace pb
