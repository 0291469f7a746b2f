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

// Monte Carlo experiment runner: generate instances from a seeded culture,
// elect budgets with each configured rule, check an axiom on every budget
// and report how often it holds.
//
// Trial t of a case is the same instance for every trial count, so a row
// for M trials extends every row for fewer trials. Output is independent of
// worker count: each trial is a pure function of (seed, t) and counts are
// summed in trial order.

#ifndef PB_HARNESS_H_
#define PB_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pb/axioms.h"
#include "pb/culture.h"
#include "pb/errors.h"
#include "pb/rules.h"

namespace pb {

enum class Case { kEqualValued, kGeneralCase };

std::string_view ToString(Case c);  // "equal_valued" / "general_case"
Case ParseCase(std::string_view name);  // throws ConfigError

struct CaseConfig {
  Case which = Case::kEqualValued;
  CultureConfig culture;
  std::vector<RuleKind> rules;
};

struct ExperimentConfig {
  std::vector<int> trial_counts{100, 300, 500, 1000, 3000, 5000};
  std::vector<CaseConfig> cases;
  Axiom axiom = Axiom::kUjr;
  RuleOptions rule_options;
  // Overrides every case's culture seed.
  std::uint64_t master_seed = 0;
  // 0 picks std::thread::hardware_concurrency().
  int workers = 0;
  // When false the elapsed_ms column is written as 0, making the results
  // file a pure function of the config.
  bool record_timing = true;

  // Throws ConfigError: empty or non-positive trial counts, no or repeated
  // cases, a general-cost case with a rule other than SCCR, STV or Borda
  // scoring without ranking-producing ballots, invalid cultures.
  void Validate() const;

  // Both cases with default cultures and the six trial counts.
  static ExperimentConfig StandardStudy(std::uint64_t master_seed = 0);
};

struct ResultRow {
  int trial_count = 0;
  Case which = Case::kEqualValued;
  RuleKind rule = RuleKind::kSccr;
  // Satisfaction probability in hundredths of a percent, rounded half up
  // from the exact ratio 100 * satisfied / trial_count.
  std::int64_t probability_centi = 0;
  std::int64_t elapsed_ms = 0;

  double probability_pct() const { return probability_centi / 100.0; }

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

// Per-trial verdicts of one (case, rule) series over the largest count.
struct SeriesVerdicts {
  Case which = Case::kEqualValued;
  RuleKind rule = RuleKind::kSccr;
  std::vector<char> satisfied;
};

struct ExperimentResult {
  // Ordered by trial count, then case, then rule, in config order.
  std::vector<ResultRow> rows;
  // Empty for results parsed back from CSV.
  std::vector<SeriesVerdicts> verdicts;

  const ResultRow* Find(int trial_count, Case which, RuleKind rule) const;
};

// Raised when a trial fails; carries what is needed to replay it.
class TrialError : public Error {
 public:
  TrialError(const std::string& message, std::uint64_t seed,
             std::uint64_t trial_index)
      : Error("trial", message), seed_(seed), trial_index_(trial_index) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t trial_index() const { return trial_index_; }

 private:
  std::uint64_t seed_;
  std::uint64_t trial_index_;
};

std::int64_t ProbabilityCenti(std::int64_t satisfied, std::int64_t trials);
std::string FormatCenti(std::int64_t centi);  // 9439 -> "94.39"

// Culture of `case_config` with the experiment's seed applied.
CultureConfig EffectiveCulture(const ExperimentConfig& config,
                               const CaseConfig& case_config);

struct TrialRecord {
  Instance instance;
  RuleOutcome outcome;
  AxiomReport report;
};

// Re-executes one trial exactly as the experiment runs it.
TrialRecord ReplayTrial(const ExperimentConfig& config, Case which,
                        RuleKind rule, std::uint64_t trial_index);

ExperimentResult RunExperiment(const ExperimentConfig& config);

// Results CSV: header trial_count,case,rule,probability_pct,elapsed_ms.
void WriteResultsCsv(const ExperimentResult& result, std::ostream& out);
// Throws ValidationError on malformed input.
ExperimentResult ParseResultsCsv(std::istream& in);

// One CSV per case present in `result`, named <case>.csv, with header
// trial_count,rule,probability_pct, ordered by trial count. Returns the
// written paths. Throws ContractError on an empty result and IoError when
// a file cannot be written.
std::vector<std::filesystem::path> EmitPlotData(
    const ExperimentResult& result, const std::filesystem::path& dir);

}  // namespace pb

#endif  // PB_HARNESS_H_
