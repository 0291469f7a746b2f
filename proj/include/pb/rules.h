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

// Sequential budgeting rules: greedy Chamberlin-Courant, greedy Monroe and
// the single transferable vote, plus exhaustive optimal oracles used to
// check the greedy rules on small instances.
//
// Tie-breaking is fixed: whenever a rule picks a project to fund (an argmax)
// it prefers the lowest project id; whenever STV eliminates a candidate (an
// argmin) it removes the highest project id. Voter order never matters.

#ifndef PB_RULES_H_
#define PB_RULES_H_

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pb/core.h"

namespace pb {

using Rational = boost::multiprecision::mpq_rational;

enum class ScoringMode {
  // 1 if the voter approves the project, else 0.
  kApproval,
  // m - position of the project in the voter's ranking (0-based), so the
  // top choice scores m. Requires rankings.
  kBorda,
};

enum class QuotaKind {
  kHare,   // n / k
  kDroop,  // floor(n / (k + 1)) + 1
};

struct TraceStep {
  int iteration = 0;  // 0-based
  ProjectId project = 0;
  Rational score;
  // SCCR: voters newly satisfied and removed. Monroe: voters assigned to
  // the project. STV: voters whose current first choice was the project.
  std::vector<VoterId> voters;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// One step per funded project, in selection order.
struct RuleTrace {
  std::vector<TraceStep> steps;

  friend bool operator==(const RuleTrace&, const RuleTrace&) = default;
};

struct CcResult {
  Budget budget;
  RuleTrace trace;
};

struct MonroeResult {
  Budget budget;
  Assignment assignment;
  RuleTrace trace;
};

struct StvResult {
  Budget budget;
  RuleTrace trace;
  std::vector<ProjectId> eliminated;  // in elimination order
};

struct CcOptimum {
  Budget budget;
  int coverage = 0;
};

struct MonroeOptimum {
  Budget budget;
  Assignment assignment;
  std::int64_t score = 0;
};

std::string_view ToString(ScoringMode mode);
std::string_view ToString(QuotaKind kind);
// Throw ConfigError on unknown names.
ScoringMode ParseScoringMode(std::string_view name);
QuotaKind ParseQuotaKind(std::string_view name);

// Score of project `p` for voter `v` under `mode`.
std::int64_t VoterScore(const Instance& instance, ScoringMode mode, VoterId v,
                        ProjectId p);

// Number of projects an equal-cost instance can fund: min(m, L / cost), or
// m when every project is free. Throws UnsupportedError for unequal costs.
int CommitteeSize(const Instance& instance);

Rational Quota(QuotaKind kind, int num_voters, int committee_size);

// Greedy coverage. Each round funds, among unselected projects that fit the
// remaining money, the one with the highest score summed over voters not yet
// satisfied, then drops the voters who approve it. Stops when nothing fits,
// so the result is always feasible and exhaustive.
//
// Throws ConfigError for Borda scoring without rankings.
CcResult SeqChamberlinCourant(const Instance& instance,
                              ScoringMode mode = ScoringMode::kApproval);

// Greedy Monroe for equal-cost instances with k = CommitteeSize(instance)
// and per-project capacity ceil(n / k). For k <= 2 the exact optimum from
// BruteForceMonroeOptimal is returned instead. Otherwise each round scores
// every unselected project by its ceil(n / k) best unassigned voters
// (highest score first, then lowest voter id), funds the best project and
// assigns exactly those voters to it.
//
// Throws UnsupportedError for unequal costs and ConfigError for Borda
// scoring without rankings.
MonroeResult SeqMonroe(const Instance& instance,
                       ScoringMode mode = ScoringMode::kApproval);

// Single transferable vote electing `k` projects with quota `quota`, in
// exact rational arithmetic. Voters start with weight 1. Each round, if the
// elected plus remaining candidates number exactly k, all remaining are
// elected. Otherwise the candidate with the largest first-choice support T
// is elected if T >= quota, and its supporters' weights are scaled by
// (T - quota) / T; if no candidate reaches the quota the one with the
// smallest support is eliminated. Elected and eliminated candidates are
// removed from every ranking.
//
// Throws ConfigError without rankings, ValidationError when k > m or
// k < 1, ContractError when quota <= 0 or when k projects of the largest
// cost would not fit the limit.
StvResult Stv(const Instance& instance, int k, const Rational& quota);

// Feasible subset of maximum coverage, ties to the lexicographically
// smallest id list. Throws RefusalError above `max_projects` projects.
CcOptimum BruteForceCcOptimal(const Instance& instance, int max_projects = 16);

// Best size-k budget (k in {1, 2}) under an optimal capacity-respecting
// assignment with capacity ceil(n / k). Ties go to the lexicographically
// smallest budget. Throws RefusalError for k > 2, UnsupportedError for
// unequal costs, ContractError if k projects do not fit.
MonroeOptimum BruteForceMonroeOptimal(
    const Instance& instance, int k,
    ScoringMode mode = ScoringMode::kApproval);

enum class RuleKind { kSccr, kSmr, kStv };

std::string_view ToString(RuleKind rule);  // "sccr" / "smr" / "stv"
RuleKind ParseRuleKind(std::string_view name);  // throws ConfigError

// Uniform view over the three rules, as used by the CLI and the experiment
// harness.
struct RuleOutcome {
  Budget budget;
  RuleTrace trace;
  std::optional<Assignment> assignment;  // Monroe only
};

struct RuleOptions {
  ScoringMode scoring = ScoringMode::kApproval;  // SCCR and Monroe
  QuotaKind quota = QuotaKind::kHare;            // STV
};

// STV runs with k = CommitteeSize(instance) and the configured quota.
RuleOutcome RunRule(const Instance& instance, RuleKind rule,
                    const RuleOptions& options = {});

}  // namespace pb

#endif  // PB_RULES_H_
