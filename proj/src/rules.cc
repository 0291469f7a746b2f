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

#include "pb/rules.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "pb/errors.h"

namespace pb {
namespace {

void RequireRankingsFor(const Instance& instance, ScoringMode mode) {
  if (mode == ScoringMode::kBorda && !instance.has_rankings()) {
    throw ConfigError("borda scoring requires rankings");
  }
}

void RequireEqualCosts(const Instance& instance, std::string_view rule) {
  if (!instance.has_equal_costs()) {
    throw UnsupportedError(std::string(rule) +
                           " is only defined for equal project costs");
  }
}

// Voters sorted by descending score for `p`, lowest id first among equals.
std::vector<VoterId> SortedByScore(const Instance& instance, ScoringMode mode,
                                   ProjectId p,
                                   std::vector<VoterId> voters) {
  std::stable_sort(voters.begin(), voters.end(), [&](VoterId a, VoterId b) {
    return VoterScore(instance, mode, a, p) > VoterScore(instance, mode, b, p);
  });
  return voters;
}

// Optimal split of all voters between projects a and b, each taking at most
// `capacity`. Sorting by score(a) - score(b) makes the best split for any
// fixed number s of voters going to a the top-s prefix, so scanning s is
// exact.
MonroeOptimum BestPairAssignment(const Instance& instance, ScoringMode mode,
                                 ProjectId a, ProjectId b, int capacity) {
  const int n = instance.num_voters();
  std::vector<VoterId> voters(n);
  std::iota(voters.begin(), voters.end(), 0);
  auto diff = [&](VoterId v) {
    return VoterScore(instance, mode, v, a) - VoterScore(instance, mode, v, b);
  };
  std::stable_sort(voters.begin(), voters.end(),
                   [&](VoterId x, VoterId y) { return diff(x) > diff(y); });

  std::int64_t b_total = 0;
  for (VoterId v : voters) b_total += VoterScore(instance, mode, v, b);

  // prefix_a[s] = score of the first s voters for a,
  // prefix_b[s] = score of the first s voters for b.
  std::vector<std::int64_t> prefix_a(n + 1, 0), prefix_b(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    prefix_a[i + 1] = prefix_a[i] + VoterScore(instance, mode, voters[i], a);
    prefix_b[i + 1] = prefix_b[i] + VoterScore(instance, mode, voters[i], b);
  }

  const int lo = std::max(0, n - capacity);
  const int hi = std::min(capacity, n);
  int best_split = lo;
  std::int64_t best = -1;
  for (int s = lo; s <= hi; ++s) {
    const std::int64_t value = prefix_a[s] + (b_total - prefix_b[s]);
    if (value > best) {
      best = value;
      best_split = s;
    }
  }

  MonroeOptimum result;
  result.budget = Budget::Of(instance, {a, b});
  result.assignment =
      Assignment(n, instance.num_projects(), capacity);
  for (int i = 0; i < n; ++i) {
    result.assignment.Assign(voters[i], i < best_split ? a : b);
  }
  result.score = best;
  return result;
}

}  // namespace

std::string_view ToString(ScoringMode mode) {
  return mode == ScoringMode::kApproval ? "approval" : "borda";
}

std::string_view ToString(QuotaKind kind) {
  return kind == QuotaKind::kHare ? "hare" : "droop";
}

ScoringMode ParseScoringMode(std::string_view name) {
  if (name == "approval") return ScoringMode::kApproval;
  if (name == "borda") return ScoringMode::kBorda;
  throw ConfigError("unknown scoring mode '" + std::string(name) + "'");
}

QuotaKind ParseQuotaKind(std::string_view name) {
  if (name == "hare") return QuotaKind::kHare;
  if (name == "droop") return QuotaKind::kDroop;
  throw ConfigError("unknown quota '" + std::string(name) + "'");
}

std::int64_t VoterScore(const Instance& instance, ScoringMode mode, VoterId v,
                        ProjectId p) {
  if (mode == ScoringMode::kApproval) return instance.approves(v, p) ? 1 : 0;
  return instance.num_projects() - instance.ranking(v).position(p);
}

int CommitteeSize(const Instance& instance) {
  RequireEqualCosts(instance, "committee size");
  const Money cost = instance.max_cost();
  if (cost == 0) return instance.num_projects();
  return static_cast<int>(
      std::min<Money>(instance.num_projects(), instance.limit() / cost));
}

Rational Quota(QuotaKind kind, int num_voters, int committee_size) {
  if (committee_size < 1) throw ContractError("committee size must be >= 1");
  if (kind == QuotaKind::kHare) return Rational(num_voters, committee_size);
  return Rational(num_voters / (committee_size + 1) + 1);
}

CcResult SeqChamberlinCourant(const Instance& instance, ScoringMode mode) {
  RequireRankingsFor(instance, mode);
  const int n = instance.num_voters();
  const int m = instance.num_projects();

  CcResult result;
  std::vector<char> satisfied(n, 0);
  std::vector<char> selected(m, 0);
  std::vector<ProjectId> chosen;
  Money remaining = instance.limit();

  for (int iteration = 0;; ++iteration) {
    ProjectId best = -1;
    std::int64_t best_score = -1;
    for (ProjectId p = 0; p < m; ++p) {
      if (selected[p] || instance.cost(p) > remaining) continue;
      std::int64_t score = 0;
      for (VoterId v = 0; v < n; ++v) {
        if (!satisfied[v]) score += VoterScore(instance, mode, v, p);
      }
      if (score > best_score) {
        best = p;
        best_score = score;
      }
    }
    if (best < 0) break;

    TraceStep step{iteration, best, Rational(best_score), {}};
    for (VoterId v = 0; v < n; ++v) {
      if (!satisfied[v] && instance.approves(v, best)) {
        satisfied[v] = 1;
        step.voters.push_back(v);
      }
    }
    selected[best] = 1;
    chosen.push_back(best);
    remaining -= instance.cost(best);
    result.trace.steps.push_back(std::move(step));
  }

  result.budget = Budget::Of(instance, std::move(chosen));
  return result;
}

MonroeResult SeqMonroe(const Instance& instance, ScoringMode mode) {
  RequireEqualCosts(instance, "sequential monroe");
  RequireRankingsFor(instance, mode);
  const int k = CommitteeSize(instance);
  const int n = instance.num_voters();
  const int m = instance.num_projects();

  MonroeResult result;
  if (k <= 2) {
    MonroeOptimum optimum = BruteForceMonroeOptimal(instance, k, mode);
    for (int i = 0; i < optimum.budget.size(); ++i) {
      const ProjectId p = optimum.budget.selected()[i];
      TraceStep step{i, p, Rational(0), optimum.assignment.VotersOf(p)};
      std::int64_t score = 0;
      for (VoterId v : step.voters) score += VoterScore(instance, mode, v, p);
      step.score = score;
      result.trace.steps.push_back(std::move(step));
    }
    result.budget = std::move(optimum.budget);
    result.assignment = std::move(optimum.assignment);
    return result;
  }

  const int capacity = static_cast<int>(CeilDiv(n, k));
  result.assignment = Assignment(n, m, capacity);
  std::vector<char> selected(m, 0);
  std::vector<ProjectId> chosen;

  for (int iteration = 0; iteration < k; ++iteration) {
    std::vector<VoterId> unassigned;
    for (VoterId v = 0; v < n; ++v) {
      if (!result.assignment.representative(v)) unassigned.push_back(v);
    }

    ProjectId best = -1;
    std::int64_t best_score = -1;
    std::vector<VoterId> best_voters;
    for (ProjectId p = 0; p < m; ++p) {
      if (selected[p]) continue;
      std::vector<VoterId> ranked =
          SortedByScore(instance, mode, p, unassigned);
      if (static_cast<int>(ranked.size()) > capacity) ranked.resize(capacity);
      std::int64_t score = 0;
      for (VoterId v : ranked) score += VoterScore(instance, mode, v, p);
      if (score > best_score) {
        best = p;
        best_score = score;
        best_voters = std::move(ranked);
      }
    }

    for (VoterId v : best_voters) result.assignment.Assign(v, best);
    selected[best] = 1;
    chosen.push_back(best);
    result.trace.steps.push_back(
        TraceStep{iteration, best, Rational(best_score), best_voters});
  }

  result.budget = Budget::Of(instance, std::move(chosen));
  return result;
}

StvResult Stv(const Instance& instance, int k, const Rational& quota) {
  if (!instance.has_rankings()) throw ConfigError("stv requires rankings");
  const int n = instance.num_voters();
  const int m = instance.num_projects();
  if (k < 1 || k > m) {
    throw ValidationError("stv committee size " + std::to_string(k) +
                          " outside 1.." + std::to_string(m));
  }
  if (quota <= 0) throw ContractError("stv quota must be positive");
  if (instance.max_cost() * k > instance.limit()) {
    throw ContractError("stv committee of " + std::to_string(k) +
                        " projects may exceed the limit");
  }

  StvResult result;
  std::vector<Rational> weight(n, Rational(1));
  std::vector<char> alive(m, 1);
  int remaining = m;
  std::vector<ProjectId> elected;

  auto first_choice = [&](VoterId v) {
    for (ProjectId p : instance.ranking(v).order()) {
      if (alive[p]) return p;
    }
    return -1;
  };

  int iteration = 0;
  while (static_cast<int>(elected.size()) < k) {
    std::vector<Rational> support(m, Rational(0));
    std::vector<std::vector<VoterId>> supporters(m);
    for (VoterId v = 0; v < n; ++v) {
      const ProjectId top = first_choice(v);
      support[top] += weight[v];
      supporters[top].push_back(v);
    }

    if (static_cast<int>(elected.size()) + remaining == k) {
      for (ProjectId p = 0; p < m; ++p) {
        if (!alive[p]) continue;
        elected.push_back(p);
        result.trace.steps.push_back(
            TraceStep{iteration++, p, support[p], supporters[p]});
      }
      break;
    }

    ProjectId strongest = -1;
    ProjectId weakest = -1;
    for (ProjectId p = 0; p < m; ++p) {
      if (!alive[p]) continue;
      if (strongest < 0 || support[p] > support[strongest]) strongest = p;
      if (weakest < 0 || support[p] <= support[weakest]) weakest = p;
    }

    if (support[strongest] >= quota) {
      const Rational total = support[strongest];
      const Rational factor = (total - quota) / total;
      for (VoterId v : supporters[strongest]) weight[v] *= factor;
      alive[strongest] = 0;
      --remaining;
      elected.push_back(strongest);
      result.trace.steps.push_back(TraceStep{
          iteration++, strongest, total, std::move(supporters[strongest])});
    } else {
      alive[weakest] = 0;
      --remaining;
      result.eliminated.push_back(weakest);
    }
  }

  result.budget = Budget::Of(instance, std::move(elected));
  return result;
}

CcOptimum BruteForceCcOptimal(const Instance& instance, int max_projects) {
  const int m = instance.num_projects();
  if (m > max_projects) {
    throw RefusalError("brute-force coverage refuses " + std::to_string(m) +
                       " projects (cap " + std::to_string(max_projects) + ")");
  }
  const int n = instance.num_voters();
  std::vector<std::uint32_t> approval_mask(n, 0);
  for (VoterId v = 0; v < n; ++v) {
    for (ProjectId p : instance.ballot(v).approved()) {
      approval_mask[v] |= 1u << p;
    }
  }

  std::vector<ProjectId> best_ids;
  int best_coverage = -1;
  for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
    Money cost = 0;
    std::vector<ProjectId> ids;
    for (ProjectId p = 0; p < m; ++p) {
      if (subset & (1u << p)) {
        cost += instance.cost(p);
        ids.push_back(p);
      }
    }
    if (cost > instance.limit()) continue;
    int covered = 0;
    for (VoterId v = 0; v < n; ++v) {
      if (approval_mask[v] & subset) ++covered;
    }
    if (covered > best_coverage ||
        (covered == best_coverage && ids < best_ids)) {
      best_coverage = covered;
      best_ids = std::move(ids);
    }
  }
  return CcOptimum{Budget::Of(instance, std::move(best_ids)), best_coverage};
}

MonroeOptimum BruteForceMonroeOptimal(const Instance& instance, int k,
                                      ScoringMode mode) {
  if (k > 2) {
    throw RefusalError("exact monroe is limited to k <= 2, got " +
                       std::to_string(k));
  }
  RequireEqualCosts(instance, "exact monroe");
  RequireRankingsFor(instance, mode);
  const int n = instance.num_voters();
  const int m = instance.num_projects();
  if (k < 1 || k > m || instance.max_cost() * k > instance.limit()) {
    throw ContractError(std::to_string(k) + " projects do not fit");
  }

  const int capacity = static_cast<int>(CeilDiv(n, k));
  MonroeOptimum best;
  best.score = -1;
  if (k == 1) {
    for (ProjectId p = 0; p < m; ++p) {
      std::int64_t score = 0;
      for (VoterId v = 0; v < n; ++v) score += VoterScore(instance, mode, v, p);
      if (score > best.score) {
        best.score = score;
        best.budget = Budget::Of(instance, {p});
        best.assignment = Assignment(n, m, capacity);
        for (VoterId v = 0; v < n; ++v) best.assignment.Assign(v, p);
      }
    }
    return best;
  }
  for (ProjectId a = 0; a < m; ++a) {
    for (ProjectId b = a + 1; b < m; ++b) {
      MonroeOptimum candidate =
          BestPairAssignment(instance, mode, a, b, capacity);
      if (candidate.score > best.score) best = std::move(candidate);
    }
  }
  return best;
}

std::string_view ToString(RuleKind rule) {
  switch (rule) {
    case RuleKind::kSccr:
      return "sccr";
    case RuleKind::kSmr:
      return "smr";
    case RuleKind::kStv:
      return "stv";
  }
  return "";
}

RuleKind ParseRuleKind(std::string_view name) {
  if (name == "sccr") return RuleKind::kSccr;
  if (name == "smr") return RuleKind::kSmr;
  if (name == "stv") return RuleKind::kStv;
  throw ConfigError("unknown rule '" + std::string(name) + "'");
}

RuleOutcome RunRule(const Instance& instance, RuleKind rule,
                    const RuleOptions& options) {
  switch (rule) {
    case RuleKind::kSccr: {
      CcResult cc = SeqChamberlinCourant(instance, options.scoring);
      return {std::move(cc.budget), std::move(cc.trace), std::nullopt};
    }
    case RuleKind::kSmr: {
      MonroeResult monroe = SeqMonroe(instance, options.scoring);
      return {std::move(monroe.budget), std::move(monroe.trace),
              std::move(monroe.assignment)};
    }
    case RuleKind::kStv: {
      const int k = CommitteeSize(instance);
      StvResult stv =
          Stv(instance, k, Quota(options.quota, instance.num_voters(), k));
      return {std::move(stv.budget), std::move(stv.trace), std::nullopt};
    }
  }
  throw ConfigError("unknown rule");
}

}  // namespace pb
