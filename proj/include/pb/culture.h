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

// Seeded impartial-culture generator for random budgeting instances.
//
// Every instance is a pure function of (config, trial index): the trial's
// generator is seeded with DeriveTrialSeed(master_seed, trial_index), so the
// instance stream does not depend on execution order or thread count.

#ifndef PB_CULTURE_H_
#define PB_CULTURE_H_

#include <cstdint>

#include "pb/core.h"

namespace pb {

struct IntRange {
  int lo = 1;
  int hi = 1;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct CostModel {
  enum class Kind { kUnit, kUniformInt };
  Kind kind = Kind::kUnit;
  // Inclusive bounds, used by kUniformInt only.
  Money min = 1;
  Money max = 1;

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

enum class LimitModel {
  // L uniform in [2, m - 1]; unit costs only, so L is a committee size.
  kUniformCommittee,
  // L uniform in [max cost, ceil(total cost / 2)]; L = max cost when that
  // interval is empty.
  kUniformBudget,
};

struct BallotModel {
  enum class Kind {
    // Uniform random ranking per voter; the voter approves its top t
    // projects with t uniform in [1, m - 1]. Rankings are attached.
    kPrefix,
    // Each project approved independently with probability p; empty ballots
    // are redrawn. No rankings.
    kBernoulli,
  };
  Kind kind = Kind::kPrefix;
  double p = 0.5;

  friend bool operator==(const BallotModel&, const BallotModel&) = default;
};

struct CultureConfig {
  IntRange voters{10, 50};
  IntRange projects{5, 20};
  CostModel cost;
  LimitModel limit = LimitModel::kUniformCommittee;
  BallotModel ballots;
  std::uint64_t master_seed = 0;

  // Throws ConfigError on empty or non-positive ranges, fewer than 3
  // projects, unit-committee limits with non-unit costs, cost bounds below
  // 1, or p outside (0, 1].
  void Validate() const;

  // Unit costs, committee-size limits, prefix ballots.
  static CultureConfig EqualValued(std::uint64_t master_seed = 0);
  // Costs uniform in [1, 10], money limits, prefix ballots.
  static CultureConfig GeneralCase(std::uint64_t master_seed = 0);

  friend bool operator==(const CultureConfig&, const CultureConfig&) = default;
};

// splitmix64 finalizer over master_seed ^ (trial_index * 0x9E3779B97F4A7C15).
std::uint64_t DeriveTrialSeed(std::uint64_t master_seed,
                              std::uint64_t trial_index);

// Draws n, m, costs, L and ballots, in that order, from the trial's seed.
// The result always passes Instance validation. Throws ConfigError for an
// invalid config.
Instance Generate(const CultureConfig& config, std::uint64_t trial_index);

}  // namespace pb

#endif  // PB_CULTURE_H_
