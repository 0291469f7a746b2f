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

#include "pb/culture.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "pb/errors.h"

namespace pb {
namespace {

template <typename T>
T UniformInt(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

}  // namespace

void CultureConfig::Validate() const {
  if (voters.lo < 1 || voters.lo > voters.hi) {
    throw ConfigError("voter range must be a positive interval");
  }
  if (projects.lo < 3 || projects.lo > projects.hi) {
    throw ConfigError("project range must be an interval starting at >= 3");
  }
  if (cost.kind == CostModel::Kind::kUniformInt &&
      (cost.min < 1 || cost.min > cost.max)) {
    throw ConfigError("cost range must be a positive interval");
  }
  if (limit == LimitModel::kUniformCommittee &&
      cost.kind != CostModel::Kind::kUnit) {
    throw ConfigError("committee-size limits require unit costs");
  }
  if (ballots.kind == BallotModel::Kind::kBernoulli &&
      !(ballots.p > 0.0 && ballots.p <= 1.0)) {
    throw ConfigError("bernoulli approval probability must be in (0, 1]");
  }
}

CultureConfig CultureConfig::EqualValued(std::uint64_t master_seed) {
  CultureConfig config;
  config.master_seed = master_seed;
  return config;
}

CultureConfig CultureConfig::GeneralCase(std::uint64_t master_seed) {
  CultureConfig config;
  config.cost = CostModel{CostModel::Kind::kUniformInt, 1, 10};
  config.limit = LimitModel::kUniformBudget;
  config.master_seed = master_seed;
  return config;
}

std::uint64_t DeriveTrialSeed(std::uint64_t master_seed,
                              std::uint64_t trial_index) {
  std::uint64_t z = master_seed ^ (trial_index * 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Instance Generate(const CultureConfig& config, std::uint64_t trial_index) {
  config.Validate();
  std::mt19937_64 rng(DeriveTrialSeed(config.master_seed, trial_index));

  const int n = UniformInt(rng, config.voters.lo, config.voters.hi);
  const int m = UniformInt(rng, config.projects.lo, config.projects.hi);

  std::vector<Project> projects(m);
  for (int p = 0; p < m; ++p) {
    projects[p].id = p;
    projects[p].cost = config.cost.kind == CostModel::Kind::kUnit
                           ? 1
                           : UniformInt(rng, config.cost.min, config.cost.max);
  }

  Money limit = 0;
  if (config.limit == LimitModel::kUniformCommittee) {
    limit = UniformInt<Money>(rng, 2, m - 1);
  } else {
    Money max_cost = 0;
    Money total = 0;
    for (const Project& project : projects) {
      max_cost = std::max(max_cost, project.cost);
      total += project.cost;
    }
    const Money upper = CeilDiv(total, 2);
    limit = upper < max_cost ? max_cost : UniformInt(rng, max_cost, upper);
  }

  std::vector<ApprovalBallot> ballots;
  ballots.reserve(n);
  std::optional<std::vector<Ranking>> rankings;
  if (config.ballots.kind == BallotModel::Kind::kPrefix) {
    rankings.emplace();
    rankings->reserve(n);
    for (int v = 0; v < n; ++v) {
      std::vector<ProjectId> order(m);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const int approved = UniformInt(rng, 1, m - 1);
      ballots.emplace_back(
          std::vector<ProjectId>(order.begin(), order.begin() + approved));
      rankings->emplace_back(std::move(order));
    }
  } else {
    std::bernoulli_distribution approve(config.ballots.p);
    for (int v = 0; v < n; ++v) {
      std::vector<ProjectId> approved;
      while (approved.empty()) {
        for (ProjectId p = 0; p < m; ++p) {
          if (approve(rng)) approved.push_back(p);
        }
      }
      ballots.emplace_back(std::move(approved));
    }
  }

  return Instance(std::move(projects), std::move(ballots), limit,
                  std::move(rankings));
}

}  // namespace pb
