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

#include "pb/core.h"

#include <algorithm>
#include <string>

#include "pb/errors.h"

namespace pb {
namespace {

void CheckIds(const Instance& instance, std::span<const ProjectId> ids) {
  for (ProjectId p : ids) {
    if (p < 0 || p >= instance.num_projects()) {
      throw ValidationError("unknown project id " + std::to_string(p));
    }
  }
}

}  // namespace

ApprovalBallot::ApprovalBallot(std::vector<ProjectId> approved)
    : approved_(std::move(approved)) {
  std::sort(approved_.begin(), approved_.end());
  if (std::adjacent_find(approved_.begin(), approved_.end()) !=
      approved_.end()) {
    throw ValidationError("ballot lists a project twice");
  }
  if (!approved_.empty() && approved_.front() < 0) {
    throw ValidationError("ballot has a negative project id");
  }
}

bool ApprovalBallot::approves(ProjectId p) const {
  return std::binary_search(approved_.begin(), approved_.end(), p);
}

Ranking::Ranking(std::vector<ProjectId> order) : order_(std::move(order)) {
  position_.assign(order_.size(), -1);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const ProjectId p = order_[i];
    if (p < 0 || p >= static_cast<ProjectId>(order_.size()) ||
        position_[p] != -1) {
      throw ValidationError("ranking is not a permutation of 0.." +
                            std::to_string(order_.size() - 1));
    }
    position_[p] = static_cast<int>(i);
  }
}

Instance::Instance(std::vector<Project> projects,
                   std::vector<ApprovalBallot> ballots, Money limit,
                   std::optional<std::vector<Ranking>> rankings,
                   bool allow_zero_cost)
    : projects_(std::move(projects)),
      ballots_(std::move(ballots)),
      rankings_(std::move(rankings)),
      limit_(limit),
      allow_zero_cost_(allow_zero_cost) {
  const int m = num_projects();
  const int n = num_voters();
  if (m < 1) throw ValidationError("instance has no projects");
  if (n < 1) throw ValidationError("instance has no voters");

  std::sort(projects_.begin(), projects_.end(),
            [](const Project& a, const Project& b) { return a.id < b.id; });
  for (int i = 0; i < m; ++i) {
    const Project& project = projects_[i];
    if (project.id != i) {
      throw ValidationError("project ids must be exactly 0.." +
                            std::to_string(m - 1));
    }
    if (project.cost < 0 || (project.cost == 0 && !allow_zero_cost_)) {
      throw ValidationError("project " + std::to_string(i) +
                            " has non-positive cost " +
                            std::to_string(project.cost));
    }
    max_cost_ = std::max(max_cost_, project.cost);
  }
  if (limit_ <= 0) throw ValidationError("limit must be positive");
  if (limit_ < max_cost_) {
    throw ValidationError("limit " + std::to_string(limit_) +
                          " is below the largest project cost " +
                          std::to_string(max_cost_));
  }

  approval_matrix_.assign(static_cast<std::size_t>(n) * m, 0);
  for (int v = 0; v < n; ++v) {
    const ApprovalBallot& ballot = ballots_[v];
    if (ballot.empty()) {
      throw ValidationError("voter " + std::to_string(v) +
                            " approves no project");
    }
    for (ProjectId p : ballot.approved()) {
      if (p >= m) {
        throw ValidationError("voter " + std::to_string(v) +
                              " approves unknown project " +
                              std::to_string(p));
      }
      approval_matrix_[static_cast<std::size_t>(v) * m + p] = 1;
    }
  }

  if (rankings_) {
    if (static_cast<int>(rankings_->size()) != n) {
      throw ValidationError("rankings must cover every voter");
    }
    for (int v = 0; v < n; ++v) {
      if ((*rankings_)[v].size() != m) {
        throw ValidationError("ranking of voter " + std::to_string(v) +
                              " does not order all projects");
      }
    }
  }
}

bool Instance::has_equal_costs() const {
  return std::all_of(projects_.begin(), projects_.end(),
                     [&](const Project& p) { return p.cost == max_cost_; });
}

bool ApprovalsAreRankingPrefixes(const Instance& instance) {
  if (!instance.has_rankings()) return false;
  for (VoterId v = 0; v < instance.num_voters(); ++v) {
    const ApprovalBallot& ballot = instance.ballot(v);
    const auto& order = instance.ranking(v).order();
    for (int i = 0; i < ballot.size(); ++i) {
      if (!ballot.approves(order[i])) return false;
    }
  }
  return true;
}

Budget Budget::Of(const Instance& instance, std::vector<ProjectId> ids) {
  CheckIds(instance, ids);
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw ValidationError("budget selects a project twice");
  }
  Budget budget;
  budget.total_cost_ = TotalCost(instance, ids);
  budget.selected_ = std::move(ids);
  return budget;
}

bool Budget::contains(ProjectId p) const {
  return std::binary_search(selected_.begin(), selected_.end(), p);
}

Budget Budget::With(const Instance& instance, ProjectId p) const {
  std::vector<ProjectId> ids = selected_;
  ids.push_back(p);
  return Of(instance, std::move(ids));
}

Assignment::Assignment(int num_voters, int num_projects, int capacity)
    : rep_(num_voters), load_(num_projects, 0), capacity_(capacity) {
  if (capacity <= 0) throw ContractError("capacity must be positive");
}

void Assignment::Assign(VoterId v, ProjectId p) {
  if (rep_[v].has_value()) {
    throw ContractError("voter " + std::to_string(v) + " already assigned");
  }
  if (load_[p] >= capacity_) {
    throw ContractError("project " + std::to_string(p) + " is at capacity");
  }
  rep_[v] = p;
  ++load_[p];
}

int Assignment::num_assigned() const {
  return static_cast<int>(
      std::count_if(rep_.begin(), rep_.end(),
                    [](const auto& r) { return r.has_value(); }));
}

std::vector<VoterId> Assignment::VotersOf(ProjectId p) const {
  std::vector<VoterId> voters;
  for (VoterId v = 0; v < num_voters(); ++v) {
    if (rep_[v] == p) voters.push_back(v);
  }
  return voters;
}

bool Assignment::ConsistentWith(const Budget& budget) const {
  for (const auto& r : rep_) {
    if (r.has_value() && !budget.contains(*r)) return false;
  }
  return std::all_of(load_.begin(), load_.end(),
                     [&](int load) { return load <= capacity_; });
}

Money TotalCost(const Instance& instance, std::span<const ProjectId> ids) {
  CheckIds(instance, ids);
  Money total = 0;
  for (ProjectId p : ids) total += instance.cost(p);
  return total;
}

bool IsFeasible(const Instance& instance, const Budget& budget) {
  CheckIds(instance, budget.selected());
  return budget.total_cost() <= instance.limit();
}

bool IsExhaustive(const Instance& instance, const Budget& budget) {
  if (!IsFeasible(instance, budget)) {
    throw ContractError("exhaustiveness is only defined for feasible budgets");
  }
  const Money slack = instance.limit() - budget.total_cost();
  for (const Project& project : instance.projects()) {
    if (!budget.contains(project.id) && project.cost <= slack) return false;
  }
  return true;
}

bool VoterSatisfied(const ApprovalBallot& ballot, const Budget& budget) {
  return std::any_of(ballot.approved().begin(), ballot.approved().end(),
                     [&](ProjectId p) { return budget.contains(p); });
}

int Coverage(const Instance& instance, const Budget& budget) {
  CheckIds(instance, budget.selected());
  int covered = 0;
  for (const ApprovalBallot& ballot : instance.ballots()) {
    if (VoterSatisfied(ballot, budget)) ++covered;
  }
  return covered;
}

}  // namespace pb
