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

// Domain model for approval-based participatory budgeting: projects with
// integer costs, approval ballots, optional strict rankings, a spending
// limit, and the budgets (project subsets) elected under that limit.

#ifndef PB_CORE_H_
#define PB_CORE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pb {

using ProjectId = int;
using VoterId = int;
using Money = std::int64_t;

struct Project {
  ProjectId id = 0;
  Money cost = 0;

  friend bool operator==(const Project&, const Project&) = default;
};

// Set of approved project ids, kept sorted.
class ApprovalBallot {
 public:
  ApprovalBallot() = default;
  // Throws ValidationError on duplicate or negative ids.
  explicit ApprovalBallot(std::vector<ProjectId> approved);

  const std::vector<ProjectId>& approved() const { return approved_; }
  bool approves(ProjectId p) const;
  bool empty() const { return approved_.empty(); }
  int size() const { return static_cast<int>(approved_.size()); }

  friend bool operator==(const ApprovalBallot&,
                         const ApprovalBallot&) = default;

 private:
  std::vector<ProjectId> approved_;
};

// Strict order over all projects, most preferred first.
class Ranking {
 public:
  Ranking() = default;
  // Throws ValidationError unless `order` is a permutation of 0..size-1.
  explicit Ranking(std::vector<ProjectId> order);

  const std::vector<ProjectId>& order() const { return order_; }
  // 0-based rank of `p`.
  int position(ProjectId p) const { return position_[p]; }
  int size() const { return static_cast<int>(order_.size()); }

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<ProjectId> order_;
  std::vector<int> position_;
};

// An immutable, validated participatory-budgeting instance. Projects are
// stored by id, so projects()[p].id == p.
class Instance {
 public:
  // Validates every invariant and throws ValidationError on the first
  // violation: ids must be exactly 0..m-1, costs positive (or zero when
  // `allow_zero_cost`), ballots non-empty and in range, limit positive and
  // at least the largest cost, rankings (if any) one permutation per voter.
  Instance(std::vector<Project> projects, std::vector<ApprovalBallot> ballots,
           Money limit, std::optional<std::vector<Ranking>> rankings = {},
           bool allow_zero_cost = false);

  int num_voters() const { return static_cast<int>(ballots_.size()); }
  int num_projects() const { return static_cast<int>(projects_.size()); }
  Money limit() const { return limit_; }
  bool allow_zero_cost() const { return allow_zero_cost_; }

  const std::vector<Project>& projects() const { return projects_; }
  Money cost(ProjectId p) const { return projects_[p].cost; }
  Money max_cost() const { return max_cost_; }
  bool has_equal_costs() const;

  const std::vector<ApprovalBallot>& ballots() const { return ballots_; }
  const ApprovalBallot& ballot(VoterId v) const { return ballots_[v]; }
  bool approves(VoterId v, ProjectId p) const {
    return approval_matrix_[static_cast<std::size_t>(v) * projects_.size() +
                            p] != 0;
  }

  bool has_rankings() const { return rankings_.has_value(); }
  // Requires has_rankings().
  const std::vector<Ranking>& rankings() const { return *rankings_; }
  const Ranking& ranking(VoterId v) const { return (*rankings_)[v]; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.projects_ == b.projects_ && a.ballots_ == b.ballots_ &&
           a.limit_ == b.limit_ && a.rankings_ == b.rankings_ &&
           a.allow_zero_cost_ == b.allow_zero_cost_;
  }

 private:
  std::vector<Project> projects_;
  std::vector<ApprovalBallot> ballots_;
  std::optional<std::vector<Ranking>> rankings_;
  Money limit_ = 0;
  bool allow_zero_cost_ = false;
  Money max_cost_ = 0;
  std::vector<char> approval_matrix_;
};

// True when every voter's approval set is exactly a prefix of that voter's
// ranking. False when the instance carries no rankings.
bool ApprovalsAreRankingPrefixes(const Instance& instance);

// A selected subset of projects with its cached total cost.
class Budget {
 public:
  Budget() = default;

  // Throws ValidationError on unknown or repeated ids.
  static Budget Of(const Instance& instance, std::vector<ProjectId> ids);

  const std::vector<ProjectId>& selected() const { return selected_; }
  Money total_cost() const { return total_cost_; }
  int size() const { return static_cast<int>(selected_.size()); }
  bool empty() const { return selected_.empty(); }
  bool contains(ProjectId p) const;

  // Copy of this budget with `p` added. Throws ValidationError if `p` is
  // unknown or already selected.
  Budget With(const Instance& instance, ProjectId p) const;

  friend bool operator==(const Budget&, const Budget&) = default;

 private:
  std::vector<ProjectId> selected_;
  Money total_cost_ = 0;
};

// Monroe-style partial map from voters to their representative project.
// Each project represents at most `capacity` voters.
class Assignment {
 public:
  Assignment() = default;
  Assignment(int num_voters, int num_projects, int capacity);

  // Throws ContractError if the voter is already assigned or the project is
  // at capacity.
  void Assign(VoterId v, ProjectId p);

  std::optional<ProjectId> representative(VoterId v) const {
    return rep_[v];
  }
  int capacity() const { return capacity_; }
  int load(ProjectId p) const { return load_[p]; }
  int num_voters() const { return static_cast<int>(rep_.size()); }
  int num_assigned() const;
  std::vector<VoterId> VotersOf(ProjectId p) const;

  // Every assigned project is in `budget` and no load exceeds capacity.
  bool ConsistentWith(const Budget& budget) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::optional<ProjectId>> rep_;
  std::vector<int> load_;
  int capacity_ = 0;
};

// Sum of the member costs; 0 for the empty set. Throws ValidationError on
// unknown ids.
Money TotalCost(const Instance& instance, std::span<const ProjectId> ids);

bool IsFeasible(const Instance& instance, const Budget& budget);

// No unselected project fits in the remaining slack. Throws ContractError
// when `budget` is infeasible.
bool IsExhaustive(const Instance& instance, const Budget& budget);

bool VoterSatisfied(const ApprovalBallot& ballot, const Budget& budget);

// Number of voters with at least one approved project in `budget`.
int Coverage(const Instance& instance, const Budget& budget);

inline std::int64_t CeilDiv(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

}  // namespace pb

#endif  // PB_CORE_H_
