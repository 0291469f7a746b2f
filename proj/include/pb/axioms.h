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

// Justified-representation checks for elected budgets.
//
// A group of voters is "deprived" when no member is represented by the
// budget. It is "large" when |group| * L >= n, compared exactly. A budget
// violates an axiom when some large deprived group shares an approved
// project. The two axioms differ only in what representation means:
//
//   U-JR:       a member approves some funded project.
//   Strong B-JR: a member approves some funded project of positive cost.

#ifndef PB_AXIOMS_H_
#define PB_AXIOMS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "pb/core.h"

namespace pb {

enum class Axiom { kUjr, kStrongBjr };

std::string_view ToString(Axiom axiom);  // "ujr" / "strong-bjr"
Axiom ParseAxiom(std::string_view name);  // throws ConfigError

struct Witness {
  ProjectId project = 0;
  std::vector<VoterId> voters;  // sorted

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AxiomReport {
  Axiom axiom = Axiom::kUjr;
  bool satisfied = true;
  std::optional<Witness> witness;  // present iff !satisfied

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

// Whether voter `v` counts as represented by `budget` under `axiom`.
bool IsRepresented(const Instance& instance, const Budget& budget, Axiom axiom,
                   VoterId v);

// Per-project scan: the deprived approvers of each project form the largest
// deprived group sharing it, so checking each project's group is exact. The
// witness is the lowest violating project with all of its deprived
// approvers.
AxiomReport CheckAxiom(const Instance& instance, const Budget& budget,
                       Axiom axiom);

inline AxiomReport CheckUjr(const Instance& instance, const Budget& budget) {
  return CheckAxiom(instance, budget, Axiom::kUjr);
}

inline AxiomReport CheckStrongBjr(const Instance& instance,
                                  const Budget& budget) {
  return CheckAxiom(instance, budget, Axiom::kStrongBjr);
}

// Literal check over every voter subset. The witness is the first violating
// subset in bitmask order, paired with its lowest common approved project.
// Throws RefusalError above `max_voters` voters.
AxiomReport NaiveAxiomOracle(const Instance& instance, const Budget& budget,
                             Axiom axiom, int max_voters = 16);

// Re-checks a witness against the definition: every member approves the
// project, the group is large, and nobody in it is represented.
bool WitnessIsValid(const Instance& instance, const Budget& budget,
                    Axiom axiom, const Witness& witness);

}  // namespace pb

#endif  // PB_AXIOMS_H_
