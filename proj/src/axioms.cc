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

#include "pb/axioms.h"

#include <cstdint>
#include <string>

#include "pb/errors.h"

namespace pb {
namespace {

bool IsLarge(const Instance& instance, std::int64_t group_size) {
  return group_size > 0 &&
         group_size * instance.limit() >= instance.num_voters();
}

}  // namespace

std::string_view ToString(Axiom axiom) {
  return axiom == Axiom::kUjr ? "ujr" : "strong-bjr";
}

Axiom ParseAxiom(std::string_view name) {
  if (name == "ujr") return Axiom::kUjr;
  if (name == "strong-bjr") return Axiom::kStrongBjr;
  throw ConfigError("unknown axiom '" + std::string(name) + "'");
}

bool IsRepresented(const Instance& instance, const Budget& budget, Axiom axiom,
                   VoterId v) {
  for (ProjectId p : instance.ballot(v).approved()) {
    if (!budget.contains(p)) continue;
    if (axiom == Axiom::kUjr || instance.cost(p) > 0) return true;
  }
  return false;
}

AxiomReport CheckAxiom(const Instance& instance, const Budget& budget,
                       Axiom axiom) {
  const int n = instance.num_voters();
  std::vector<char> represented(n);
  for (VoterId v = 0; v < n; ++v) {
    represented[v] = IsRepresented(instance, budget, axiom, v);
  }

  AxiomReport report{axiom, true, std::nullopt};
  for (ProjectId p = 0; p < instance.num_projects(); ++p) {
    std::vector<VoterId> deprived;
    for (VoterId v = 0; v < n; ++v) {
      if (!represented[v] && instance.approves(v, p)) deprived.push_back(v);
    }
    if (IsLarge(instance, static_cast<std::int64_t>(deprived.size()))) {
      report.satisfied = false;
      report.witness = Witness{p, std::move(deprived)};
      return report;
    }
  }
  return report;
}

AxiomReport NaiveAxiomOracle(const Instance& instance, const Budget& budget,
                             Axiom axiom, int max_voters) {
  const int n = instance.num_voters();
  const int m = instance.num_projects();
  if (n > max_voters) {
    throw RefusalError("naive axiom oracle refuses " + std::to_string(n) +
                       " voters (cap " + std::to_string(max_voters) + ")");
  }

  AxiomReport report{axiom, true, std::nullopt};
  for (std::uint32_t group = 1; group < (1u << n); ++group) {
    std::vector<VoterId> members;
    bool any_represented = false;
    for (VoterId v = 0; v < n; ++v) {
      if (!(group & (1u << v))) continue;
      members.push_back(v);
      any_represented =
          any_represented || IsRepresented(instance, budget, axiom, v);
    }
    if (any_represented) continue;
    if (!IsLarge(instance, static_cast<std::int64_t>(members.size()))) {
      continue;
    }
    for (ProjectId p = 0; p < m; ++p) {
      bool common = true;
      for (VoterId v : members) common = common && instance.approves(v, p);
      if (common) {
        report.satisfied = false;
        report.witness = Witness{p, std::move(members)};
        return report;
      }
    }
  }
  return report;
}

bool WitnessIsValid(const Instance& instance, const Budget& budget,
                    Axiom axiom, const Witness& witness) {
  if (witness.project < 0 || witness.project >= instance.num_projects()) {
    return false;
  }
  if (!IsLarge(instance, static_cast<std::int64_t>(witness.voters.size()))) {
    return false;
  }
  for (std::size_t i = 1; i < witness.voters.size(); ++i) {
    if (witness.voters[i - 1] >= witness.voters[i]) return false;
  }
  for (VoterId v : witness.voters) {
    if (v < 0 || v >= instance.num_voters()) return false;
    if (!instance.approves(v, witness.project)) return false;
    if (IsRepresented(instance, budget, axiom, v)) return false;
  }
  return true;
}

}  // namespace pb
