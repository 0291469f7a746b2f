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

// JSON forms of instances, budgets, traces, reports and configs, plus the
// file helpers used by the CLI.
//
//   Instance:     {"limit": int, "projects": [{"id": int, "cost": int}...],
//                  "ballots": [[int...]...], "rankings": [[int...]...]?,
//                  "allow_zero_cost": bool?}
//   Budget:       {"selected": [int...], "total_cost": int}
//   AxiomReport:  {"axiom": "ujr"|"strong-bjr", "satisfied": bool,
//                  "witness": {"project": int, "voters": [int...]} | null}

#ifndef PB_IO_H_
#define PB_IO_H_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "pb/axioms.h"
#include "pb/core.h"
#include "pb/culture.h"
#include "pb/harness.h"
#include "pb/rules.h"

namespace pb {

using Json = nlohmann::ordered_json;

// All *FromJson functions throw ValidationError for structurally malformed
// input; semantic config problems surface as ConfigError.
Json ToJson(const Instance& instance);
Instance InstanceFromJson(const Json& json);

Json ToJson(const Budget& budget);
// Rejects a total_cost that disagrees with the instance's costs.
Budget BudgetFromJson(const Instance& instance, const Json& json);

Json ToJson(const AxiomReport& report);
Json ToJson(const RuleTrace& trace);
Json ToJson(const Assignment& assignment);
// Integral values become JSON numbers, others the string "p/q".
Json ToJson(const Rational& value);

Json ToJson(const CultureConfig& config);
// Missing keys keep the values in `defaults`.
CultureConfig CultureConfigFromJson(const Json& json,
                                    const CultureConfig& defaults = {});

Json ToJson(const ExperimentConfig& config);
// Cases without a "culture" key use that case's default culture.
ExperimentConfig ExperimentConfigFromJson(const Json& json);

// Throws IoError when unreadable, ValidationError when not JSON.
Json ReadJsonFile(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so a
// failed write never leaves partial output. Throws IoError.
void WriteFileAtomically(const std::filesystem::path& path,
                         const std::string& content);

}  // namespace pb

#endif  // PB_IO_H_
