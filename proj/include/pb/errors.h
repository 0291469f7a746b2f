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

#ifndef PB_ERRORS_H_
#define PB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pb {

// Base class for every error raised by the library. `kind()` is a stable
// lowercase token used by the CLI for its machine-readable error line.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Input that violates a type invariant: unknown ids, empty ballots, bad
// permutations, malformed files.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error("validation", message) {}
};

// A caller broke an operation precondition (e.g. asked whether an
// infeasible budget is exhaustive).
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& message)
      : Error("contract", message) {}
};

// A rule or experiment was configured in a way it cannot run with
// (Borda scoring without rankings, STV on an approval-only instance...).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error("config", message) {}
};

// The rule exists but not for this setting (Monroe under unequal costs).
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& message)
      : Error("unsupported", message) {}
};

// Exhaustive oracles refuse inputs above their size cap.
class RefusalError : public Error {
 public:
  explicit RefusalError(const std::string& message)
      : Error("refused", message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("io", message) {}
};

}  // namespace pb

#endif  // PB_ERRORS_H_
