// Copyright 2026 the djc-sim authors
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

#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace djc {

/// Raised when a run config fails schema validation; message names the
/// offending field.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reports that carry a boolean "pass" field (verify, compile, prep-check)
/// signal verification failure through it; the C API and CLI map a false
/// value to their failure status without losing the report.
struct CommandOutput {
  nlohmann::json report;
  std::string trajectories_csv;  // simulate
  std::string readout_csv;       // prep-check
  nlohmann::json schedule;       // compile
};

/// verify: builds (or loads) a code and runs DFS membership, the
/// known-location QECC condition, rate, and generator-algebra checks.
CommandOutput cmd_verify(const nlohmann::json& config);

/// compile: circuit -> pulse schedule, with a verification block (distance
/// to the logical target, leakage report).
CommandOutput cmd_compile(const nlohmann::json& config);

/// simulate: seeded trajectory ensemble, encoded or bare.
CommandOutput cmd_simulate(const nlohmann::json& config);

/// prep-check: ground-state preparation analysis and optional readout shots.
CommandOutput cmd_prep_check(const nlohmann::json& config);

}  // namespace djc
