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

#include <string>

#include <nlohmann/json.hpp>

#include "djc/encoded_logic.hpp"
#include "djc/operator_core.hpp"

namespace djc {

/// Schedule schema:
/// {"steps": [{"kind":"xy|ising|local_z","sites":[i,j],"angle":a} |
///            {"kind":"local_layer","gates":[{"site":i,"gate":"w"} |
///                                           {"site":i,"gate":"zrot",
///                                            "angle":a}]}],
///  "global_phase": g}
nlohmann::json schedule_to_json(const PulseSchedule& schedule);
PulseSchedule schedule_from_json(const nlohmann::json& j);

/// Circuit schema: array of
///   {"gate":"rotx"|"rotz", "target":i, "theta":t}
///   {"gate":"euler", "target":i, "alpha":a, "theta":t, "beta":b}
///   {"gate":"hadamard", "target":i}
///   {"gate":"cp", "targets":[i,j]}
std::vector<LogicalGateSpec> circuit_from_json(const nlohmann::json& j);

}  // namespace djc
