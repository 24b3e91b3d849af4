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

#include "djc/serialize.hpp"

#include <stdexcept>

namespace djc {

using nlohmann::json;

json schedule_to_json(const PulseSchedule& schedule) {
  json steps = json::array();
  for (const auto& step : schedule.steps) {
    json s;
    switch (step.kind) {
      case StepKind::XY:
        s["kind"] = "xy";
        s["sites"] = {step.sites[0], step.sites[1]};
        s["angle"] = step.angle;
        break;
      case StepKind::Ising:
        s["kind"] = "ising";
        s["sites"] = {step.sites[0], step.sites[1]};
        s["angle"] = step.angle;
        break;
      case StepKind::LocalZ:
        s["kind"] = "local_z";
        s["sites"] = {step.sites[0]};
        s["angle"] = step.angle;
        break;
      case StepKind::LocalLayer: {
        s["kind"] = "local_layer";
        json gates = json::array();
        for (const auto& g : step.gates) {
          json gj;
          gj["site"] = g.site;
          if (g.gate == LayerGateKind::Hadamard) {
            gj["gate"] = "w";
          } else {
            gj["gate"] = "zrot";
            gj["angle"] = g.angle;
          }
          gates.push_back(std::move(gj));
        }
        s["gates"] = std::move(gates);
        break;
      }
    }
    steps.push_back(std::move(s));
  }
  json out;
  out["steps"] = std::move(steps);
  out["global_phase"] = schedule.global_phase;
  return out;
}

PulseSchedule schedule_from_json(const json& j) {
  PulseSchedule schedule;
  for (const auto& s : j.at("steps")) {
    const std::string kind = s.at("kind").get<std::string>();
    if (kind == "xy" || kind == "ising") {
      const auto sites = s.at("sites").get<std::vector<int>>();
      if (sites.size() != 2) {
        throw std::invalid_argument("schedule step needs two sites");
      }
      const double angle = s.at("angle").get<double>();
      schedule.steps.push_back(kind == "xy"
                                   ? PulseStep::xy(sites[0], sites[1], angle)
                                   : PulseStep::ising(sites[0], sites[1],
                                                      angle));
    } else if (kind == "local_z") {
      const auto sites = s.at("sites").get<std::vector<int>>();
      if (sites.size() != 1) {
        throw std::invalid_argument("local_z step needs one site");
      }
      schedule.steps.push_back(
          PulseStep::local_z(sites[0], s.at("angle").get<double>()));
    } else if (kind == "local_layer") {
      std::vector<LayerGate> gates;
      for (const auto& gj : s.at("gates")) {
        LayerGate g;
        g.site = gj.at("site").get<int>();
        const std::string gk = gj.at("gate").get<std::string>();
        if (gk == "w") {
          g.gate = LayerGateKind::Hadamard;
        } else if (gk == "zrot") {
          g.gate = LayerGateKind::ZRot;
          g.angle = gj.at("angle").get<double>();
        } else {
          throw std::invalid_argument("unknown layer gate: " + gk);
        }
        gates.push_back(g);
      }
      schedule.steps.push_back(PulseStep::layer(std::move(gates)));
    } else {
      throw std::invalid_argument("unknown schedule step kind: " + kind);
    }
  }
  schedule.global_phase = j.value("global_phase", 0.0);
  return schedule;
}

std::vector<LogicalGateSpec> circuit_from_json(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("circuit must be an array of gates");
  }
  std::vector<LogicalGateSpec> circuit;
  for (const auto& gj : j) {
    const std::string gate = gj.at("gate").get<std::string>();
    LogicalGateSpec spec;
    if (gate == "rotx" || gate == "rotz") {
      spec.kind = gate == "rotx" ? GateKind::RotX : GateKind::RotZ;
      spec.target = gj.at("target").get<int>();
      spec.theta = gj.at("theta").get<double>();
    } else if (gate == "euler") {
      spec.kind = GateKind::Euler;
      spec.target = gj.at("target").get<int>();
      spec.alpha = gj.at("alpha").get<double>();
      spec.theta = gj.at("theta").get<double>();
      spec.beta = gj.at("beta").get<double>();
    } else if (gate == "hadamard") {
      spec.kind = GateKind::Hadamard;
      spec.target = gj.at("target").get<int>();
    } else if (gate == "cp") {
      spec.kind = GateKind::CP;
      const auto targets = gj.at("targets").get<std::vector<int>>();
      if (targets.size() != 2) {
        throw std::invalid_argument("cp gate needs two targets");
      }
      spec.target = targets[0];
      spec.target2 = targets[1];
    } else {
      throw std::invalid_argument("unknown gate: " + gate);
    }
    circuit.push_back(spec);
  }
  return circuit;
}

}  // namespace djc
