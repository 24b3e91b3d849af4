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

#include "djc/commands.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "djc/code_space.hpp"
#include "djc/encoded_logic.hpp"
#include "djc/error_channel.hpp"
#include "djc/prep_measure.hpp"
#include "djc/recovery.hpp"
#include "djc/serialize.hpp"

namespace djc {

using nlohmann::json;

namespace {

constexpr double kTol = 1e-12;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw ConfigError("config field '" + field + "': " + why);
}

json require(const json& config, const char* field) {
  if (!config.contains(field)) bad_field(field, "missing");
  return config.at(field);
}

CodeSpec code_from_config(const json& config) {
  if (config.contains("code")) {
    try {
      return code_from_json(config.at("code").dump());
    } catch (const std::exception& e) {
      bad_field("code", e.what());
    }
  }
  const int n_pairs = require(config, "n_pairs").get<int>();
  if (n_pairs < 2 || 2 * n_pairs > kMaxQubits) {
    bad_field("n_pairs", "must be in [2, " + std::to_string(kMaxQubits / 2) +
                             "]");
  }
  std::vector<int> signs;
  if (config.contains("pair_signs")) {
    signs = config.at("pair_signs").get<std::vector<int>>();
    if (static_cast<int>(signs.size()) != n_pairs) {
      bad_field("pair_signs", "needs one entry per pair");
    }
    for (int s : signs) {
      if (s != 1 && s != -1) bad_field("pair_signs", "entries must be +-1");
    }
  } else {
    signs.assign(static_cast<std::size_t>(n_pairs), -1);
  }
  return build_code(n_pairs, signs);
}

ControlModel model_from_config(const json& config) {
  const std::string m = config.value("model", "xxz");
  try {
    return control_model_from_string(m);
  } catch (const std::exception&) {
    bad_field("model", "must be 'xy' or 'xxz'");
  }
}

json residual_entry(const std::string& name, double value, double tolerance,
                    bool pass) {
  json j;
  j["check"] = name;
  j["value"] = value;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  return j;
}

std::string csv_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

CommandOutput cmd_verify(const json& config) {
  const CodeSpec code = code_from_config(config);
  const int n = code.n_qubits();

  CommandOutput out;
  json& report = out.report;
  report["command"] = "verify";
  report["n_pairs"] = code.n_pairs;
  report["pair_signs"] = code.pair_signs;
  json checks = json::array();
  bool all_pass = true;

  // DFS membership + collective-operator eigenvalue
  {
    const Matrix p = dfs_projector(n);
    double worst = 0.0;
    for (Eigen::Index c = 0; c < code.logical_basis.cols(); ++c) {
      const Vector v = code.logical_basis.col(c);
      worst = std::max(worst, (v - p * v).norm());
    }
    const bool pass = worst <= kTol;
    all_pass &= pass;
    checks.push_back(residual_entry("dfs_membership", worst, kTol, pass));
  }
  // orthonormality
  {
    Matrix g = code.logical_basis.adjoint() * code.logical_basis;
    g -= Matrix::Identity(g.rows(), g.cols());
    const double worst = g.cwiseAbs().maxCoeff();
    const bool pass = worst <= kTol;
    all_pass &= pass;
    checks.push_back(residual_entry("orthonormality", worst, kTol, pass));
  }
  // known-location QECC condition
  {
    const auto res = check_qecc(code, all_jump_operators(n), {}, kTol);
    all_pass &= res.pass;
    json qj;
    qj["check"] = "qecc_condition";
    qj["lambdas"] = res.lambdas;
    qj["max_offdiag"] = res.max_offdiag;
    qj["max_diag_spread"] = res.max_diag_spread;
    qj["tolerance"] = kTol;
    qj["pass"] = res.pass;
    checks.push_back(std::move(qj));
  }
  // generator algebra on the logical span
  {
    double worst = 0.0;
    for (int i = 1; i <= code.n_logical(); ++i) {
      const auto gen = logical_generators(code, i);
      const Matrix x = logical_restriction(gen.xbar, code);
      const Matrix z = logical_restriction(gen.zbar, code);
      const Matrix anti = x * z + z * x;
      worst = std::max(worst, anti.cwiseAbs().maxCoeff());
      Matrix x2 = x * x;
      x2 -= Matrix::Identity(x.rows(), x.cols());
      Matrix z2 = z * z;
      z2 -= Matrix::Identity(z.rows(), z.cols());
      worst = std::max({worst, x2.cwiseAbs().maxCoeff(),
                        z2.cwiseAbs().maxCoeff()});
    }
    const double tol = 1e-10;
    const bool pass = worst <= tol;
    all_pass &= pass;
    checks.push_back(residual_entry("generator_algebra", worst, tol, pass));
  }
  report["rate"] = {{"n_logical", code.n_logical()},
                    {"n_physical", n},
                    {"value", static_cast<double>(code.n_logical()) / n}};
  report["checks"] = std::move(checks);
  report["pass"] = all_pass;
  return out;
}

CommandOutput cmd_compile(const json& config) {
  const CodeSpec code = code_from_config(config);
  const ControlModel model = model_from_config(config);
  std::vector<LogicalGateSpec> circuit;
  try {
    circuit = circuit_from_json(require(config, "circuit"));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    bad_field("circuit", e.what());
  }
  for (const auto& g : circuit) {
    if (g.target < 1 || g.target > code.n_logical() ||
        (g.kind == GateKind::CP &&
         (g.target2 < 1 || g.target2 > code.n_logical() ||
          g.target2 == g.target))) {
      bad_field("circuit", "gate target out of range for " +
                               std::to_string(code.n_logical()) +
                               " logical qubits");
    }
  }

  const PulseSchedule schedule = compile_circuit(circuit, code, model);
  const Matrix composed = schedule_unitary(schedule, code.n_qubits());
  const Matrix restricted = logical_restriction(composed, code);
  const Matrix target = circuit_logical_unitary(circuit, code.n_logical());
  const double distance = phase_insensitive_distance(restricted, target);
  const auto leak = leakage_check(schedule, code);

  CommandOutput out;
  out.schedule = schedule_to_json(schedule);
  json& report = out.report;
  report["command"] = "compile";
  report["model"] = to_string(model);
  report["n_gates"] = circuit.size();
  report["n_steps"] = schedule.steps.size();
  report["verification"] = {
      {"logical_distance", distance},
      {"leakage",
       {{"max_dfs_leakage", leak.max_dfs_leakage},
        {"auxiliary_dimension", leak.auxiliary_dimension},
        {"extended_qecc_pass", leak.extended_qecc_pass},
        {"extended_qecc_max_offdiag", leak.extended_qecc_max_offdiag}}}};
  const double tol = 1e-8;
  report["pass"] = distance < tol && leak.max_dfs_leakage < kTol;
  return out;
}

CommandOutput cmd_simulate(const json& config) {
  const std::string mode = config.value("mode", "encoded");
  if (mode != "encoded" && mode != "bare") {
    bad_field("mode", "must be 'encoded' or 'bare'");
  }

  TrajectoryConfig tc;
  tc.dt = config.value("dt", 0.01);
  tc.tau = config.value("tau", 1.0);
  tc.idle_time = config.value("idle_time", 0.0);
  tc.recovery_enabled = config.value("recovery", true);
  tc.model = model_from_config(config);
  const auto n_traj = config.value("n_trajectories", std::uint64_t{1});
  const auto seed = config.value("seed", std::uint64_t{0});
  const int threads = config.value("threads", 0);

  if (config.contains("population_checkpoints")) {
    tc.population_checkpoints =
        config.at("population_checkpoints").get<std::vector<double>>();
  }
  if (config.contains("dephasing")) {
    const auto& dj = config.at("dephasing");
    tc.dephasing.times = dj.value("times", std::vector<double>{});
    const std::string dmode = dj.value("mode", "uniform");
    if (dmode == "uniform") {
      tc.dephasing.mode = DephasingSpec::Mode::Uniform;
    } else if (dmode == "fixed") {
      tc.dephasing.mode = DephasingSpec::Mode::Fixed;
      tc.dephasing.angles = dj.value("angles", std::vector<double>{});
      if (tc.dephasing.angles.empty()) {
        bad_field("dephasing.angles", "required for fixed mode");
      }
    } else {
      bad_field("dephasing.mode", "must be 'uniform' or 'fixed'");
    }
  }

  std::optional<CodeSpec> code;
  QState initial;
  Vector initial_logical;
  int n_qubits = 1;
  if (mode == "encoded") {
    code = code_from_config(config);
    n_qubits = code->n_qubits();
    const json init = config.value("initial", json{{"kind", "plus"}});
    const std::string kind = init.value("kind", "plus");
    Vector amps(code->logical_dim());
    if (kind == "zero") {
      amps.setZero();
      amps[0] = 1.0;
    } else if (kind == "plus") {
      amps.setConstant(1.0 / std::sqrt(static_cast<double>(amps.size())));
    } else if (kind == "amplitudes") {
      const auto pairs =
          init.value("amplitudes", std::vector<std::vector<double>>{});
      if (static_cast<Eigen::Index>(pairs.size()) != amps.size()) {
        bad_field("initial.amplitudes",
                  "needs 2^(n_pairs-1) [re,im] entries");
      }
      for (Eigen::Index k = 0; k < amps.size(); ++k) {
        if (pairs[static_cast<std::size_t>(k)].size() != 2) {
          bad_field("initial.amplitudes", "entries must be [re,im]");
        }
        amps[k] = Complex(pairs[static_cast<std::size_t>(k)][0],
                          pairs[static_cast<std::size_t>(k)][1]);
      }
      const double norm = amps.norm();
      if (norm <= 0.0) bad_field("initial.amplitudes", "zero vector");
      amps /= norm;
    } else {
      bad_field("initial.kind", "must be zero|plus|amplitudes");
    }
    initial_logical = amps;
    initial = encode(*code, amps);
  } else {
    n_qubits = 1;
    const json init = config.value("initial", json{{"kind", "plus"}});
    const std::string kind = init.value("kind", "plus");
    Vector amps(2);
    if (kind == "zero") {
      amps << 1.0, 0.0;
    } else if (kind == "plus") {
      amps << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    } else if (kind == "amplitudes") {
      const auto pairs =
          init.value("amplitudes", std::vector<std::vector<double>>{});
      if (pairs.size() != 2) bad_field("initial.amplitudes", "needs 2 entries");
      amps[0] = Complex(pairs[0][0], pairs[0][1]);
      amps[1] = Complex(pairs[1][0], pairs[1][1]);
      amps /= amps.norm();
    } else {
      bad_field("initial.kind", "must be zero|plus|amplitudes");
    }
    initial = {1, amps};
  }

  // rates: scalar kappa or per-qubit list
  const json kappa = require(config, "kappa");
  if (kappa.is_number()) {
    tc.rates.assign(static_cast<std::size_t>(n_qubits), kappa.get<double>());
  } else if (kappa.is_array()) {
    tc.rates = kappa.get<std::vector<double>>();
    if (static_cast<int>(tc.rates.size()) != n_qubits) {
      bad_field("kappa", "list length must equal the number of qubits");
    }
  } else {
    bad_field("kappa", "must be a number or a list");
  }
  for (double r : tc.rates) {
    if (r < 0.0) bad_field("kappa", "rates must be >= 0");
  }
  if (tc.dt <= 0.0) bad_field("dt", "must be > 0");
  double max_rate = 0.0;
  for (double r : tc.rates) max_rate = std::max(max_rate, r);
  if (tc.dt * max_rate >= 0.05) {
    bad_field("dt", "dt * max(kappa) must stay below 0.05");
  }

  if (config.contains("schedule")) {
    try {
      tc.schedule = schedule_from_json(config.at("schedule"));
    } catch (const std::exception& e) {
      bad_field("schedule", e.what());
    }
  } else if (config.contains("circuit") && mode == "encoded") {
    try {
      tc.schedule = compile_circuit(circuit_from_json(config.at("circuit")),
                                    *code, tc.model);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      bad_field("circuit", e.what());
    }
  }

  const EnsembleResult res =
      run_ensemble(initial, tc, code ? &*code : nullptr, n_traj, seed,
                   threads);

  CommandOutput out;
  std::ostringstream csv;
  csv << "trajectory_id,n_jumps,first_jump_qubit,logical_fidelity\n";
  for (const auto& row : res.rows) {
    csv << row.trajectory_id << ',' << row.n_jumps << ','
        << row.first_jump_qubit << ',' << csv_double(row.logical_fidelity)
        << '\n';
  }
  out.trajectories_csv = csv.str();

  json& report = out.report;
  report["command"] = "simulate";
  report["mode"] = mode;
  report["model"] = to_string(tc.model);
  report["recovery"] = tc.recovery_enabled;
  report["n_trajectories"] = n_traj;
  report["seed"] = seed;
  report["mean_fidelity"] = res.mean_fidelity;
  report["stddev_fidelity"] = res.stddev_fidelity;
  report["stderr_fidelity"] = res.stderr_fidelity;
  report["jump_histogram"] = res.jump_histogram;
  if (!tc.population_checkpoints.empty()) {
    auto sorted_cp = tc.population_checkpoints;
    std::sort(sorted_cp.begin(), sorted_cp.end());
    report["populations"] = {{"times", sorted_cp},
                             {"mean", res.population_mean},
                             {"stderr", res.population_stderr}};
  }
  return out;
}

CommandOutput cmd_prep_check(const json& config) {
  const int n_pairs = require(config, "n_pairs").get<int>();
  if (n_pairs < 2 || 2 * n_pairs > kMaxQubits) {
    bad_field("n_pairs", "must be in [2, " + std::to_string(kMaxQubits / 2) +
                             "]");
  }
  std::vector<double> couplings;
  if (config.contains("J")) {
    couplings = config.at("J").get<std::vector<double>>();
    if (static_cast<int>(couplings.size()) != n_pairs) {
      bad_field("J", "needs one coupling per pair");
    }
  } else {
    couplings.assign(static_cast<std::size_t>(n_pairs), 1.0);
  }
  for (double j : couplings) {
    if (j == 0.0) bad_field("J", "couplings must be nonzero");
  }

  const PrepReport prep = prepare_ground_state(couplings, n_pairs);
  std::vector<int> signs;
  for (double j : couplings) signs.push_back(j > 0 ? 1 : -1);
  const CodeSpec code = build_code(n_pairs, signs);

  // the displayed product identity: the pairwise ground state equals the
  // uniform superposition of all logical basis states
  Vector uniform(code.logical_dim());
  uniform.setConstant(1.0 / std::sqrt(static_cast<double>(uniform.size())));
  const QState product_state = encode(code, uniform);
  const double phase =
      aligning_phase(prep.ground_state.amplitudes, product_state.amplitudes);
  const double product_distance =
      (prep.ground_state.amplitudes -
       std::exp(Complex{0.0, phase}) * product_state.amplitudes)
          .norm();

  CommandOutput out;
  json& report = out.report;
  report["command"] = "prep-check";
  report["n_pairs"] = n_pairs;
  report["J"] = couplings;
  report["ground_energy"] = prep.ground_energy;
  report["gap"] = prep.gap;
  report["overlap_with_code_projector"] = prep.overlap_with_code_projector;
  report["in_code_space"] = prep.in_code_space;
  report["product_identity_distance"] = product_distance;

  const auto shots = config.value("readout_shots", std::uint64_t{0});
  if (shots > 0) {
    const auto seed = config.value("seed", std::uint64_t{0});
    const ControlModel model = model_from_config(config);
    std::mt19937_64 rng(seed);
    std::ostringstream csv;
    csv << "shot,logical_index,bit\n";
    std::vector<std::vector<std::uint64_t>> counts(
        static_cast<std::size_t>(code.n_logical()), {0, 0, 0});
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
      QState state = prep.ground_state;
      for (int l = 1; l <= code.n_logical(); ++l) {
        const auto r = encoded_readout(state, l, code, model, rng);
        state = r.collapsed;
        const int bit = r.bit ? *r.bit : -1;
        csv << shot << ',' << l << ',' << bit << '\n';
        ++counts[static_cast<std::size_t>(l - 1)]
                [static_cast<std::size_t>(bit < 0 ? 2 : bit)];
      }
    }
    out.readout_csv = csv.str();
    json stats = json::array();
    for (int l = 1; l <= code.n_logical(); ++l) {
      stats.push_back({{"logical_index", l},
                       {"zeros", counts[static_cast<std::size_t>(l - 1)][0]},
                       {"ones", counts[static_cast<std::size_t>(l - 1)][1]},
                       {"other", counts[static_cast<std::size_t>(l - 1)][2]}});
    }
    report["readout"] = {{"shots", shots}, {"seed", seed},
                         {"counts", std::move(stats)}};
  }

  report["pass"] = prep.in_code_space && product_distance <= 1e-10;
  return out;
}

}  // namespace djc
