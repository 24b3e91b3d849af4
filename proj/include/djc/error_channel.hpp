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

#include <cstdint>
#include <optional>
#include <vector>

#include "djc/code_space.hpp"
#include "djc/encoded_logic.hpp"
#include "djc/operator_core.hpp"
#include "djc/recovery.hpp"

namespace djc {

/// When and how collective-dephasing kicks exp(-i phi S_z) are injected.
/// Uniform draws phi ~ U[0, 2pi) from the trajectory RNG; Fixed cycles
/// through the provided angles.
struct DephasingSpec {
  enum class Mode { Uniform, Fixed };
  Mode mode = Mode::Uniform;
  std::vector<double> times;
  std::vector<double> angles;  // Fixed mode
};

struct TrajectoryConfig {
  std::vector<double> rates;     // kappa_i per physical qubit, >= 0
  double dt = 0.01;              // first-order step; dt * max(kappa) < 0.05
  std::uint64_t seed = 0;        // per-trajectory RNG seed
  bool recovery_enabled = true;
  ControlModel model = ControlModel::XXZ;  // used for recovery pulses
  PulseSchedule schedule;        // computation run during decay (may be empty)
  double tau = 1.0;              // physical duration per radian of pulse angle
  double idle_time = 0.0;        // extra free-decay time after the schedule
  DephasingSpec dephasing;
  std::vector<double> population_checkpoints;  // times to record <n_i>
};

struct TrajectoryRecord {
  std::vector<JumpEvent> events;
  int recoveries_applied = 0;
  QState final_state;
  double logical_fidelity = 0.0;
  /// population_checkpoints x n_qubits excitation expectations.
  std::vector<std::vector<double>> populations;
};

/// S_i = |0><1|_i tensored with identities.
Matrix jump_operator(int site, int n_qubits);

/// H_C = H_S - (i/2) sum_i kappa_i S_i^H S_i (non-Hermitian).
Matrix conditional_hamiltonian(const Matrix& h_s,
                               const std::vector<double>& rates);

/// exp(-i phi S_z) with S_z = sum_i sigma_z_i. Acts as the identity on the
/// balanced-bitstring DFS (S_z eigenvalue 0 there).
QState dephasing_kick(const QState& state, double phi);

/// One quantum trajectory: first-order jump/no-jump stepping through the
/// schedule (Trotter-sliced at dt against the conditional Hamiltonian) plus
/// idle decay time. On a jump the state collapses through S_i, is
/// renormalized, and (when enabled) the block recovery runs immediately;
/// the schedule then resumes. Deterministic given config.seed.
///
/// `code` selects encoded operation (recovery + frame-scored fidelity).
/// Pass nullptr for a bare register: fidelity is then scored against the
/// ideal (noise-free) evolution of the initial state.
TrajectoryRecord run_trajectory(const QState& initial,
                                const TrajectoryConfig& config,
                                const CodeSpec* code);

struct EnsembleRow {
  std::uint64_t trajectory_id = 0;
  int n_jumps = 0;
  int first_jump_qubit = 0;  // 0 = no jump
  double logical_fidelity = 0.0;
};

struct EnsembleResult {
  std::vector<EnsembleRow> rows;
  double mean_fidelity = 0.0;
  double stddev_fidelity = 0.0;
  double stderr_fidelity = 0.0;
  std::vector<std::uint64_t> jump_histogram;  // index = number of jumps
  /// checkpoint x qubit matrices of the ensemble mean and standard error of
  /// the excitation expectations.
  std::vector<std::vector<double>> population_mean;
  std::vector<std::vector<double>> population_stderr;
};

/// Derives the per-trajectory seed from the master seed by a fixed splitmix
/// rule, so trajectories are independent and the set is reproducible.
std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t id);

/// Runs n_trajectories independent trajectories (optionally across threads;
/// the result is identical for any thread count) and reduces the records.
EnsembleResult run_ensemble(const QState& initial,
                            const TrajectoryConfig& base_config,
                            const CodeSpec* code, std::uint64_t n_trajectories,
                            std::uint64_t master_seed, int threads = 0);

}  // namespace djc
