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
#include <vector>

#include "djc/code_space.hpp"
#include "djc/encoded_logic.hpp"
#include "djc/operator_core.hpp"

namespace djc {

/// Emission on qubit `qubit` detected at time `time`.
struct JumpEvent {
  double time = 0.0;
  int qubit = 0;
};

enum class JumpParity { Odd, Even };

/// The two block-local recovery unitaries, in the pair basis
/// |00>,|01>,|10>,|11>:
///   CX1 swaps |00> <-> |10| (jump on the odd qubit 2i-1),
///   CX2 swaps |00> <-> |01| (jump on the even qubit 2i).
struct RecoveryUnitaries {
  Eigen::Matrix4cd cx1;
  Eigen::Matrix4cd cx2;
};
RecoveryUnitaries recovery_unitaries();

/// Pulse realization of CX1/CX2 on the block (2i-1, 2i), exact as a matrix
/// including its global phase. XXZ: 3 steps (single-qubit layer, one Ising
/// pulse, single-qubit layer). XY: 7 steps, with the Ising pulse replaced by
/// an exact 5-step synthesis [layer, T(pi/2), layer, T(pi/2), layer] that
/// stays on the block. Both models compose to the same matrix.
PulseSchedule recovery_schedule(int block, JumpParity parity,
                                ControlModel model);

/// Applies the recovery for the detected jump to a post-jump state.
QState apply_recovery(const QState& state, const JumpEvent& event,
                      const CodeSpec& code, ControlModel model);

/// Where the logical information lives after (recovery o jump o encode):
/// the image isometry and encoded generators valid in that frame.
struct RecoveryFrame {
  int jump_qubit = 0;
  Matrix isometry;  // 2^(2n) x 2^(n-1), orthonormal columns
  /// Generators selected from the dictionary {±T_{2a-1,2a},
  /// ±Z_{2a-1}Z_{2b-1}} that act as sigma_x / sigma_z on the image basis.
  std::vector<HamiltonianTerm> xbar_terms;  // one per logical qubit
  std::vector<HamiltonianTerm> zbar_terms;
  Matrix xbar(int logical_index, int n_qubits) const;
  Matrix zbar(int logical_index, int n_qubits) const;
};

RecoveryFrame derive_recovery_frame(const CodeSpec& code, int jump_qubit,
                                    ControlModel model);

/// |<isometry * logical_amplitudes | state>|^2. Pass code.logical_basis as
/// the isometry to score against the pristine code frame.
double logical_fidelity(const QState& state, const Vector& logical_amplitudes,
                        const Matrix& isometry);

std::string frame_to_json(const RecoveryFrame& frame);

}  // namespace djc
