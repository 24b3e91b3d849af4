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

#include <optional>
#include <string>
#include <vector>

#include "djc/code_space.hpp"
#include "djc/operator_core.hpp"

namespace djc {

/// Which interaction terms the hardware can switch: XY-only, or XY plus
/// Ising (XXZ). Compiled schedules contain only terms the model permits.
enum class ControlModel { XY, XXZ };

ControlModel control_model_from_string(const std::string& s);
std::string to_string(ControlModel m);

enum class GateKind { RotX, RotZ, Euler, Hadamard, CP };

struct LogicalGateSpec {
  GateKind kind = GateKind::RotX;
  int target = 1;        // logical index, 1-based (RotX/RotZ/Euler/Hadamard)
  int target2 = 2;       // second logical index (CP)
  double theta = 0.0;    // RotX/RotZ angle, Euler X angle
  double alpha = 0.0;    // Euler first Z angle
  double beta = 0.0;     // Euler last Z angle
};

/// Encoded generators for logical qubit i:
///   X_bar_i = -sign(J_{2i-1,2i}) * T_{2i-1,2i}   (sign folded in so the
///             action on the logical basis is exactly +sigma_x), and
///   Z_bar_i = Z_{2i-1} Z_{2n-1}.
struct LogicalGenerators {
  Matrix xbar;
  Matrix zbar;
};

LogicalGenerators logical_generators(const CodeSpec& code, int logical_index);

/// ZXZ Euler angles of a 2x2 special unitary:
/// u = exp(-i*beta*Z) exp(-i*theta*X) exp(-i*alpha*Z).
struct EulerAngles {
  double alpha = 0.0;
  double theta = 0.0;
  double beta = 0.0;
};
EulerAngles euler_zxz(const Eigen::Matrix2cd& su2);

/// Schedule whose composed unitary acts on the logical span as `target` on
/// logical qubit i (identity elsewhere), up to global phase. The target may
/// be any 2x2 unitary; its determinant phase is dropped.
PulseSchedule euler_synthesize(const Eigen::Matrix2cd& target,
                               int logical_index, const CodeSpec& code,
                               ControlModel model);

/// Five-pulse XY realization of exp(-i*theta*Z_i Z_j) on the logical span of
/// any code in this family, for odd physical sites i = 2a-1, j = 2b-1:
///
///   T_{2a,2b-1}(+pi/4), T_{2a-1,2b-1}(-pi/2), T_{2a-1,2a}(2*theta),
///   T_{2a-1,2b-1}(+pi/2), T_{2a,2b-1}(-pi/4)
///
/// (first listed applied first). The composed unitary restricted to the
/// logical span equals exp(-i*theta*Z_i Z_j) there up to a theta-dependent
/// global phase, and intermediate states reached from a logical basis state
/// stay inside the DJC-protected subspace.
PulseSchedule ising_via_xy(int site_i, int site_j, double theta);

/// Controlled-phase between logical qubits i and j, including the local
/// Z-bar phase corrections that make the diagonal logical action equal
/// diag(1,1,1,-1) up to global phase. XXZ uses direct Ising pulses; XY
/// expands each through ising_via_xy.
PulseSchedule encoded_cp(const CodeSpec& code, int logical_i, int logical_j,
                         ControlModel model);

PulseSchedule compile_circuit(const std::vector<LogicalGateSpec>& circuit,
                              const CodeSpec& code, ControlModel model);

/// U restricted to the logical span: E^H U E with E the encode isometry.
Matrix logical_restriction(const Matrix& u, const CodeSpec& code);

/// The unitary a circuit acts with on the logical register (small matrix),
/// built gate-by-gate from 2x2/4x4 blocks; the compiler's oracle-facing
/// counterpart of schedule compilation.
Matrix circuit_logical_unitary(const std::vector<LogicalGateSpec>& circuit,
                               int n_logical);

struct LeakageReport {
  /// max over prefixes and logical basis inputs of the amplitude outside the
  /// DFS of balanced bitstrings.
  double max_dfs_leakage = 0.0;
  /// max amplitude outside (logical span + auxiliary span), where the
  /// auxiliary span is orthonormalized from the prefix states themselves.
  double max_outside_reached = 0.0;
  /// dimension of the auxiliary span the schedule actually explores.
  int auxiliary_dimension = 0;
  /// whether logical basis + auxiliary basis together still satisfy the
  /// known-location QECC condition (so excursions stay protected).
  bool extended_qecc_pass = false;
  double extended_qecc_max_offdiag = 0.0;
};

LeakageReport leakage_check(const PulseSchedule& schedule,
                            const CodeSpec& code, double tol = 1e-12);

}  // namespace djc
