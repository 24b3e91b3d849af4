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

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace djc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Hard cap on register size. Everything here is dense; 2^12 = 4096 is the
/// largest dimension we are willing to allocate operators for.
inline constexpr int kMaxQubits = 12;

/// Basis convention used throughout: basis index b encodes the bitstring of
/// qubits 1..n with qubit 1 as the MOST significant bit. So for n=4 the state
/// |1010> lives at index 0b1010 = 10, and qubit i (1-based) of index b is
/// (b >> (n - i)) & 1.
inline int qubit_bit(std::uint64_t basis_index, int site, int n_qubits) {
  return static_cast<int>((basis_index >> (n_qubits - site)) & 1u);
}

/// Bit mask selecting qubit `site` (1-based) in an n-qubit basis index.
inline std::uint64_t qubit_mask(int site, int n_qubits) {
  return std::uint64_t{1} << (n_qubits - site);
}

enum class TermKind { XY, Ising, LocalZ };

/// One controllable interaction of the system Hamiltonian: an XY exchange
/// term T_ij = (X_i X_j + Y_i Y_j)/2, an Ising term Z_i Z_j, or a local Z_i.
/// The coefficient carries the relative strength (J_ij, J^z_ij, omega_i).
struct HamiltonianTerm {
  TermKind kind = TermKind::XY;
  int site_a = 1;
  int site_b = 0;  // unused for LocalZ
  double coefficient = 1.0;

  static HamiltonianTerm xy(int i, int j, double coeff = 1.0) {
    return {TermKind::XY, i, j, coeff};
  }
  static HamiltonianTerm ising(int i, int j, double coeff = 1.0) {
    return {TermKind::Ising, i, j, coeff};
  }
  static HamiltonianTerm local_z(int i, double coeff = 1.0) {
    return {TermKind::LocalZ, i, 0, coeff};
  }
};

/// Pure state over 2^n_qubits computational basis states. May be
/// sub-normalized during conditional (non-Hermitian) evolution.
struct QState {
  int n_qubits = 0;
  Vector amplitudes;

  double norm() const { return amplitudes.norm(); }
  QState normalized() const;

  static QState basis_state(int n_qubits, std::uint64_t index);
  /// Parses "0101"-style kets (qubit 1 first, i.e. leftmost).
  static QState from_bitstring(const std::string& bits);
};

/// One step of a pulse schedule. Hamiltonian kinds represent the unitary
/// exp(-i * angle * term); LocalLayer represents simultaneous single-qubit
/// gates (Hadamard W and Z-rotations), used only by the recovery sequences
/// where plain Hamiltonian pulses cannot express a Hadamard.
enum class StepKind { XY, Ising, LocalZ, LocalLayer };

enum class LayerGateKind { Hadamard, ZRot };

struct LayerGate {
  int site = 1;
  LayerGateKind gate = LayerGateKind::Hadamard;
  double angle = 0.0;  // ZRot only: exp(-i * angle * Z_site)
};

struct PulseStep {
  StepKind kind = StepKind::XY;
  std::array<int, 2> sites{1, 0};
  double angle = 0.0;
  std::vector<LayerGate> gates;  // LocalLayer only, applied in list order

  static PulseStep xy(int i, int j, double angle) {
    return {StepKind::XY, {i, j}, angle, {}};
  }
  static PulseStep ising(int i, int j, double angle) {
    return {StepKind::Ising, {i, j}, angle, {}};
  }
  static PulseStep local_z(int i, double angle) {
    return {StepKind::LocalZ, {i, 0}, angle, {}};
  }
  static PulseStep layer(std::vector<LayerGate> gates) {
    return {StepKind::LocalLayer, {0, 0}, 0.0, std::move(gates)};
  }
};

/// Ordered pulse sequence. Steps compose right-to-left in list order: the
/// first step is applied to the state first. The composed unitary is
/// exp(i * global_phase) * U_k ... U_2 U_1. The explicit phase keeps gate
/// identities exact where a sequence realizes a target only up to a scalar.
struct PulseSchedule {
  std::vector<PulseStep> steps;
  double global_phase = 0.0;

  void append(const PulseSchedule& other);
};

// ---------------------------------------------------------------------------
// Operator construction and algebra
// ---------------------------------------------------------------------------

/// coefficient x (named operator) as a dense 2^n x 2^n matrix.
/// XY -> T_ij, Ising -> Z_i Z_j, LocalZ -> Z_i.
Matrix build_term(const HamiltonianTerm& term, int n_qubits);

/// exp(-i * angle * op) for Hermitian op, via eigendecomposition of the
/// generator. Throws if op is not Hermitian within 1e-10.
Matrix exponentiate(const Matrix& op, double angle);

/// exp(-i*phi*a) * b * exp(i*phi*a). a must be Hermitian.
Matrix conjugate_with(const Matrix& a, double phi, const Matrix& b);

/// Matrix-vector application; preserves norm iff u is unitary.
QState apply(const Matrix& u, const QState& s);

bool is_hermitian(const Matrix& m, double tol = 1e-12);
bool is_unitary(const Matrix& m, double tol = 1e-12);

/// min over gamma of ||u - e^{i gamma} v||_F, the global-phase-insensitive
/// distance every gate identity here is checked with.
double phase_insensitive_distance(const Matrix& u, const Matrix& v);

/// The phase gamma attaining the minimum above (0 when tr(v^H u) vanishes).
double aligning_phase(const Matrix& u, const Matrix& v);

/// N = sum_i |1><1|_i, the total-excitation-number operator.
Matrix excitation_number_operator(int n_qubits);

/// Unitary of a single pulse step on an n-qubit register.
Matrix step_unitary(const PulseStep& step, int n_qubits);

/// Composed unitary of the whole schedule, including its global phase.
Matrix schedule_unitary(const PulseSchedule& schedule, int n_qubits);

/// State after applying the schedule (phase included).
QState apply_schedule(const PulseSchedule& schedule, const QState& s);

}  // namespace djc
