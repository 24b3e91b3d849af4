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
#include <string>
#include <vector>

#include "djc/operator_core.hpp"

namespace djc {

/// A detected-jump-correcting code on 2*n_pairs physical qubits encoding
/// n_pairs-1 logical qubits.
///
/// Pair i occupies physical qubits (2i-1, 2i). The single-pair states are
///   |0~>_i = |0 1>   and   |1~>_i = -sign(J_{2i-1,2i}) |1 0>,
/// and the logical basis state for bitstring eps_1..eps_{n-1} is
///   ( |eps~_1>...|eps~_{n-1}>|0~>_n  +  bitwise-NOT of the tilde labels,
///     each tilde state carrying its own sign ) / sqrt(2).
///
/// Logical basis columns are ordered by the integer value of eps with eps_1
/// as the most significant bit, mirroring the physical qubit-1-is-MSB rule.
struct CodeSpec {
  int n_pairs = 0;
  std::vector<int> pair_signs;  // sign(J_{2i-1,2i}) per pair, each +1 or -1
  Matrix logical_basis;         // 2^(2n) x 2^(n-1), orthonormal columns

  int n_qubits() const { return 2 * n_pairs; }
  int n_logical() const { return n_pairs - 1; }
  Eigen::Index logical_dim() const {
    return Eigen::Index{1} << n_logical();
  }
};

struct QeccCheckResult {
  std::vector<double> lambdas;  // per jump operator
  double max_offdiag = 0.0;
  double max_diag_spread = 0.0;  // max_i max_m |<m|S^H S|m> - Lambda_i|
  bool pass = false;
};

/// All bitstrings (as basis indices) with exactly n_qubits/2 ones, ascending.
/// These span the decoherence-free subspace of collective decay: each is an
/// eigenvector of C = sum_i |1><1|_i with eigenvalue n_qubits/2.
std::vector<std::uint64_t> dfs_basis(int n_qubits);

/// Orthogonal projector onto the DFS of balanced bitstrings.
Matrix dfs_projector(int n_qubits);

CodeSpec build_code(int n_pairs, const std::vector<int>& pair_signs);

/// sum_eps amp_eps |eps_L>. Amplitudes must be length 2^(n-1) and normalized.
QState encode(const CodeSpec& code, const Vector& logical_amplitudes);

/// The jump operator S_i = |0><1|_i (see error_channel) for all i.
std::vector<Matrix> all_jump_operators(int n_qubits);

/// Evaluates <psi_m| S_i^H S_i |psi_n> = Lambda_i delta_mn over the logical
/// basis plus optional extra states, for every provided jump operator.
QeccCheckResult check_qecc(const CodeSpec& code,
                           const std::vector<Matrix>& jump_ops,
                           const std::vector<Vector>& extra_states = {},
                           double tol = 1e-12);

/// JSON round trip for the CLI verify surface. Schema:
/// {"n_pairs": n, "pair_signs": [...],
///  "logical_basis": [ [[index, re, im], ...] per logical state ]}
std::string code_to_json(const CodeSpec& code);
CodeSpec code_from_json(const std::string& text);

}  // namespace djc
