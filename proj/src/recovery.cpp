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

#include "djc/recovery.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace djc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_block(int block, int n_pairs) {
  if (block < 1 || block > n_pairs) {
    throw std::invalid_argument("recovery block out of range");
  }
}

/// Single-qubit P = exp(-i (3pi/4) Z) as a layer gate.
LayerGate p_gate(int site) { return {site, LayerGateKind::ZRot, 3 * kPi / 4}; }
LayerGate p2_gate(int site) { return {site, LayerGateKind::ZRot, 3 * kPi / 2}; }
LayerGate w_gate(int site) { return {site, LayerGateKind::Hadamard, 0.0}; }
LayerGate zrot(int site, double a) { return {site, LayerGateKind::ZRot, a}; }

/// Exact 5-step XY synthesis of exp(+i pi/4 Z_u Z_v) on the block itself:
///   layer{u: W, then ZRot(pi/4)}
///   T_uv(pi/2)
///   layer{v: W, ZRot(pi/4), W}        (an x-rotation built from W and Z)
///   T_uv(pi/2)
///   layer{u: ZRot(pi/4), then W, then ZRot(pi/2)}  with scalar -i
/// The -i lands in the schedule's global phase.
PulseSchedule ising_block_xy(int u, int v) {
  PulseSchedule s;
  s.steps.push_back(PulseStep::layer({w_gate(u), zrot(u, kPi / 4)}));
  s.steps.push_back(PulseStep::xy(u, v, kPi / 2));
  s.steps.push_back(PulseStep::layer({w_gate(v), zrot(v, kPi / 4), w_gate(v)}));
  s.steps.push_back(PulseStep::xy(u, v, kPi / 2));
  s.steps.push_back(
      PulseStep::layer({zrot(u, kPi / 4), w_gate(u), zrot(u, kPi / 2)}));
  s.global_phase = -kPi / 2;
  return s;
}

}  // namespace

RecoveryUnitaries recovery_unitaries() {
  RecoveryUnitaries u;
  u.cx1 = Eigen::Matrix4cd::Zero();
  u.cx1(0, 2) = 1;
  u.cx1(1, 1) = 1;
  u.cx1(2, 0) = 1;
  u.cx1(3, 3) = 1;
  u.cx2 = Eigen::Matrix4cd::Zero();
  u.cx2(0, 1) = 1;
  u.cx2(1, 0) = 1;
  u.cx2(2, 2) = 1;
  u.cx2(3, 3) = 1;
  return u;
}

PulseSchedule recovery_schedule(int block, JumpParity parity,
                                ControlModel model) {
  const int u = 2 * block - 1;
  const int v = 2 * block;
  // CX1 = e^{+i 3pi/4} (W P (x) P^2) exp(+i pi/4 Z_u Z_v) (W (x) P);
  // CX2 swaps the factors around the tensor signs. Gates within a layer are
  // listed in application order, so "W P" becomes [P-rotation, then W].
  PulseSchedule s;
  const bool odd = parity == JumpParity::Odd;
  const int wq = odd ? u : v;  // the qubit carrying the W factors
  const int pq = odd ? v : u;

  s.steps.push_back(PulseStep::layer({w_gate(wq), p_gate(pq)}));
  if (model == ControlModel::XXZ) {
    s.steps.push_back(PulseStep::ising(u, v, -kPi / 4));
  } else {
    s.append(ising_block_xy(u, v));
  }
  s.steps.push_back(
      PulseStep::layer({p_gate(wq), w_gate(wq), p2_gate(pq)}));
  s.global_phase += 3 * kPi / 4;
  return s;
}

QState apply_recovery(const QState& state, const JumpEvent& event,
                      const CodeSpec& code, ControlModel model) {
  if (event.qubit < 1 || event.qubit > code.n_qubits()) {
    throw std::invalid_argument("apply_recovery: jump qubit out of range");
  }
  const int block = (event.qubit + 1) / 2;
  const JumpParity parity =
      event.qubit % 2 == 1 ? JumpParity::Odd : JumpParity::Even;
  const PulseSchedule sched = recovery_schedule(block, parity, model);
  return apply_schedule(sched, state);
}

Matrix RecoveryFrame::xbar(int logical_index, int n_qubits) const {
  return build_term(xbar_terms.at(static_cast<std::size_t>(logical_index - 1)),
                    n_qubits);
}

Matrix RecoveryFrame::zbar(int logical_index, int n_qubits) const {
  return build_term(zbar_terms.at(static_cast<std::size_t>(logical_index - 1)),
                    n_qubits);
}

RecoveryFrame derive_recovery_frame(const CodeSpec& code, int jump_qubit,
                                    ControlModel model) {
  const int n = code.n_qubits();
  if (jump_qubit < 1 || jump_qubit > n) {
    throw std::invalid_argument("derive_recovery_frame: qubit out of range");
  }
  const auto jumps = all_jump_operators(n);
  const Matrix& s_q = jumps[static_cast<std::size_t>(jump_qubit - 1)];

  RecoveryFrame frame;
  frame.jump_qubit = jump_qubit;
  const Eigen::Index cols = code.logical_basis.cols();
  frame.isometry = Matrix::Zero(code.logical_basis.rows(), cols);
  const JumpEvent event{0.0, jump_qubit};
  for (Eigen::Index c = 0; c < cols; ++c) {
    QState v{n, code.logical_basis.col(c)};
    v = {n, s_q * v.amplitudes};
    const double norm = v.norm();
    if (norm < 1e-12) {
      throw std::runtime_error("derive_recovery_frame: code word annihilated "
                               "by jump; code is broken");
    }
    v.amplitudes /= norm;
    v = apply_recovery(v, event, code, model);
    frame.isometry.col(c) = v.amplitudes;
  }
  Matrix gram = frame.isometry.adjoint() * frame.isometry;
  gram -= Matrix::Identity(cols, cols);
  if (gram.cwiseAbs().maxCoeff() > 1e-10) {
    throw std::runtime_error("derive_recovery_frame: images not orthonormal; "
                             "code is broken");
  }

  // Select post-recovery generators from the physical dictionary.
  auto acts_as = [&](const Matrix& op, const Matrix& pauli_small) {
    const Matrix restricted = frame.isometry.adjoint() * op * frame.isometry;
    return (restricted - pauli_small).cwiseAbs().maxCoeff() < 1e-10;
  };
  const int n_logical = code.n_logical();
  const auto dim_small = Eigen::Index{1} << n_logical;
  for (int l = 1; l <= n_logical; ++l) {
    // sigma_x / sigma_z on logical qubit l within the small register
    Matrix sx = Matrix::Zero(dim_small, dim_small);
    Matrix sz = Matrix::Zero(dim_small, dim_small);
    const std::uint64_t mask = std::uint64_t{1} << (n_logical - l);
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim_small); ++b) {
      sx(static_cast<Eigen::Index>(b ^ mask), static_cast<Eigen::Index>(b)) =
          1.0;
      sz(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) =
          (b & mask) ? -1.0 : 1.0;
    }

    bool found_x = false;
    for (int a = 1; a <= code.n_pairs && !found_x; ++a) {
      for (double sign : {1.0, -1.0}) {
        const auto term = HamiltonianTerm::xy(2 * a - 1, 2 * a, sign);
        if (acts_as(build_term(term, n), sx)) {
          frame.xbar_terms.push_back(term);
          found_x = true;
          break;
        }
      }
    }
    bool found_z = false;
    for (int a = 1; a <= code.n_pairs && !found_z; ++a) {
      for (int b = a + 1; b <= code.n_pairs && !found_z; ++b) {
        for (double sign : {1.0, -1.0}) {
          const auto term =
              HamiltonianTerm::ising(2 * a - 1, 2 * b - 1, sign);
          if (acts_as(build_term(term, n), sz)) {
            frame.zbar_terms.push_back(term);
            found_z = true;
            break;
          }
        }
      }
    }
    if (!found_x || !found_z) {
      throw std::runtime_error(
          "derive_recovery_frame: no dictionary generator acts as the "
          "logical Pauli in the recovered frame");
    }
  }
  return frame;
}

double logical_fidelity(const QState& state, const Vector& logical_amplitudes,
                        const Matrix& isometry) {
  if (isometry.cols() != logical_amplitudes.size() ||
      isometry.rows() != state.amplitudes.size()) {
    throw std::invalid_argument("logical_fidelity: dimension mismatch");
  }
  const Vector ideal = isometry * logical_amplitudes;
  const Complex overlap = ideal.dot(state.amplitudes);
  return std::norm(overlap);
}

std::string frame_to_json(const RecoveryFrame& frame) {
  nlohmann::json j;
  j["jump_qubit"] = frame.jump_qubit;
  auto term_json = [](const HamiltonianTerm& t) {
    nlohmann::json tj;
    tj["kind"] = t.kind == TermKind::XY
                     ? "xy"
                     : (t.kind == TermKind::Ising ? "ising" : "local_z");
    tj["sites"] = t.kind == TermKind::LocalZ
                      ? nlohmann::json::array({t.site_a})
                      : nlohmann::json::array({t.site_a, t.site_b});
    tj["coefficient"] = t.coefficient;
    return tj;
  };
  j["xbar"] = nlohmann::json::array();
  j["zbar"] = nlohmann::json::array();
  for (const auto& t : frame.xbar_terms) j["xbar"].push_back(term_json(t));
  for (const auto& t : frame.zbar_terms) j["zbar"].push_back(term_json(t));
  nlohmann::json columns = nlohmann::json::array();
  for (Eigen::Index c = 0; c < frame.isometry.cols(); ++c) {
    nlohmann::json col = nlohmann::json::array();
    for (Eigen::Index r = 0; r < frame.isometry.rows(); ++r) {
      const Complex a = frame.isometry(r, c);
      if (std::abs(a) > 1e-14) {
        col.push_back({static_cast<std::uint64_t>(r), a.real(), a.imag()});
      }
    }
    columns.push_back(std::move(col));
  }
  j["isometry"] = std::move(columns);
  return j.dump(2);
}

}  // namespace djc
