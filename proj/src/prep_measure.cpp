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

#include "djc/prep_measure.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace djc {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Projects `state` onto the singlet (sign=-1) or triplet (sign=+1)
/// combination of pair (2*pair-1, 2*pair); |s/t> = (|01> +- |10|)/sqrt(2).
Vector pair_st_projection(const QState& state, int pair, double sign) {
  const int n = state.n_qubits;
  const int site_a = 2 * pair - 1;
  const int site_b = 2 * pair;
  const std::uint64_t ma = qubit_mask(site_a, n);
  const std::uint64_t mb = qubit_mask(site_b, n);
  Vector out = Vector::Zero(state.amplitudes.size());
  const double r = 1.0 / std::sqrt(2.0);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(out.size()); ++b) {
    const bool ba = (b & ma) != 0;
    const bool bb = (b & mb) != 0;
    if (ba == bb) continue;  // pair in 00/11: orthogonal to s and t
    // component of (|01> + sign |10>)/sqrt(2) along this configuration
    const double coeff = ba ? sign * r : r;
    // amplitude of the s/t state with the same rest-configuration
    const std::uint64_t b01 = (b & ~ma) | mb;
    const std::uint64_t b10 = (b | ma) & ~mb;
    const Complex st_amp =
        r * state.amplitudes[static_cast<Eigen::Index>(b01)] +
        sign * r * state.amplitudes[static_cast<Eigen::Index>(b10)];
    out[static_cast<Eigen::Index>(b)] = coeff * st_amp;
  }
  return out;
}

}  // namespace

PrepReport prepare_ground_state(const std::vector<double>& pair_couplings,
                                int n_pairs) {
  if (n_pairs < 2 || 2 * n_pairs > kMaxQubits) {
    throw std::invalid_argument("prepare_ground_state: bad n_pairs");
  }
  if (static_cast<int>(pair_couplings.size()) != n_pairs) {
    throw std::invalid_argument("prepare_ground_state: one coupling per pair "
                                "required");
  }
  std::vector<int> signs;
  for (double j : pair_couplings) {
    if (j == 0.0) {
      throw std::invalid_argument("prepare_ground_state: zero coupling "
                                  "leaves the pair degenerate");
    }
    signs.push_back(j > 0 ? 1 : -1);
  }

  const int n = 2 * n_pairs;
  const auto dim = Eigen::Index{1} << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (int i = 1; i <= n_pairs; ++i) {
    h += build_term(HamiltonianTerm::xy(2 * i - 1, 2 * i,
                                        pair_couplings[static_cast<std::size_t>(i - 1)]),
                    n);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("prepare_ground_state: diagonalization failed");
  }

  PrepReport report;
  report.ground_energy = es.eigenvalues()[0];
  report.gap = es.eigenvalues()[1] - es.eigenvalues()[0];
  report.ground_state = {n, es.eigenvectors().col(0)};

  const CodeSpec code = build_code(n_pairs, signs);
  const Vector logical =
      code.logical_basis.adjoint() * report.ground_state.amplitudes;
  report.overlap_with_code_projector = logical.squaredNorm();
  report.in_code_space = report.overlap_with_code_projector >= 1.0 - 1e-10;
  return report;
}

MeasureResult singlet_triplet_measure(const QState& state, int pair,
                                      std::mt19937_64& rng) {
  const int n = state.n_qubits;
  if (pair < 1 || 2 * pair > n) {
    throw std::invalid_argument("singlet_triplet_measure: pair out of range");
  }
  const Vector ps = pair_st_projection(state, pair, -1.0);
  const Vector pt = pair_st_projection(state, pair, +1.0);

  MeasureResult res;
  res.probabilities[0] = ps.squaredNorm();
  res.probabilities[1] = pt.squaredNorm();
  res.probabilities[2] =
      std::max(0.0, 1.0 - res.probabilities[0] - res.probabilities[1]);

  const double u = uniform01(rng);
  if (u < res.probabilities[0]) {
    res.outcome = PairOutcome::Singlet;
    res.collapsed = QState{n, ps}.normalized();
  } else if (u < res.probabilities[0] + res.probabilities[1]) {
    res.outcome = PairOutcome::Triplet;
    res.collapsed = QState{n, pt}.normalized();
  } else {
    res.outcome = PairOutcome::Other;
    Vector rest = state.amplitudes - ps - pt;
    res.collapsed = QState{n, rest}.normalized();
  }
  return res;
}

ReadoutResult encoded_readout(const QState& state, int logical_index,
                              const CodeSpec& code, ControlModel model,
                              std::mt19937_64& rng) {
  if (state.n_qubits != code.n_qubits()) {
    throw std::invalid_argument("encoded_readout: state does not match code");
  }
  Eigen::Matrix2cd w;
  w << 1, 1, 1, -1;
  w /= std::sqrt(2.0);
  const PulseSchedule had = euler_synthesize(w, logical_index, code, model);
  const QState rotated = apply_schedule(had, state);

  MeasureResult m = singlet_triplet_measure(rotated, logical_index, rng);
  ReadoutResult res;
  res.outcome = m.outcome;
  res.collapsed = m.collapsed;
  if (m.outcome != PairOutcome::Other) {
    const int sign = code.pair_signs[static_cast<std::size_t>(logical_index - 1)];
    const bool singlet = m.outcome == PairOutcome::Singlet;
    // (|0_L> + |1_L>)/sqrt(2) is the all-singlet product for J>0 and the
    // all-triplet product for J<0; the Hadamard maps logical 0 there.
    res.bit = (singlet == (sign > 0)) ? 0 : 1;
  }
  return res;
}

}  // namespace djc
