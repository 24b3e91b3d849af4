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

#include "djc/operator_core.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace djc {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_site(int site, int n_qubits, const char* what) {
  if (site < 1 || site > n_qubits) {
    throw std::invalid_argument(std::string(what) + ": site " +
                                std::to_string(site) + " out of range for " +
                                std::to_string(n_qubits) + " qubits");
  }
}

void check_n_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("n_qubits must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n_qubits));
  }
}

}  // namespace

QState QState::normalized() const {
  double n = norm();
  if (n <= 0.0) {
    throw std::domain_error("cannot normalize a zero state");
  }
  return {n_qubits, amplitudes / n};
}

QState QState::basis_state(int n_qubits, std::uint64_t index) {
  check_n_qubits(n_qubits);
  const auto dim = std::uint64_t{1} << n_qubits;
  if (index >= dim) {
    throw std::invalid_argument("basis index out of range");
  }
  QState s{n_qubits, Vector::Zero(static_cast<Eigen::Index>(dim))};
  s.amplitudes[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

QState QState::from_bitstring(const std::string& bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring must contain only 0/1");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return basis_state(static_cast<int>(bits.size()), index);
}

void PulseSchedule::append(const PulseSchedule& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  global_phase += other.global_phase;
}

Matrix build_term(const HamiltonianTerm& term, int n_qubits) {
  check_n_qubits(n_qubits);
  const auto dim = std::uint64_t{1} << n_qubits;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim),
                          static_cast<Eigen::Index>(dim));
  const double c = term.coefficient;

  switch (term.kind) {
    case TermKind::XY: {
      check_site(term.site_a, n_qubits, "XY term");
      check_site(term.site_b, n_qubits, "XY term");
      if (term.site_a == term.site_b) {
        throw std::invalid_argument("XY term requires two distinct sites");
      }
      // T_ij = (X_i X_j + Y_i Y_j)/2 hops one excitation between i and j:
      // it connects b and b^(mask_i|mask_j) whenever bits i, j differ.
      const std::uint64_t mi = qubit_mask(term.site_a, n_qubits);
      const std::uint64_t mj = qubit_mask(term.site_b, n_qubits);
      for (std::uint64_t b = 0; b < dim; ++b) {
        const bool bi = (b & mi) != 0;
        const bool bj = (b & mj) != 0;
        if (bi != bj) {
          m(static_cast<Eigen::Index>(b ^ mi ^ mj),
            static_cast<Eigen::Index>(b)) = c;
        }
      }
      break;
    }
    case TermKind::Ising: {
      check_site(term.site_a, n_qubits, "Ising term");
      check_site(term.site_b, n_qubits, "Ising term");
      if (term.site_a == term.site_b) {
        throw std::invalid_argument("Ising term requires two distinct sites");
      }
      for (std::uint64_t b = 0; b < dim; ++b) {
        const int za = 1 - 2 * qubit_bit(b, term.site_a, n_qubits);
        const int zb = 1 - 2 * qubit_bit(b, term.site_b, n_qubits);
        m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) =
            c * za * zb;
      }
      break;
    }
    case TermKind::LocalZ: {
      check_site(term.site_a, n_qubits, "LocalZ term");
      for (std::uint64_t b = 0; b < dim; ++b) {
        const int za = 1 - 2 * qubit_bit(b, term.site_a, n_qubits);
        m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = c * za;
      }
      break;
    }
  }
  return m;
}

Matrix exponentiate(const Matrix& op, double angle) {
  if (op.rows() != op.cols()) {
    throw std::invalid_argument("exponentiate: matrix must be square");
  }
  if (!is_hermitian(op, 1e-10)) {
    throw std::invalid_argument("exponentiate: generator is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(op);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("exponentiate: eigendecomposition failed");
  }
  const auto& evals = es.eigenvalues();
  const auto& evecs = es.eigenvectors();
  Vector phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    phases[k] = std::exp(-kI * angle * evals[k]);
  }
  return evecs * phases.asDiagonal() * evecs.adjoint();
}

Matrix conjugate_with(const Matrix& a, double phi, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("conjugate_with: dimension mismatch");
  }
  const Matrix u = exponentiate(a, phi);
  return u * b * u.adjoint();
}

QState apply(const Matrix& u, const QState& s) {
  if (u.cols() != s.amplitudes.size()) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  return {s.n_qubits, u * s.amplitudes};
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Matrix g = m.adjoint() * m;
  g -= Matrix::Identity(m.rows(), m.cols());
  return g.cwiseAbs().maxCoeff() <= tol;
}

double phase_insensitive_distance(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("phase_insensitive_distance: shape mismatch");
  }
  const Complex tr = (v.adjoint() * u).trace();
  const double cross = 2.0 * std::abs(tr);
  const double d2 = u.squaredNorm() + v.squaredNorm() - cross;
  return std::sqrt(std::max(0.0, d2));
}

double aligning_phase(const Matrix& u, const Matrix& v) {
  const Complex tr = (v.adjoint() * u).trace();
  if (std::abs(tr) == 0.0) return 0.0;
  return std::arg(tr);
}

Matrix excitation_number_operator(int n_qubits) {
  check_n_qubits(n_qubits);
  const auto dim = std::uint64_t{1} << n_qubits;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim),
                          static_cast<Eigen::Index>(dim));
  for (std::uint64_t b = 0; b < dim; ++b) {
    m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) =
        static_cast<double>(std::popcount(b));
  }
  return m;
}

namespace {

Matrix layer_gate_unitary(const LayerGate& g, int n_qubits) {
  check_site(g.site, n_qubits, "layer gate");
  const auto dim = std::uint64_t{1} << n_qubits;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim),
                          static_cast<Eigen::Index>(dim));
  const std::uint64_t mask = qubit_mask(g.site, n_qubits);
  if (g.gate == LayerGateKind::Hadamard) {
    const double r = 1.0 / std::sqrt(2.0);
    for (std::uint64_t b = 0; b < dim; ++b) {
      const bool one = (b & mask) != 0;
      // W = [[1,1],[1,-1]]/sqrt(2)
      m(static_cast<Eigen::Index>(b ^ mask), static_cast<Eigen::Index>(b)) = r;
      m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) =
          one ? -r : r;
    }
  } else {
    for (std::uint64_t b = 0; b < dim; ++b) {
      const int z = (b & mask) ? -1 : 1;
      m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) =
          std::exp(-kI * g.angle * static_cast<double>(z));
    }
  }
  return m;
}

}  // namespace

Matrix step_unitary(const PulseStep& step, int n_qubits) {
  switch (step.kind) {
    case StepKind::XY:
      return exponentiate(
          build_term(HamiltonianTerm::xy(step.sites[0], step.sites[1]),
                     n_qubits),
          step.angle);
    case StepKind::Ising:
      return exponentiate(
          build_term(HamiltonianTerm::ising(step.sites[0], step.sites[1]),
                     n_qubits),
          step.angle);
    case StepKind::LocalZ:
      return exponentiate(
          build_term(HamiltonianTerm::local_z(step.sites[0]), n_qubits),
          step.angle);
    case StepKind::LocalLayer: {
      const auto dim = std::uint64_t{1} << n_qubits;
      Matrix u = Matrix::Identity(static_cast<Eigen::Index>(dim),
                                  static_cast<Eigen::Index>(dim));
      for (const auto& g : step.gates) {
        u = layer_gate_unitary(g, n_qubits) * u;
      }
      return u;
    }
  }
  throw std::logic_error("unreachable step kind");
}

Matrix schedule_unitary(const PulseSchedule& schedule, int n_qubits) {
  const auto dim = std::uint64_t{1} << n_qubits;
  Matrix u = Matrix::Identity(static_cast<Eigen::Index>(dim),
                              static_cast<Eigen::Index>(dim));
  for (const auto& step : schedule.steps) {
    u = step_unitary(step, n_qubits) * u;
  }
  return std::exp(kI * schedule.global_phase) * u;
}

QState apply_schedule(const PulseSchedule& schedule, const QState& s) {
  QState out = s;
  for (const auto& step : schedule.steps) {
    out = apply(step_unitary(step, s.n_qubits), out);
  }
  out.amplitudes *= std::exp(kI * schedule.global_phase);
  return out;
}

}  // namespace djc
