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

#include "djc/code_space.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace djc {

using nlohmann::json;

std::vector<std::uint64_t> dfs_basis(int n_qubits) {
  if (n_qubits < 2 || n_qubits > kMaxQubits || n_qubits % 2 != 0) {
    throw std::invalid_argument("dfs_basis: n_qubits must be even and <= " +
                                std::to_string(kMaxQubits));
  }
  std::vector<std::uint64_t> out;
  const auto dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (std::popcount(b) == n_qubits / 2) out.push_back(b);
  }
  return out;
}

Matrix dfs_projector(int n_qubits) {
  const auto dim = std::uint64_t{1} << n_qubits;
  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(dim),
                          static_cast<Eigen::Index>(dim));
  for (auto b : dfs_basis(n_qubits)) {
    p(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = 1.0;
  }
  return p;
}

namespace {

// Basis index of the tilde-label product branch, together with its sign.
// labels[i] is the tilde label of pair i+1; |1~>_i carries -sign(J).
struct Branch {
  std::uint64_t index = 0;
  double sign = 1.0;
};

Branch tilde_branch(const std::vector<int>& labels,
                    const std::vector<int>& pair_signs) {
  Branch br;
  const int n_pairs = static_cast<int>(labels.size());
  for (int i = 0; i < n_pairs; ++i) {
    br.index <<= 2;
    if (labels[i] == 0) {
      br.index |= 0b01;  // |0~> = |01>
    } else {
      br.index |= 0b10;  // |1~> = -sign(J) |10>
      br.sign *= -static_cast<double>(pair_signs[i]);
    }
  }
  return br;
}

}  // namespace

CodeSpec build_code(int n_pairs, const std::vector<int>& pair_signs) {
  if (n_pairs < 2) {
    throw std::invalid_argument("build_code: n_pairs must be >= 2");
  }
  if (2 * n_pairs > kMaxQubits) {
    throw std::invalid_argument("build_code: too many physical qubits");
  }
  if (static_cast<int>(pair_signs.size()) != n_pairs) {
    throw std::invalid_argument("build_code: pair_signs must have one entry "
                                "per pair");
  }
  for (int s : pair_signs) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("build_code: pair signs must be +1 or -1");
    }
  }

  CodeSpec code;
  code.n_pairs = n_pairs;
  code.pair_signs = pair_signs;
  const auto dim = std::uint64_t{1} << (2 * n_pairs);
  const auto n_logical = n_pairs - 1;
  const auto logical_dim = std::uint64_t{1} << n_logical;
  code.logical_basis = Matrix::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(logical_dim));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint64_t eps = 0; eps < logical_dim; ++eps) {
    std::vector<int> labels(n_pairs, 0);
    for (int k = 0; k < n_logical; ++k) {
      labels[k] = static_cast<int>((eps >> (n_logical - 1 - k)) & 1u);
    }
    // last pair fixed to |0~>; the conjugate branch flips every label.
    Branch a = tilde_branch(labels, pair_signs);
    for (auto& l : labels) l = 1 - l;
    Branch b = tilde_branch(labels, pair_signs);

    code.logical_basis(static_cast<Eigen::Index>(a.index),
                       static_cast<Eigen::Index>(eps)) += a.sign * inv_sqrt2;
    code.logical_basis(static_cast<Eigen::Index>(b.index),
                       static_cast<Eigen::Index>(eps)) += b.sign * inv_sqrt2;
  }
  return code;
}

QState encode(const CodeSpec& code, const Vector& logical_amplitudes) {
  if (logical_amplitudes.size() != code.logical_dim()) {
    throw std::invalid_argument("encode: amplitude length mismatch");
  }
  if (std::abs(logical_amplitudes.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("encode: amplitudes must be normalized");
  }
  return {code.n_qubits(), code.logical_basis * logical_amplitudes};
}

std::vector<Matrix> all_jump_operators(int n_qubits) {
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(n_qubits));
  const auto dim = std::uint64_t{1} << n_qubits;
  for (int i = 1; i <= n_qubits; ++i) {
    Matrix s = Matrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
    const std::uint64_t mask = qubit_mask(i, n_qubits);
    for (std::uint64_t b = 0; b < dim; ++b) {
      if (b & mask) {
        s(static_cast<Eigen::Index>(b & ~mask),
          static_cast<Eigen::Index>(b)) = 1.0;
      }
    }
    ops.push_back(std::move(s));
  }
  return ops;
}

QeccCheckResult check_qecc(const CodeSpec& code,
                           const std::vector<Matrix>& jump_ops,
                           const std::vector<Vector>& extra_states,
                           double tol) {
  const Eigen::Index dim = code.logical_basis.rows();
  std::vector<Vector> states;
  for (Eigen::Index c = 0; c < code.logical_basis.cols(); ++c) {
    states.push_back(code.logical_basis.col(c));
  }
  for (const auto& v : extra_states) {
    if (v.size() != dim) {
      throw std::invalid_argument("check_qecc: extra state dimension "
                                  "mismatch");
    }
    states.push_back(v);
  }

  QeccCheckResult res;
  res.pass = true;
  for (const auto& s : jump_ops) {
    std::vector<Vector> images;
    images.reserve(states.size());
    for (const auto& v : states) images.push_back(s * v);

    const double lambda = images[0].squaredNorm();
    res.lambdas.push_back(lambda);
    for (std::size_t m = 0; m < states.size(); ++m) {
      for (std::size_t n = 0; n < states.size(); ++n) {
        const Complex g = images[m].dot(images[n]);  // <S psi_m | S psi_n>
        if (m == n) {
          res.max_diag_spread =
              std::max(res.max_diag_spread, std::abs(g.real() - lambda));
        } else {
          res.max_offdiag = std::max(res.max_offdiag, std::abs(g));
        }
      }
    }
  }
  res.pass = res.max_offdiag <= tol && res.max_diag_spread <= tol;
  return res;
}

std::string code_to_json(const CodeSpec& code) {
  json j;
  j["n_pairs"] = code.n_pairs;
  j["pair_signs"] = code.pair_signs;
  json basis = json::array();
  for (Eigen::Index c = 0; c < code.logical_basis.cols(); ++c) {
    json column = json::array();
    for (Eigen::Index r = 0; r < code.logical_basis.rows(); ++r) {
      const Complex a = code.logical_basis(r, c);
      if (a != Complex{0.0, 0.0}) {
        column.push_back({static_cast<std::uint64_t>(r), a.real(), a.imag()});
      }
    }
    basis.push_back(std::move(column));
  }
  j["logical_basis"] = std::move(basis);
  return j.dump(2);
}

CodeSpec code_from_json(const std::string& text) {
  const json j = json::parse(text);
  CodeSpec code;
  code.n_pairs = j.at("n_pairs").get<int>();
  code.pair_signs = j.at("pair_signs").get<std::vector<int>>();
  if (code.n_pairs < 2 || 2 * code.n_pairs > kMaxQubits) {
    throw std::invalid_argument("code_from_json: bad n_pairs");
  }
  if (static_cast<int>(code.pair_signs.size()) != code.n_pairs) {
    throw std::invalid_argument("code_from_json: pair_signs length mismatch");
  }
  const auto dim = std::uint64_t{1} << (2 * code.n_pairs);
  const auto& basis = j.at("logical_basis");
  if (basis.size() != (std::size_t{1} << (code.n_pairs - 1))) {
    throw std::invalid_argument("code_from_json: logical_basis size "
                                "mismatch");
  }
  code.logical_basis = Matrix::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(basis.size()));
  Eigen::Index c = 0;
  for (const auto& column : basis) {
    for (const auto& entry : column) {
      const auto idx = entry.at(0).get<std::uint64_t>();
      if (idx >= dim) {
        throw std::invalid_argument("code_from_json: basis index out of "
                                    "range");
      }
      code.logical_basis(static_cast<Eigen::Index>(idx), c) =
          Complex(entry.at(1).get<double>(), entry.at(2).get<double>());
    }
    ++c;
  }
  return code;
}

}  // namespace djc
