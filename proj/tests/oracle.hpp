// Test-only oracles: independent constructions used to cross-check the
// library. Everything here is built from first principles (explicit kron
// products, bitstring manipulation, 2x2 blocks) and must not call into the
// implementation paths it is checking.
#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix pauli_i() { return Matrix::Identity(2, 2); }

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Matrix lowering() {  // |0><1|
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1;
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// op on 1-based `site`, identities elsewhere, qubit 1 leftmost in the kron
/// chain (most significant bit).
inline Matrix op_at(const Matrix& op, int site, int n) {
  Matrix out = Matrix::Identity(1, 1);
  for (int k = 1; k <= n; ++k) {
    out = kron(out, k == site ? op : pauli_i());
  }
  return out;
}

inline Matrix xy_term(int i, int j, int n) {
  return 0.5 * (op_at(pauli_x(), i, n) * op_at(pauli_x(), j, n) +
                op_at(pauli_y(), i, n) * op_at(pauli_y(), j, n));
}

inline Matrix zz_term(int i, int j, int n) {
  return op_at(pauli_z(), i, n) * op_at(pauli_z(), j, n);
}

/// Applies S_q = |0><1|_q by direct amplitude bookkeeping (no matrices).
inline Vector apply_jump_bitwise(const Vector& amps, int site, int n) {
  Vector out = Vector::Zero(amps.size());
  const std::uint64_t mask = std::uint64_t{1} << (n - site);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(amps.size()); ++b) {
    if (b & mask) {
      out[static_cast<Eigen::Index>(b & ~mask)] +=
          amps[static_cast<Eigen::Index>(b)];
    }
  }
  return out;
}

inline Vector ket(const std::string& bits) {
  std::uint64_t idx = 0;
  for (char c : bits) idx = (idx << 1) | static_cast<std::uint64_t>(c - '0');
  Vector v = Vector::Zero(Eigen::Index{1} << bits.size());
  v[static_cast<Eigen::Index>(idx)] = 1.0;
  return v;
}

/// Brute-force matrix exponential of a (small) Hermitian h: power series
/// with scaling-and-squaring, independent of any eigendecomposition.
inline Matrix expm_series(const Matrix& m) {
  const int s = 10;
  Matrix x = m / std::pow(2.0, s);
  Matrix sum = Matrix::Identity(m.rows(), m.cols());
  Matrix term = Matrix::Identity(m.rows(), m.cols());
  for (int k = 1; k <= 24; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

inline Matrix rot_exp(const Matrix& h, double angle) {
  return expm_series(Complex(0, -1) * angle * h);
}

/// Haar-random SU(2) element.
inline Eigen::Matrix2cd haar_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Matrix2cd m;
  m << Complex(g(rng), g(rng)), Complex(g(rng), g(rng)),
      Complex(g(rng), g(rng)), Complex(g(rng), g(rng));
  const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
  Eigen::Matrix2cd q = qr.householderQ();
  Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 2; ++k) {
    const Complex d = r(k, k) / std::abs(r(k, k));
    q.col(k) *= d;
  }
  q /= std::sqrt(q.determinant());
  return q;
}

/// Random normalized complex vector.
inline Vector random_state(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector v(dim);
  for (Eigen::Index k = 0; k < dim; ++k) v[k] = Complex(g(rng), g(rng));
  return v / v.norm();
}

inline double phase_dist(const Matrix& u, const Matrix& v) {
  const Complex tr = (v.adjoint() * u).trace();
  if (std::abs(tr) < 1e-300) return (u - v).norm();
  return (u - (tr / std::abs(tr)) * v).norm();
}

}  // namespace oracle
