#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "djc/operator_core.hpp"
#include "oracle.hpp"

using namespace djc;
constexpr double kPi = std::numbers::pi;

TEST_CASE("XY term matches the direct Pauli expansion") {
  // frozen 4x4 form: couples |01> and |10| only
  const Matrix t = build_term(HamiltonianTerm::xy(1, 2), 2);
  Matrix expected = Matrix::Zero(4, 4);
  expected(1, 2) = 1.0;
  expected(2, 1) = 1.0;
  CHECK((t - expected).norm() == doctest::Approx(0.0).epsilon(1e-15));

  for (int n : {3, 4}) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const Matrix got = build_term(HamiltonianTerm::xy(i, j, 0.7), n);
        const Matrix want = 0.7 * oracle::xy_term(i, j, n);
        CHECK((got - want).cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }
}

TEST_CASE("Ising and LocalZ terms are the expected diagonals") {
  const Matrix zz = build_term(HamiltonianTerm::ising(1, 2), 2);
  Matrix expected = Matrix::Zero(4, 4);
  expected.diagonal() << 1, -1, -1, 1;
  CHECK((zz - expected).norm() == doctest::Approx(0.0).epsilon(1e-15));

  const Matrix z13 = build_term(HamiltonianTerm::ising(1, 3, -2.0), 4);
  CHECK((z13 + 2.0 * oracle::zz_term(1, 3, 4)).cwiseAbs().maxCoeff() < 1e-14);

  const Matrix z2 = build_term(HamiltonianTerm::local_z(2, 0.5), 3);
  CHECK((z2 - 0.5 * oracle::op_at(oracle::pauli_z(), 2, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("term construction rejects bad sites") {
  CHECK_THROWS_AS(build_term(HamiltonianTerm::xy(1, 5), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_term(HamiltonianTerm::xy(2, 2), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_term(HamiltonianTerm::local_z(0), 4),
                  std::invalid_argument);
}

TEST_CASE("XY and Ising terms commute with the excitation number") {
  const Matrix num = excitation_number_operator(4);
  for (const auto& term :
       {HamiltonianTerm::xy(1, 3), HamiltonianTerm::xy(2, 4),
        HamiltonianTerm::ising(1, 2), HamiltonianTerm::ising(2, 3)}) {
    const Matrix h = build_term(term, 4);
    CHECK((h * num - num * h).norm() < 1e-12);
  }
}

TEST_CASE("exponentiate: identity at angle zero, rotation in the hop block") {
  const Matrix t12 = build_term(HamiltonianTerm::xy(1, 2), 2);
  CHECK((exponentiate(t12, 0.0) - Matrix::Identity(4, 4)).norm() < 1e-14);

  // exp(-i pi/2 T12)|01> = -i|10>
  const QState in = QState::from_bitstring("01");
  const QState out = apply(exponentiate(t12, kPi / 2), in);
  Vector want = Vector::Zero(4);
  want[2] = Complex(0, -1);
  CHECK((out.amplitudes - want).norm() < 1e-12);

  // exp(-i theta Z1Z3)|1010> = e^{-i theta}|1010>
  const Matrix z13 = build_term(HamiltonianTerm::ising(1, 3), 4);
  const double theta = 0.37;
  const QState s = apply(exponentiate(z13, theta),
                         QState::from_bitstring("1010"));
  CHECK(std::abs(s.amplitudes[0b1010] - std::exp(Complex(0, -theta))) <
        1e-12);
}

TEST_CASE("exponentiate agrees with a series expansion and is unitary") {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g;
  Matrix h(8, 8);
  for (Eigen::Index i = 0; i < 8; ++i) {
    for (Eigen::Index j = 0; j < 8; ++j) h(i, j) = Complex(g(rng), g(rng));
  }
  h = (h + Matrix(h.adjoint())).eval();
  const double angle = 0.83;
  const Matrix u = exponentiate(h, angle);
  CHECK(is_unitary(u, 1e-10));
  CHECK((u - oracle::rot_exp(h, angle)).norm() < 1e-9);
}

TEST_CASE("exponentiate rejects non-Hermitian generators") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(exponentiate(m, 1.0), std::invalid_argument);
}

TEST_CASE("group law and inverses") {
  const Matrix h = build_term(HamiltonianTerm::xy(1, 3), 3);
  const double a = 0.71, b = -1.39;
  CHECK((exponentiate(h, a) * exponentiate(h, b) - exponentiate(h, a + b))
            .norm() < 1e-10);
  CHECK((exponentiate(h, a) * exponentiate(h, -a) - Matrix::Identity(8, 8))
            .norm() < 1e-10);
}

TEST_CASE("conjugate_with") {
  const Matrix a = build_term(HamiltonianTerm::xy(1, 2), 2);
  const Matrix b = build_term(HamiltonianTerm::ising(1, 2), 2);
  CHECK((conjugate_with(a, 0.0, b) - b).norm() < 1e-14);
  CHECK((conjugate_with(b, 0.9, b) - b).norm() < 1e-12);  // commuting case
  // matches the direct triple product
  const Matrix want =
      oracle::rot_exp(a, 0.6) * b * oracle::rot_exp(a, -0.6);
  CHECK((conjugate_with(a, 0.6, b) - want).norm() < 1e-9);
}

TEST_CASE("apply: jump operator behavior on basis states") {
  // S1 = |0><1|_1 via a hand-built matrix
  const Matrix s1 = oracle::op_at(oracle::lowering(), 1, 4);
  const QState z = apply(Matrix(s1), QState::from_bitstring("0101"));
  CHECK(z.norm() == doctest::Approx(0.0));

  Vector in = (oracle::ket("1010") + oracle::ket("0101")) / std::sqrt(2.0);
  const QState out = apply(Matrix(s1), QState{4, in});
  CHECK(std::abs(out.amplitudes[0b0010] - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(out.norm() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK_THROWS_AS(apply(Matrix(s1), QState::from_bitstring("01")),
                  std::invalid_argument);
}

TEST_CASE("phase-insensitive distance") {
  const Matrix u = exponentiate(build_term(HamiltonianTerm::xy(1, 2), 2), 0.4);
  const Matrix v = std::exp(Complex(0, 1.234)) * u;
  CHECK(phase_insensitive_distance(u, v) < 1e-12);
  CHECK(phase_insensitive_distance(u, Matrix(Matrix::Identity(4, 4))) > 0.1);
}

TEST_CASE("schedule composition applies first step first") {
  // exp(-i a T12) then exp(-i b Z12): product order must be U_b * U_a
  PulseSchedule s;
  s.steps.push_back(PulseStep::xy(1, 2, 0.3));
  s.steps.push_back(PulseStep::ising(1, 2, 0.9));
  const Matrix t = build_term(HamiltonianTerm::xy(1, 2), 2);
  const Matrix zz = build_term(HamiltonianTerm::ising(1, 2), 2);
  const Matrix want = exponentiate(zz, 0.9) * exponentiate(t, 0.3);
  CHECK((schedule_unitary(s, 2) - want).norm() < 1e-12);

  s.global_phase = 0.77;
  CHECK((schedule_unitary(s, 2) - std::exp(Complex(0, 0.77)) * want).norm() <
        1e-12);

  const QState in = QState::from_bitstring("01");
  const QState via_schedule = apply_schedule(s, in);
  const QState via_matrix = apply(schedule_unitary(s, 2), in);
  CHECK((via_schedule.amplitudes - via_matrix.amplitudes).norm() < 1e-12);
}

TEST_CASE("local layer steps: W and Z rotations") {
  PulseSchedule s;
  s.steps.push_back(PulseStep::layer(
      {{1, LayerGateKind::Hadamard, 0.0}, {2, LayerGateKind::ZRot, 0.25}}));
  const Matrix u = schedule_unitary(s, 2);
  Matrix w(2, 2);
  w << 1, 1, 1, -1;
  w /= std::sqrt(2.0);
  const Matrix rz = oracle::rot_exp(oracle::pauli_z(), 0.25);
  const Matrix want = oracle::kron(w, rz);
  CHECK((u - want).norm() < 1e-9);

  // same-site gates compose in list order: [zrot, W] means W * Rz
  PulseSchedule s2;
  s2.steps.push_back(PulseStep::layer(
      {{1, LayerGateKind::ZRot, 0.4}, {1, LayerGateKind::Hadamard, 0.0}}));
  const Matrix u2 = schedule_unitary(s2, 1);
  const Matrix want2 = w * oracle::rot_exp(oracle::pauli_z(), 0.4);
  CHECK((u2 - want2).norm() < 1e-9);
}

TEST_CASE("property: random schedules preserve the DFS projector") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_int_distribution<int> site(1, 4);
  for (int rep = 0; rep < 20; ++rep) {
    PulseSchedule s;
    for (int k = 0; k < 6; ++k) {
      int i = site(rng), j = site(rng);
      if (i == j) j = (j % 4) + 1;
      if (rng() & 1) {
        s.steps.push_back(PulseStep::xy(i, j, angle(rng)));
      } else {
        s.steps.push_back(PulseStep::ising(i, j, angle(rng)));
      }
    }
    const Matrix u = schedule_unitary(s, 4);
    const Matrix num = excitation_number_operator(4);
    CHECK((u * num - num * u).norm() < 1e-10);
  }
}
