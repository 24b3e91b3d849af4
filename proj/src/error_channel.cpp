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

#include "djc/error_channel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include <unsupported/Eigen/MatrixFunctions>

namespace djc {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// splitmix64; the documented seed-splitting rule for trajectory streams.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Uniform double in [0,1) from raw engine output; avoids distribution
/// implementation differences so runs are reproducible across toolchains.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct SliceOp {
  Matrix unitary;      // ideal slice evolution (reference frame)
  Matrix conditional;  // exp(-i dt H_C), non-unitary
  double dt = 0.0;
  int repeats = 0;
};

struct TimelineItem {
  // instant unitaries (local layers) have slice_index < 0
  int slice_index = -1;
  Matrix instant;
};

/// Precompiled timeline: instants and repeated slices, shared by all
/// trajectories of an ensemble.
struct Timeline {
  std::vector<SliceOp> slices;
  std::vector<TimelineItem> items;
  double total_time = 0.0;
};

Matrix diagonal_decay_part(const std::vector<double>& rates, int n_qubits) {
  const auto dim = std::uint64_t{1} << n_qubits;
  Matrix k = Matrix::Zero(static_cast<Eigen::Index>(dim),
                          static_cast<Eigen::Index>(dim));
  for (std::uint64_t b = 0; b < dim; ++b) {
    double total = 0.0;
    for (int i = 1; i <= n_qubits; ++i) {
      if (qubit_bit(b, i, n_qubits)) total += rates[static_cast<std::size_t>(i - 1)];
    }
    k(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = total;
  }
  return k;
}

Timeline compile_timeline(const TrajectoryConfig& config, int n_qubits) {
  if (static_cast<int>(config.rates.size()) != n_qubits) {
    throw std::invalid_argument("trajectory rates must have one entry per "
                                "qubit");
  }
  double max_rate = 0.0;
  for (double r : config.rates) {
    if (r < 0.0) throw std::invalid_argument("negative decay rate");
    max_rate = std::max(max_rate, r);
  }
  if (config.dt <= 0.0) throw std::invalid_argument("dt must be positive");
  if (config.dt * max_rate >= 0.05) {
    throw std::invalid_argument(
        "dt * max(kappa) must stay below 0.05 for the first-order stepper");
  }
  if (config.tau <= 0.0) throw std::invalid_argument("tau must be positive");

  const Matrix decay = diagonal_decay_part(config.rates, n_qubits);
  Timeline tl;

  auto add_evolution = [&](const Matrix& h, double duration) {
    if (duration <= 0.0) return;
    const int m = std::max(1, static_cast<int>(std::ceil(duration / config.dt)));
    const double dt = duration / m;
    SliceOp op;
    op.dt = dt;
    op.repeats = m;
    op.unitary = exponentiate(h, dt);
    const Matrix generator = -kI * dt * (h - 0.5 * kI * decay);
    op.conditional = generator.exp();
    tl.items.push_back({static_cast<int>(tl.slices.size()), {}});
    tl.slices.push_back(std::move(op));
    tl.total_time += duration;
  };

  for (const auto& step : config.schedule.steps) {
    if (step.kind == StepKind::LocalLayer) {
      tl.items.push_back({-1, step_unitary(step, n_qubits)});
      continue;
    }
    if (step.angle == 0.0) continue;
    const double duration = config.tau * std::abs(step.angle);
    HamiltonianTerm term;
    switch (step.kind) {
      case StepKind::XY:
        term = HamiltonianTerm::xy(step.sites[0], step.sites[1]);
        break;
      case StepKind::Ising:
        term = HamiltonianTerm::ising(step.sites[0], step.sites[1]);
        break;
      case StepKind::LocalZ:
        term = HamiltonianTerm::local_z(step.sites[0]);
        break;
      default:
        break;
    }
    term.coefficient = step.angle / duration;  // exp over duration == pulse
    add_evolution(build_term(term, n_qubits), duration);
  }
  if (config.idle_time > 0.0) {
    const auto dim = std::uint64_t{1} << n_qubits;
    add_evolution(Matrix::Zero(static_cast<Eigen::Index>(dim),
                               static_cast<Eigen::Index>(dim)),
                  config.idle_time);
  }
  return tl;
}

Matrix closest_isometry(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

Matrix jump_operator(int site, int n_qubits) {
  if (site < 1 || site > n_qubits) {
    throw std::invalid_argument("jump_operator: site out of range");
  }
  return all_jump_operators(n_qubits)[static_cast<std::size_t>(site - 1)];
}

Matrix conditional_hamiltonian(const Matrix& h_s,
                               const std::vector<double>& rates) {
  if (!is_hermitian(h_s, 1e-10)) {
    throw std::invalid_argument("conditional_hamiltonian: H_S must be "
                                "Hermitian");
  }
  const int n_qubits = static_cast<int>(std::countr_zero(
      static_cast<std::uint64_t>(h_s.rows())));
  if ((std::uint64_t{1} << n_qubits) != static_cast<std::uint64_t>(h_s.rows())) {
    throw std::invalid_argument("conditional_hamiltonian: dimension is not a "
                                "power of two");
  }
  if (static_cast<int>(rates.size()) != n_qubits) {
    throw std::invalid_argument("conditional_hamiltonian: one rate per qubit "
                                "required");
  }
  for (double r : rates) {
    if (r < 0.0) throw std::invalid_argument("negative decay rate");
  }
  return h_s - 0.5 * kI * diagonal_decay_part(rates, n_qubits);
}

QState dephasing_kick(const QState& state, double phi) {
  QState out = state;
  const auto dim = static_cast<std::uint64_t>(state.amplitudes.size());
  for (std::uint64_t b = 0; b < dim; ++b) {
    // S_z eigenvalue: (#zeros - #ones) = n - 2*popcount
    const int sz = state.n_qubits - 2 * std::popcount(b);
    out.amplitudes[static_cast<Eigen::Index>(b)] *=
        std::exp(-kI * phi * static_cast<double>(sz));
  }
  return out;
}

std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t id) {
  return splitmix64(master_seed + 0x9E3779B97F4A7C15ull * (id + 1));
}

namespace {

struct TrajectoryRunner {
  const TrajectoryConfig& config;
  const CodeSpec* code;
  int n_qubits;
  Timeline timeline;
  Vector initial_amplitudes;
  Vector logical_amplitudes;  // encoded mode
  std::vector<Matrix> jump_ops;

  TrajectoryRunner(const QState& initial, const TrajectoryConfig& cfg,
                   const CodeSpec* code_in)
      : config(cfg), code(code_in), n_qubits(initial.n_qubits) {
    if (code != nullptr && code->n_qubits() != n_qubits) {
      throw std::invalid_argument("initial state size does not match code");
    }
    if (std::abs(initial.norm() - 1.0) > 1e-10) {
      throw std::invalid_argument("initial state must be normalized");
    }
    timeline = compile_timeline(cfg, n_qubits);
    initial_amplitudes = initial.amplitudes;
    if (code != nullptr) {
      logical_amplitudes = code->logical_basis.adjoint() * initial.amplitudes;
      const double in_code = logical_amplitudes.norm();
      if (std::abs(in_code - 1.0) > 1e-8) {
        throw std::invalid_argument(
            "encoded trajectory requires an initial state inside the code "
            "space");
      }
      logical_amplitudes /= in_code;
    }
    jump_ops = all_jump_operators(n_qubits);
  }

  TrajectoryRecord run(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    TrajectoryRecord rec;
    Vector psi = initial_amplitudes;
    // Reference frame: ideal evolution of either the encode isometry
    // (encoded mode) or of the initial vector (bare mode).
    Matrix frame;
    if (code != nullptr) {
      frame = code->logical_basis;
    } else {
      frame = initial_amplitudes;
    }

    double t = 0.0;
    std::size_t next_kick = 0;
    std::size_t next_checkpoint = 0;
    std::size_t fixed_angle_cursor = 0;
    auto sorted_kicks = config.dephasing.times;
    std::sort(sorted_kicks.begin(), sorted_kicks.end());
    auto checkpoints = config.population_checkpoints;
    std::sort(checkpoints.begin(), checkpoints.end());

    auto record_checkpoint = [&]() {
      std::vector<double> pops(static_cast<std::size_t>(n_qubits), 0.0);
      const double n2 = psi.squaredNorm();
      for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(psi.size());
           ++b) {
        const double w = std::norm(psi[static_cast<Eigen::Index>(b)]) / n2;
        if (w == 0.0) continue;
        for (int i = 1; i <= n_qubits; ++i) {
          if (qubit_bit(b, i, n_qubits)) {
            pops[static_cast<std::size_t>(i - 1)] += w;
          }
        }
      }
      rec.populations.push_back(std::move(pops));
    };

    auto at_boundary = [&]() {
      while (next_kick < sorted_kicks.size() &&
             t >= sorted_kicks[next_kick] - 1e-12) {
        double phi;
        if (config.dephasing.mode == DephasingSpec::Mode::Uniform) {
          phi = kTwoPi * uniform01(rng);
        } else {
          if (config.dephasing.angles.empty()) {
            throw std::invalid_argument("fixed dephasing requires angles");
          }
          phi = config.dephasing.angles[fixed_angle_cursor++ %
                                        config.dephasing.angles.size()];
        }
        QState kicked = dephasing_kick({n_qubits, psi}, phi);
        psi = kicked.amplitudes;
        ++next_kick;
      }
      while (next_checkpoint < checkpoints.size() &&
             t >= checkpoints[next_checkpoint] - 1e-12) {
        record_checkpoint();
        ++next_checkpoint;
      }
    };

    at_boundary();
    for (const auto& item : timeline.items) {
      if (item.slice_index < 0) {
        psi = item.instant * psi;
        frame = item.instant * frame;
        continue;
      }
      const SliceOp& op =
          timeline.slices[static_cast<std::size_t>(item.slice_index)];
      for (int rep = 0; rep < op.repeats; ++rep) {
        // jump probabilities on the current normalized state
        double total_p = 0.0;
        std::vector<double> p(static_cast<std::size_t>(n_qubits), 0.0);
        for (int i = 1; i <= n_qubits; ++i) {
          const double rate = config.rates[static_cast<std::size_t>(i - 1)];
          if (rate == 0.0) continue;
          double excited = 0.0;
          const std::uint64_t mask = qubit_mask(i, n_qubits);
          for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(psi.size());
               ++b) {
            if (b & mask) excited += std::norm(psi[static_cast<Eigen::Index>(b)]);
          }
          p[static_cast<std::size_t>(i - 1)] = rate * op.dt * excited;
          total_p += p[static_cast<std::size_t>(i - 1)];
        }

        const double u = uniform01(rng);
        if (u < total_p) {
          // pick the emitting qubit by cumulative probability
          int qubit = n_qubits;
          double acc = 0.0;
          for (int i = 1; i <= n_qubits; ++i) {
            acc += p[static_cast<std::size_t>(i - 1)];
            if (u < acc) {
              qubit = i;
              break;
            }
          }
          psi = jump_ops[static_cast<std::size_t>(qubit - 1)] * psi;
          const double norm = psi.norm();
          if (norm <= 0.0) {
            throw std::runtime_error("jump annihilated the state; "
                                     "inconsistent probabilities");
          }
          psi /= norm;
          rec.events.push_back({t, qubit});
          if (config.recovery_enabled && code != nullptr) {
            const QState recovered = apply_recovery(
                {n_qubits, psi}, rec.events.back(), *code, config.model);
            psi = recovered.amplitudes;
            Matrix m =
                jump_ops[static_cast<std::size_t>(qubit - 1)] * frame;
            const PulseSchedule rs = recovery_schedule(
                (qubit + 1) / 2,
                qubit % 2 == 1 ? JumpParity::Odd : JumpParity::Even,
                config.model);
            m = schedule_unitary(rs, n_qubits) * m;
            frame = closest_isometry(m);
            ++rec.recoveries_applied;
          }
        } else {
          psi = op.conditional * psi;
          psi /= psi.norm();
          frame = op.unitary * frame;
        }
        t += op.dt;
        at_boundary();
      }
    }
    // flush checkpoints at/after the end of the timeline
    while (next_checkpoint < checkpoints.size()) {
      record_checkpoint();
      ++next_checkpoint;
    }

    rec.final_state = {n_qubits, psi};
    if (code != nullptr) {
      rec.logical_fidelity =
          logical_fidelity(rec.final_state, logical_amplitudes, frame);
    } else {
      const Complex overlap = Vector(frame.col(0)).dot(psi);
      rec.logical_fidelity = std::norm(overlap);
    }
    return rec;
  }
};

}  // namespace

TrajectoryRecord run_trajectory(const QState& initial,
                                const TrajectoryConfig& config,
                                const CodeSpec* code) {
  TrajectoryRunner runner(initial, config, code);
  return runner.run(config.seed);
}

EnsembleResult run_ensemble(const QState& initial,
                            const TrajectoryConfig& base_config,
                            const CodeSpec* code, std::uint64_t n_trajectories,
                            std::uint64_t master_seed, int threads) {
  TrajectoryRunner runner(initial, base_config, code);
  const int n_qubits = initial.n_qubits;
  const std::size_t n_checkpoints = base_config.population_checkpoints.size();

  std::vector<EnsembleRow> rows(n_trajectories);
  std::vector<std::vector<std::vector<double>>> pops(n_trajectories);

  int n_threads = threads > 0
                      ? threads
                      : static_cast<int>(std::min<std::uint64_t>(
                            n_trajectories,
                            std::max(1u, std::thread::hardware_concurrency())));
  n_threads = std::max(1, n_threads);

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t id = begin; id < end; ++id) {
      TrajectoryRecord rec = runner.run(trajectory_seed(master_seed, id));
      EnsembleRow row;
      row.trajectory_id = id;
      row.n_jumps = static_cast<int>(rec.events.size());
      row.first_jump_qubit = rec.events.empty() ? 0 : rec.events.front().qubit;
      row.logical_fidelity = rec.logical_fidelity;
      rows[id] = row;
      pops[id] = std::move(rec.populations);
    }
  };

  if (n_threads == 1) {
    work(0, n_trajectories);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk =
        (n_trajectories + static_cast<std::uint64_t>(n_threads) - 1) /
        static_cast<std::uint64_t>(n_threads);
    for (int k = 0; k < n_threads; ++k) {
      const std::uint64_t begin = chunk * static_cast<std::uint64_t>(k);
      const std::uint64_t end =
          std::min(n_trajectories, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  EnsembleResult res;
  res.rows = std::move(rows);
  double sum = 0.0, sum2 = 0.0;
  for (const auto& row : res.rows) {
    sum += row.logical_fidelity;
    sum2 += row.logical_fidelity * row.logical_fidelity;
    const auto nj = static_cast<std::size_t>(row.n_jumps);
    if (nj >= res.jump_histogram.size()) res.jump_histogram.resize(nj + 1, 0);
    ++res.jump_histogram[nj];
  }
  const double n = static_cast<double>(n_trajectories);
  res.mean_fidelity = sum / n;
  const double var =
      std::max(0.0, sum2 / n - res.mean_fidelity * res.mean_fidelity);
  res.stddev_fidelity = std::sqrt(var);
  res.stderr_fidelity = res.stddev_fidelity / std::sqrt(n);

  if (n_checkpoints > 0) {
    res.population_mean.assign(n_checkpoints,
                               std::vector<double>(n_qubits, 0.0));
    res.population_stderr.assign(n_checkpoints,
                                 std::vector<double>(n_qubits, 0.0));
    for (std::size_t c = 0; c < n_checkpoints; ++c) {
      for (int q = 0; q < n_qubits; ++q) {
        double s = 0.0, s2 = 0.0;
        for (std::uint64_t id = 0; id < n_trajectories; ++id) {
          const double v = pops[id][c][static_cast<std::size_t>(q)];
          s += v;
          s2 += v * v;
        }
        const double mean = s / n;
        const double v2 = std::max(0.0, s2 / n - mean * mean);
        res.population_mean[c][static_cast<std::size_t>(q)] = mean;
        res.population_stderr[c][static_cast<std::size_t>(q)] =
            std::sqrt(v2 / n);
      }
    }
  }
  return res;
}

}  // namespace djc
