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
#include <random>
#include <vector>

#include "djc/code_space.hpp"
#include "djc/encoded_logic.hpp"
#include "djc/operator_core.hpp"

namespace djc {

/// Result of cooling-based preparation: the ground state of the pairwise XY
/// Hamiltonian sum_i J_i T_{2i-1,2i}, its energy, the spectral gap above it,
/// and its overlap with the code space of matching sign convention.
struct PrepReport {
  QState ground_state;
  double ground_energy = 0.0;
  double gap = 0.0;
  bool in_code_space = false;
  double overlap_with_code_projector = 0.0;
};

PrepReport prepare_ground_state(const std::vector<double>& pair_couplings,
                                int n_pairs);

enum class PairOutcome { Singlet, Triplet, Other };

struct MeasureResult {
  PairOutcome outcome = PairOutcome::Other;
  QState collapsed;
  std::array<double, 3> probabilities{};  // singlet, triplet, other
};

/// Projective singlet/triplet/other measurement on pair (2*pair-1, 2*pair),
/// sampled by Born rule with the supplied RNG.
MeasureResult singlet_triplet_measure(const QState& state, int pair,
                                      std::mt19937_64& rng);

struct ReadoutResult {
  std::optional<int> bit;  // empty when the pair collapsed outside s/t
  PairOutcome outcome = PairOutcome::Other;
  QState collapsed;
};

/// Reads logical qubit j: applies the compiled encoded Hadamard on j, then
/// measures pair (2j-1, 2j) in the singlet/triplet basis. The outcome maps
/// to a bit through sign(J_{2j-1,2j}): singlet means 0 for J>0 and 1 for
/// J<0.
ReadoutResult encoded_readout(const QState& state, int logical_index,
                              const CodeSpec& code, ControlModel model,
                              std::mt19937_64& rng);

}  // namespace djc
