// Copyright 2026 The esred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "esred/fockspace.hpp"
#include "esred/instances.hpp"

namespace esred {

/// eta x M coefficient matrix; row k is orbital b_k = sum_m B(k, m) a_m.
struct SlaterState {
  Eigen::MatrixXd B;

  int eta() const { return static_cast<int>(B.rows()); }
  int modes() const { return static_cast<int>(B.cols()); }
  /// Throws ValidationError unless B B^T = I to 1e-10.
  void validate() const;
};

/// Uniformly random orthonormal rows (QR of a Gaussian matrix).
SlaterState random_slater_state(int eta, int modes, std::mt19937_64& rng);

/// <SD(B)| h |SD(B)> by Wick contraction with D = B^T B.
double slater_energy(const SecondQuantizedHamiltonian& h, const SlaterState& state);

struct ClassicalGround {
  double energy = 0.0;
  std::uint64_t occupation = 0;
  int eta = 0;
};

/// Minimum over weight-eta bitstrings of a diagonal operator. Depth-first
/// enumeration, pruned when every diagonal coefficient is nonnegative.
/// Throws ValidationError for a non-diagonal operator and ResourceError above
/// max_modes.
ClassicalGround classical_ground(const SecondQuantizedHamiltonian& h, int eta,
                                 int max_modes = 30);

struct IndependentSetResult {
  int k = 0;
  bool has_independent_set = false;
  double energy = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  std::uint64_t occupation = 0;
  /// 1-indexed vertices occupied by the witness state.
  std::vector<int> vertices;

  nlohmann::json to_json() const;
};

/// Decides whether graph has an independent set of size k from the ground
/// energy of the classical Hamiltonian with alpha = gamma = 1, beta = 16 n^4.
IndependentSetResult independent_set_check(const WeightedGraph& graph, int k);

/// Random-restart local search over Slater determinants; demonstration only.
SlaterState local_search_hartree_fock(const SecondQuantizedHamiltonian& h, int eta,
                                      int restarts, std::uint64_t seed, double* energy);

}  // namespace esred
