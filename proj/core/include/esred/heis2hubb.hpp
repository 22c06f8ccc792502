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

#include <vector>

#include <Eigen/Dense>

#include "esred/fockspace.hpp"
#include "esred/instances.hpp"
#include "esred/pauli.hpp"

namespace esred {

enum class HoppingSign { Positive, Negative };

struct ReductionCertificate {
  HubbardInstance hubbard;
  double c_eff = 0.0;
  std::vector<double> h_eff;  ///< per edge, 2 t^2 / u0
  /// u0 >= n^(14 + 3p + 2q); false when p or q is absent.
  bool large_u0_hypothesis = false;
};

/// t_ij = +-sqrt(u0 kappa_ij / 2) with eta = n; c_eff = -sum h_eff. The
/// low-energy operator is sum h_eff (W_ij - 1).
ReductionCertificate reduce_heisenberg_to_hubbard(const HeisenbergInstance& inst, double u0,
                                                  HoppingSign sign = HoppingSign::Positive);

/// sum kappa_ij (X_i X_j + Y_i Y_j + Z_i Z_j).
PauliSum heisenberg_qubit_hamiltonian(const HeisenbergInstance& inst);

/// c_eff + sum h_eff W_ij on n qubits.
PauliSum effective_qubit_operator(const ReductionCertificate& cert);

struct EffectiveHamiltonian {
  /// Second-order operator embedded in the input space (zero off the ground space).
  Eigen::MatrixXd full;
  /// Orthonormal columns spanning the ground space of h_pen.
  Eigen::MatrixXd ground_basis;
  /// full expressed in ground_basis.
  Eigen::MatrixXd reduced;
};

/// Pi0 V Pi0 - Pi0 V Pi1 (Pi1 H Pi1)^+ Pi1 V Pi0 for H = h_pen, V = h_pert.
/// Throws HypothesisError if the ground eigenvalue of h_pen is not zero, its
/// gap is below delta, or 2 ||h_pert|| > delta.
EffectiveHamiltonian effective_hamiltonian(const Eigen::MatrixXd& h_pen,
                                           const Eigen::MatrixXd& h_pert, double delta);
EffectiveHamiltonian effective_hamiltonian(const SecondQuantizedHamiltonian& h_pen,
                                           const SecondQuantizedHamiltonian& h_pert, int eta,
                                           double delta);

/// Columns are the half-filled, singly occupied sector states; column x puts
/// vertex i in spin down when bit i of x is set, spin up otherwise.
Eigen::MatrixXd single_occupancy_embedding(int n, const SectorBasis& basis);

}  // namespace esred
