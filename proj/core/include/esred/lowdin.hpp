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

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "esred/integrals.hpp"
#include "esred/layout.hpp"

namespace esred {

struct OrthoTransform {
  Eigen::MatrixXd R;       ///< S^{-1/2}
  Eigen::MatrixXd R_aprx;  ///< (S_block)^{-1/2}
  Eigen::MatrixXd R_neg;   ///< R - R_aprx
  /// Index pairs of the 2x2 edge blocks.
  std::vector<std::array<int, 2>> blocks;
};

/// Closed-form inverse square root of [[1, eps], [eps, 1]]:
/// returns {on-diagonal, off-diagonal}.
std::array<double, 2> block_inv_sqrt(double eps);

/// S^{-1/2} by symmetric eigendecomposition, plus the block approximation
/// over the given 2x2 blocks. Throws HypothesisError unless S is symmetric
/// positive definite with smallest eigenvalue above 1e-10.
OrthoTransform inv_sqrt_overlap(const Eigen::MatrixXd& S,
                                const std::vector<std::array<int, 2>>& blocks = {});

/// Blocks taken from the layout's close pairs.
OrthoTransform inv_sqrt_overlap(const OrbitalLayout& layout, const Eigen::MatrixXd& S);

/// Applies R to every index: T -> R T R, U -> (R x R) U (R x R), S -> R S R.
/// The result keeps the level of the input.
CoefficientTensors transform_tensors(const CoefficientTensors& prim,
                                     const OrthoTransform& xf);
CoefficientTensors transform_tensors(const CoefficientTensors& prim,
                                     const Eigen::MatrixXd& R);

/// Rounded Hamiltonian coefficients, all in closed form.
struct RoundedCoefficients {
  int n = 0;
  int d = 1;
  double alpha = 1.0;
  double beta = 1.0;
  double c_T = 0.0;
  double c_U = 0.0;
  std::vector<std::array<int, 2>> edges;  ///< 0-based endpoints, i < j
  std::vector<double> omega;              ///< per edge
  std::vector<double> t_edge;             ///< per edge hopping
  std::vector<double> u_coul;             ///< per edge, (1/4d^2) u^Coul_alpha(gamma)
  std::vector<double> u_exch;
  std::vector<double> u_other;

  /// u^round(i, j, k, l) with 0-based indices; zero outside B.
  double u(int i, int j, int k, int l) const;
  /// Hopping between 0-based i != j, zero for non-edges.
  double t(int i, int j) const;
  /// Every 4-tuple in B, sorted, without duplicates.
  std::vector<std::array<int, 4>> support() const;
};

/// f(omega) = omega^2 exp(-omega).
double f_omega(double omega);
/// sqrt(f(omega)) for omega >= 0, without the intermediate underflow.
double sqrt_f_omega(double omega);

RoundedCoefficients rounded_coefficients(const OrbitalLayout& layout);

}  // namespace esred
