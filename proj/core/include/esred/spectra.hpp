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
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "esred/fockspace.hpp"

namespace esred {

enum class SpectrumMethod { Dense, Iterative };

struct SpectrumReport {
  double ground = 0.0;
  std::vector<double> eigenvalues;  ///< ascending
  std::optional<int> eta;
  long dimension = 0;
  SpectrumMethod method = SpectrumMethod::Dense;
  /// Largest ||H v - lambda v|| over the returned pairs (unit v).
  double residual = 0.0;

  nlohmann::json to_json() const;
};

struct EigenOptions {
  long dense_limit = 4096;
  std::size_t cap = SectorBasis::kDefaultCap;
  std::uint64_t seed = 0;
  double tolerance = 1e-8;
  int krylov = 80;
  int max_restarts = 500;
  /// Forces the Lanczos path regardless of dimension.
  bool force_iterative = false;
};

/// k lowest eigenvalues of a symmetric matrix. Dense solve at or below
/// dense_limit, restarted Lanczos with full reorthogonalization and locking
/// otherwise.
SpectrumReport lowest_eigenvalues(const SparseMatrix& m, int k, const EigenOptions& opts = {});
SpectrumReport lowest_eigenvalues(const Eigen::MatrixXd& m, int k);

SpectrumReport ground_energy(const SecondQuantizedHamiltonian& h, int eta,
                             const EigenOptions& opts = {});
SpectrumReport low_spectrum(const SecondQuantizedHamiltonian& h, int eta, int k,
                            const EigenOptions& opts = {});

/// Largest |eigenvalue| of a symmetric matrix.
double spectral_norm(const SparseMatrix& m, const EigenOptions& opts = {});
double spectral_norm(const Eigen::MatrixXd& m);

/// ||h1 - h2|| on the eta sector, or on the full Fock space when eta is empty.
double spectral_norm_diff(const SecondQuantizedHamiltonian& h1,
                          const SecondQuantizedHamiltonian& h2, std::optional<int> eta,
                          const EigenOptions& opts = {});

/// Every eigenvalue at or below threshold.
SpectrumReport low_spectrum_projection(const SparseMatrix& m, double threshold,
                                       const EigenOptions& opts = {});
SpectrumReport low_spectrum_projection(const SecondQuantizedHamiltonian& h, int eta,
                                       double threshold, const EigenOptions& opts = {});

}  // namespace esred
