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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <nlohmann/json.hpp>

#include "esred/instances.hpp"
#include "esred/integrals.hpp"
#include "esred/lowdin.hpp"

namespace esred {

struct Ladder {
  int mode = 0;
  bool dagger = false;

  auto operator<=>(const Ladder&) const = default;
};

using LadderString = std::vector<Ladder>;

inline Ladder cre(int mode) { return {mode, true}; }
inline Ladder ann(int mode) { return {mode, false}; }

/// Mode of spin orbital (vertex, spin) for a 1-indexed vertex and spin +1/-1.
inline int spin_mode(int vertex, int spin) { return 2 * (vertex - 1) + (spin == -1 ? 1 : 0); }

/// Real fermionic operator stored as normal-ordered ladder strings.
///
/// Creations precede annihilations; within each group modes are descending.
/// Every add() re-normal-orders its term.
class SecondQuantizedHamiltonian {
 public:
  SecondQuantizedHamiltonian() = default;
  explicit SecondQuantizedHamiltonian(int modes, std::optional<int> eta = std::nullopt);

  int modes() const { return modes_; }
  std::optional<int> eta() const { return eta_; }
  void set_eta(std::optional<int> eta) { eta_ = eta; }
  const std::map<LadderString, double>& terms() const { return terms_; }

  void add(const LadderString& term, double coeff);
  void add_constant(double c) { add({}, c); }
  void add_number(int mode, double coeff) { add({cre(mode), ann(mode)}, coeff); }
  /// coeff * (a+_p a_q + a+_q a_p)
  void add_hopping(int p, int q, double coeff);
  /// coeff * n_p n_q
  void add_density_density(int p, int q, double coeff);

  SecondQuantizedHamiltonian& operator+=(const SecondQuantizedHamiltonian& o);
  SecondQuantizedHamiltonian& operator-=(const SecondQuantizedHamiltonian& o);
  SecondQuantizedHamiltonian& operator*=(double s);
  friend SecondQuantizedHamiltonian operator+(SecondQuantizedHamiltonian a,
                                              const SecondQuantizedHamiltonian& b) {
    return a += b;
  }
  friend SecondQuantizedHamiltonian operator-(SecondQuantizedHamiltonian a,
                                              const SecondQuantizedHamiltonian& b) {
    return a -= b;
  }
  friend SecondQuantizedHamiltonian operator*(double s, SecondQuantizedHamiltonian a) {
    return a *= s;
  }

  SecondQuantizedHamiltonian adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;
  bool conserves_number() const;
  /// Drops terms whose magnitude is at most tol.
  void prune(double tol);

  nlohmann::json to_json() const;

 private:
  int modes_ = 0;
  std::optional<int> eta_;
  std::map<LadderString, double> terms_;
};

/// Normal-ordered expansion of coeff * term.
std::map<LadderString, double> normal_order(const LadderString& term, double coeff);

/// Occupation bitstrings of a fixed particle number (or all 2^M when eta is
/// empty), sorted ascending. Bit m is mode m.
class SectorBasis {
 public:
  SectorBasis(int modes, std::optional<int> eta, std::size_t cap = kDefaultCap);

  static constexpr std::size_t kDefaultCap = 2'000'000;

  int modes() const { return modes_; }
  std::optional<int> eta() const { return eta_; }
  std::size_t size() const { return states_.size(); }
  std::uint64_t state(std::size_t k) const { return states_[k]; }
  const std::vector<std::uint64_t>& states() const { return states_; }
  /// Index of a bitstring, or -1 if it is not in the basis.
  long index(std::uint64_t bits) const;

 private:
  int modes_;
  std::optional<int> eta_;
  std::vector<std::uint64_t> states_;
};

/// Applies a ladder string (rightmost first) to a bitstring. Returns the sign
/// (+1/-1) and overwrites bits, or 0 when the state is annihilated.
int apply_ladder(const LadderString& term, std::uint64_t& bits);

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, long>;

struct SectorMatrix {
  SectorBasis basis;
  SparseMatrix matrix;
};

SparseMatrix realize(const SecondQuantizedHamiltonian& h, const SectorBasis& basis);
Eigen::MatrixXd realize_dense(const SecondQuantizedHamiltonian& h, const SectorBasis& basis);

/// Throws ValidationError if eta > modes or the operator does not conserve
/// particle number, ResourceError if the sector exceeds cap.
SectorMatrix sector_restrict(const SecondQuantizedHamiltonian& h, int eta,
                             std::size_t cap = SectorBasis::kDefaultCap);

/// Full 2^M matrix in the Jordan-Wigner qubit basis; capped at 14 modes.
Eigen::MatrixXd jordan_wigner_matrix(const SecondQuantizedHamiltonian& h);

SecondQuantizedHamiltonian build_hubbard(const HubbardInstance& inst);

/// Generic one- plus two-body operator over n spatial orbitals:
///   sum t_ij a+_is a_js + 1/2 sum u_ijkl a+_it a+_js a_ks a_lt.
SecondQuantizedHamiltonian build_es_hamiltonian(const CoefficientTensors& tensors);

SecondQuantizedHamiltonian build_rounded(const RoundedCoefficients& rc);

/// u^Coul_beta(0) / 4.
double main_onsite(double beta);
SecondQuantizedHamiltonian build_main(const RoundedCoefficients& rc);

/// Throws ValidationError unless every edge has the same gamma.
SecondQuantizedHamiltonian build_classical(const OrbitalLayout& layout,
                                           const RoundedCoefficients& rc);
/// H_class from explicit coefficients u1 (onsite) and u2 (edge).
SecondQuantizedHamiltonian build_classical(const WeightedGraph& graph, double u1, double u2);

/// Total number operator on M modes.
SecondQuantizedHamiltonian number_operator(int modes);

/// (row, col, value) lines for the realized sector matrix.
std::string matrix_to_csv(const SparseMatrix& m);

}  // namespace esred
