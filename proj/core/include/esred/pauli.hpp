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

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace esred {

/// Real linear combination of Pauli strings on a fixed number of qubits.
/// Strings are written qubit 0 first ("XZI" = X_0 Z_1), and qubit q is bit q
/// of the basis-state index.
class PauliSum {
 public:
  explicit PauliSum(int qubits) : qubits_(qubits) {}

  int qubits() const { return qubits_; }
  const std::vector<std::pair<std::string, double>>& terms() const { return terms_; }

  void add(std::string ops, double coeff);
  /// coeff * P_i Q_j on two qubits (0-based).
  void add_two(char p, int i, char q, int j, double coeff);
  void add_identity(double coeff);

  PauliSum& operator+=(const PauliSum& other);

  /// Dense real matrix; throws if an imaginary part above 1e-14 survives.
  Eigen::MatrixXd to_matrix() const;

 private:
  int qubits_;
  std::vector<std::pair<std::string, double>> terms_;
};

/// (II + XX + YY + ZZ)/2 on qubits i, j: the swap of the two qubits.
PauliSum swap_operator(int qubits, int i, int j);

}  // namespace esred
