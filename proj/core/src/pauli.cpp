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

#include "esred/pauli.hpp"

#include <complex>

#include "esred/error.hpp"

namespace esred {

void PauliSum::add(std::string ops, double coeff) {
  if (static_cast<int>(ops.size()) != qubits_) throw ValidationError("Pauli string length mismatch");
  for (char c : ops) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw ValidationError(std::string("unknown Pauli letter '") + c + "'");
    }
  }
  terms_.emplace_back(std::move(ops), coeff);
}

void PauliSum::add_two(char p, int i, char q, int j, double coeff) {
  std::string ops(qubits_, 'I');
  ops.at(i) = p;
  ops.at(j) = q;
  add(std::move(ops), coeff);
}

void PauliSum::add_identity(double coeff) { add(std::string(qubits_, 'I'), coeff); }

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.qubits_ != qubits_) throw ValidationError("qubit count mismatch");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

Eigen::MatrixXd PauliSum::to_matrix() const {
  if (qubits_ > 14) throw ResourceError("dense Pauli matrices limited to 14 qubits");
  const long dim = 1L << qubits_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const std::complex<double> I(0.0, 1.0);
  for (const auto& [ops, coeff] : terms_) {
    for (long col = 0; col < dim; ++col) {
      long row = col;
      std::complex<double> amp = coeff;
      for (int q = 0; q < qubits_; ++q) {
        const bool bit = (col >> q) & 1;
        switch (ops[q]) {
          case 'X':
            row ^= 1L << q;
            break;
          case 'Y':
            row ^= 1L << q;
            amp *= bit ? -I : I;
            break;
          case 'Z':
            if (bit) amp = -amp;
            break;
          default:
            break;
        }
      }
      m(row, col) += amp;
    }
  }
  if (dim > 0 && m.imag().cwiseAbs().maxCoeff() > 1e-14) {
    throw HypothesisError("Pauli sum is not a real matrix");
  }
  return m.real();
}

PauliSum swap_operator(int qubits, int i, int j) {
  PauliSum w(qubits);
  w.add_identity(0.5);
  for (char p : {'X', 'Y', 'Z'}) w.add_two(p, i, p, j, 0.5);
  return w;
}

}  // namespace esred
