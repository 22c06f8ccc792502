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

#include "esred/heis2hubb.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "esred/error.hpp"
#include "esred/spectra.hpp"

namespace esred {

ReductionCertificate reduce_heisenberg_to_hubbard(const HeisenbergInstance& inst, double u0,
                                                  HoppingSign sign) {
  if (!(u0 > 0.0) || !std::isfinite(u0)) throw ValidationError("u0 must be positive and finite");
  inst.validate();
  const WeightedGraph& g = inst.graph;
  ReductionCertificate cert;
  std::vector<double> t;
  for (const Edge& e : g.edges()) {
    const double mag = std::sqrt(u0 * e.weight / 2.0);
    t.push_back(sign == HoppingSign::Positive ? mag : -mag);
    cert.h_eff.push_back(2.0 * mag * mag / u0);
  }
  cert.hubbard.graph = g.with_weights(t);
  cert.hubbard.u0 = u0;
  cert.hubbard.eta = g.n();
  cert.c_eff = 0.0;
  for (double h : cert.h_eff) cert.c_eff -= h;
  if (inst.p && inst.q) {
    const double n = g.n();
    cert.large_u0_hypothesis = u0 >= std::pow(n, 14.0 + 3.0 * *inst.p + 2.0 * *inst.q);
  }
  return cert;
}

PauliSum heisenberg_qubit_hamiltonian(const HeisenbergInstance& inst) {
  PauliSum h(inst.graph.n());
  for (const Edge& e : inst.graph.edges()) {
    for (char p : {'X', 'Y', 'Z'}) h.add_two(p, e.i - 1, p, e.j - 1, e.weight);
  }
  return h;
}

PauliSum effective_qubit_operator(const ReductionCertificate& cert) {
  const WeightedGraph& g = cert.hubbard.graph;
  PauliSum h(g.n());
  h.add_identity(cert.c_eff);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    PauliSum w = swap_operator(g.n(), g.edges()[k].i - 1, g.edges()[k].j - 1);
    for (const auto& [ops, c] : w.terms()) h.add(ops, cert.h_eff[k] * c);
  }
  return h;
}

EffectiveHamiltonian effective_hamiltonian(const Eigen::MatrixXd& h_pen,
                                           const Eigen::MatrixXd& h_pert, double delta) {
  const long dim = h_pen.rows();
  if (h_pen.cols() != dim || h_pert.rows() != dim || h_pert.cols() != dim) {
    throw ValidationError("penalty and perturbation dimensions differ");
  }
  EffectiveHamiltonian out;
  if (dim == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h_pen);
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double scale = std::max(lam.cwiseAbs().maxCoeff(), 1e-300);
  if (std::abs(lam(0)) > 1e-9 * scale) {
    throw HypothesisError("penalty ground eigenvalue is " + std::to_string(lam(0)) + ", not 0");
  }
  long g = 0;
  while (g < dim && std::abs(lam(g)) <= 1e-9 * scale) ++g;
  if (g < dim && lam(g) < delta) {
    throw HypothesisError("penalty gap " + std::to_string(lam(g)) + " is below delta");
  }
  const double pert_norm = spectral_norm(h_pert);
  if (2.0 * pert_norm > delta) {
    throw HypothesisError("2 ||h_pert|| = " + std::to_string(2.0 * pert_norm) +
                          " exceeds delta");
  }
  const Eigen::MatrixXd P0 = es.eigenvectors().leftCols(g);
  const Eigen::MatrixXd P1 = es.eigenvectors().rightCols(dim - g);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(dim - g);
  for (long k = 0; k < dim - g; ++k) {
    const double l = lam(g + k);
    inv(k) = std::abs(l) > 1e-12 * scale ? 1.0 / l : 0.0;
  }
  const Eigen::MatrixXd V00 = P0.transpose() * h_pert * P0;
  const Eigen::MatrixXd V10 = P1.transpose() * h_pert * P0;
  Eigen::MatrixXd reduced = V00 - V10.transpose() * inv.asDiagonal() * V10;
  reduced = 0.5 * (reduced + reduced.transpose()).eval();
  out.ground_basis = P0;
  out.reduced = reduced;
  out.full = P0 * reduced * P0.transpose();
  return out;
}

EffectiveHamiltonian effective_hamiltonian(const SecondQuantizedHamiltonian& h_pen,
                                           const SecondQuantizedHamiltonian& h_pert, int eta,
                                           double delta) {
  const SectorBasis basis(h_pen.modes(), eta, 4096);
  return effective_hamiltonian(realize_dense(h_pen, basis), realize_dense(h_pert, basis), delta);
}

Eigen::MatrixXd single_occupancy_embedding(int n, const SectorBasis& basis) {
  if (basis.modes() != 2 * n) throw ValidationError("basis does not have 2n modes");
  if (n > 20) throw ResourceError("single-occupancy embedding limited to 20 sites");
  const long q = 1L << n;
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(static_cast<long>(basis.size()), q);
  for (long x = 0; x < q; ++x) {
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) bits |= std::uint64_t{1} << (2 * i + ((x >> i) & 1));
    const long row = basis.index(bits);
    if (row < 0) throw ValidationError("basis lacks a singly occupied state");
    P(row, x) = 1.0;
  }
  return P;
}

}  // namespace esred
