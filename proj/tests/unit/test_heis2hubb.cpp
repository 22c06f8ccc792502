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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "esred/error.hpp"
#include "esred/heis2hubb.hpp"
#include "esred/pauli.hpp"
#include "esred/spectra.hpp"

using namespace esred;

namespace {

Eigen::VectorXd eigs(const Eigen::MatrixXd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
}

// Heisenberg matrix from 2x2 Pauli matrices and explicit Kronecker products.
Eigen::MatrixXd heisenberg_oracle(const WeightedGraph& g) {
  using C = std::complex<double>;
  using M = Eigen::MatrixXcd;
  M X(2, 2), Y(2, 2), Z(2, 2);
  X << 0, 1, 1, 0;
  Y << 0, C(0, -1), C(0, 1), 0;
  Z << 1, 0, 0, -1;
  const int n = g.n();
  auto embed = [&](const M& a, int i, const M& b, int j) {
    M out = M::Identity(1, 1);
    for (int q = n - 1; q >= 0; --q) {
      const M f = q == i ? a : q == j ? b : M::Identity(2, 2);
      M next(out.rows() * 2, out.cols() * 2);
      for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * f;
      out = next;
    }
    return out;
  };
  M H = M::Zero(1 << n, 1 << n);
  for (const Edge& e : g.edges()) {
    H += e.weight * (embed(X, e.i - 1, X, e.j - 1) + embed(Y, e.i - 1, Y, e.j - 1) +
                     embed(Z, e.i - 1, Z, e.j - 1));
  }
  return H.real();
}

}  // namespace

TEST(Reduction, FormulaValues) {
  const auto cert = reduce_heisenberg_to_hubbard({graph_from_edges(2, {{1, 2, 2.0}}), {}, {}}, 4.0);
  EXPECT_NEAR(cert.hubbard.graph.edges()[0].weight, 2.0, 1e-15);
  EXPECT_NEAR(cert.h_eff[0], 2.0, 1e-15);
  EXPECT_NEAR(cert.c_eff, -2.0, 1e-15);
  EXPECT_EQ(cert.hubbard.eta, 2);
  const auto c2 = reduce_heisenberg_to_hubbard({path_graph(2), {}, {}}, 100.0, HoppingSign::Negative);
  EXPECT_NEAR(c2.hubbard.graph.edges()[0].weight, -std::sqrt(50.0), 1e-14);
  EXPECT_NEAR(c2.h_eff[0], 1.0, 1e-14);
  EXPECT_NEAR(c2.c_eff, -1.0, 1e-14);
}

TEST(Reduction, LargeU0Flag) {
  const HeisenbergInstance inst{path_graph(2), 1.0, 0.5};
  EXPECT_TRUE(reduce_heisenberg_to_hubbard(inst, std::pow(2.0, 18.5)).large_u0_hypothesis);
  EXPECT_FALSE(reduce_heisenberg_to_hubbard(inst, 1.0).large_u0_hypothesis);
  EXPECT_FALSE(reduce_heisenberg_to_hubbard({path_graph(2), {}, {}}, 1e9).large_u0_hypothesis);
  EXPECT_THROW(reduce_heisenberg_to_hubbard(inst, -1.0), ValidationError);
}

TEST(Heisenberg, SingleEdgeGround) {
  const auto H = heisenberg_qubit_hamiltonian({path_graph(2), {}, {}}).to_matrix();
  EXPECT_NEAR(eigs(H)(0), -3.0, 1e-13);
}

TEST(Heisenberg, MatchesKroneckerOracle) {
  for (const auto& g : {complete_graph(3), path_graph(4, 0.5), cycle_graph(4, 1.5)}) {
    const auto H = heisenberg_qubit_hamiltonian({g, {}, {}}).to_matrix();
    EXPECT_LT((H - heisenberg_oracle(g)).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Pauli, SwapOperator) {
  const auto S = swap_operator(2, 0, 1).to_matrix();
  Eigen::Matrix4d ref;
  ref << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  EXPECT_LT((S - ref).cwiseAbs().maxCoeff(), 1e-15);
  const auto e = eigs(S);
  EXPECT_NEAR(e(0), -1, 1e-15);
  EXPECT_NEAR(e(1), 1, 1e-15);
}

TEST(Effective, SpectrumOfCertificateOperator) {
  const auto cert = reduce_heisenberg_to_hubbard({path_graph(2), {}, {}}, 100.0);
  const auto e = eigs(effective_qubit_operator(cert).to_matrix());
  EXPECT_NEAR(e(0), cert.c_eff - cert.h_eff[0], 1e-13);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(e(k), cert.c_eff + cert.h_eff[0], 1e-13);
}

TEST(Effective, SecondOrderOperatorMatchesCertificate) {
  for (const auto& g : {path_graph(2), path_graph(3), complete_graph(3)}) {
    const auto cert = reduce_heisenberg_to_hubbard({g, {}, {}}, 1e4);
    const int n = g.n();
    SecondQuantizedHamiltonian pen(2 * n), pert(2 * n);
    for (int i = 1; i <= n; ++i) pen.add_density_density(spin_mode(i, 1), spin_mode(i, -1), cert.hubbard.u0);
    for (const Edge& e : cert.hubbard.graph.edges())
      for (int s : {1, -1}) pert.add_hopping(spin_mode(e.i, s), spin_mode(e.j, s), e.weight);
    const auto eff = effective_hamiltonian(pen, pert, n, cert.hubbard.u0 * 0.999);
    const SectorBasis basis(2 * n, n);
    const Eigen::MatrixXd E = single_occupancy_embedding(n, basis);
    const Eigen::MatrixXd onqubits = E.transpose() * eff.full * E;
    const Eigen::MatrixXd expect = effective_qubit_operator(cert).to_matrix();
    EXPECT_LT((onqubits - expect).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_EQ(eff.ground_basis.cols(), 1 << n);
  }
}

TEST(Effective, HypothesisViolations) {
  Eigen::MatrixXd pen = Eigen::MatrixXd::Zero(2, 2), pert = Eigen::MatrixXd::Zero(2, 2);
  pen(1, 1) = 1.0;
  pert(0, 1) = pert(1, 0) = 0.1;
  EXPECT_NO_THROW(effective_hamiltonian(pen, pert, 0.5));
  EXPECT_THROW(effective_hamiltonian(pen, pert, 2.0), HypothesisError);
  pert(0, 1) = pert(1, 0) = 0.4;
  EXPECT_THROW(effective_hamiltonian(pen, pert, 0.5), HypothesisError);
  Eigen::MatrixXd shifted = pen + Eigen::MatrixXd::Identity(2, 2);
  pert(0, 1) = pert(1, 0) = 0.1;
  EXPECT_THROW(effective_hamiltonian(shifted, pert, 0.5), HypothesisError);
}

TEST(Effective, TwoLevelSecondOrder) {
  Eigen::MatrixXd pen = Eigen::MatrixXd::Zero(2, 2), pert = Eigen::MatrixXd::Zero(2, 2);
  pen(1, 1) = 10.0;
  pert(0, 1) = pert(1, 0) = 1.0;
  const auto eff = effective_hamiltonian(pen, pert, 5.0);
  EXPECT_NEAR(eff.reduced(0, 0), -0.1, 1e-14);
}

TEST(Perturbation, DimerLowEnergyGap) {
  const double u0 = 100, t = 1;
  const HubbardInstance h{path_graph(2, t), u0, 2, std::nullopt, std::nullopt};
  const double exact = ground_energy(build_hubbard(h), 2).ground;
  EXPECT_NEAR(exact, (u0 - std::sqrt(u0 * u0 + 16 * t * t)) / 2, 1e-12);
  EXPECT_LE(std::abs(exact - (-4 * t * t / u0)), 10 * std::pow(2 * t, 3) / (u0 * u0));
}

TEST(Embedding, ColumnsAreSinglyOccupied) {
  const SectorBasis basis(6, 3);
  const Eigen::MatrixXd E = single_occupancy_embedding(3, basis);
  EXPECT_EQ(E.cols(), 8);
  EXPECT_TRUE((E.transpose() * E).isIdentity(1e-15));
  EXPECT_THROW(single_occupancy_embedding(3, SectorBasis(4, 2)), ValidationError);
}
