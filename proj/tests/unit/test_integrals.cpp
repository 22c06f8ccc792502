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
#include <random>

#include "esred/error.hpp"
#include "esred/integrals.hpp"
#include "oracles.hpp"

using namespace esred;

namespace {
constexpr double kPi = oracle::kPi;
}

TEST(Boys, Values) {
  EXPECT_DOUBLE_EQ(boys0(0.0), 1.0);
  EXPECT_NEAR(boys0(1.0), 0.746824, 1e-6);
  EXPECT_NEAR(boys0(1.0), oracle::boys0(1.0), 1e-14);
  EXPECT_NEAR(boys0(1e-8), oracle::boys0(1e-8), 1e-15);
  EXPECT_NEAR(boys0(400.0), 0.5 * std::sqrt(kPi / 400.0), 1e-15);
}

TEST(Overlap, ClosedFormCases) {
  for (double x : {0.0, 0.3, 1.0, 2.5}) EXPECT_NEAR(overlap(1, 1, x), std::exp(-x * x / 2), 1e-15);
  EXPECT_NEAR(overlap(1, 3, 0), 0.80592, 1e-5);
  EXPECT_NEAR(overlap(1, 3, 0), oracle::overlap(1, 3, 0), 1e-12);
  EXPECT_DOUBLE_EQ(overlap(2, 2, 0), 1.0);
}

TEST(Kinetic, ClosedFormCases) {
  EXPECT_DOUBLE_EQ(kinetic(1, 1, 0), 1.5);
  EXPECT_NEAR(kinetic(1, 2, 1), oracle::kinetic(1, 2, 1), 1e-8);
  for (double x : {0.0, 0.7, 1.9}) {
    EXPECT_NEAR(kinetic(1, 1, x), 0.5 * (3 - x * x) * std::exp(-x * x / 2), 1e-14);
  }
}

TEST(Kinetic, MagnitudeBoundProperty) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> z(0.05, 20.0), x(0.0, 10.0);
  for (int k = 0; k < 10000; ++k) {
    const double z1 = z(rng), z2 = z(rng);
    EXPECT_LE(std::abs(kinetic(z1, z2, x(rng))), 1.5 * std::max(z1, z2) * (1 + 1e-14));
  }
}

TEST(Coulomb, ClosedFormCases) {
  for (double z : {0.5, 1.0, 4.0}) EXPECT_NEAR(coulomb_pair(z, 0), 2 * std::sqrt(z / kPi), 1e-15);
  EXPECT_NEAR(coulomb_pair(kPi, 0), 2.0, 1e-15);
  EXPECT_NEAR(coulomb_pair(1, 10), std::erf(10.0) / 10.0, 1e-15);
  EXPECT_NEAR(coulomb_pair(1.3, 0.8), oracle::coulomb_pair(1.3, 0.8), 1e-8);
}

TEST(Coulomb, ExchangeAndOther) {
  EXPECT_NEAR(exchange_pair(1, 2), std::exp(-4.0) * 2 / std::sqrt(kPi), 1e-15);
  EXPECT_NEAR(other_pair(1, 1), std::exp(-0.5) * std::sqrt(4 / kPi) * oracle::boys0(0.25), 1e-14);
}

TEST(Eri, ReducesToPairIntegrals) {
  const Point3 A{0.1, -0.2, 0.3}, B{0.9, 0.4, -0.1};
  const double x = distance(A, B);
  for (double z : {0.7, 1.0, 2.2}) {
    EXPECT_NEAR(eri_four_center(A, B, B, A, z, z, z, z), coulomb_pair(z, x), 1e-14);
    EXPECT_NEAR(eri_four_center(A, A, B, B, z, z, z, z), exchange_pair(z, x), 1e-14);
    EXPECT_NEAR(eri_four_center(A, A, B, A, z, z, z, z), other_pair(z, x), 1e-14);
  }
}

TEST(Eri, EightfoldSymmetryProperty) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> c(-1.0, 1.0), z(0.3, 3.0);
  for (int k = 0; k < 200; ++k) {
    Point3 p[4];
    double e[4];
    for (int i = 0; i < 4; ++i) {
      p[i] = {c(rng), c(rng), c(rng)};
      e[i] = z(rng);
    }
    const double v = eri_four_center(p[0], p[1], p[2], p[3], e[0], e[1], e[2], e[3]);
    // u(a,b,c,d) = (ad|bc): swap a<->d, b<->c, and the two densities.
    EXPECT_NEAR(v, eri_four_center(p[3], p[2], p[1], p[0], e[3], e[2], e[1], e[0]), 1e-13);
    EXPECT_NEAR(v, eri_four_center(p[1], p[0], p[3], p[2], e[1], e[0], e[3], e[2]), 1e-13);
    EXPECT_NEAR(v, eri_four_center(p[0], p[2], p[1], p[3], e[0], e[2], e[1], e[3]), 1e-13);
    EXPECT_GT(v, -1e-15);
  }
}

TEST(Eri, MonteCarloSpotCheck) {
  std::mt19937_64 rng(5);
  const Point3 A{0, 0, 0}, B{0, 0, 2.0};
  const auto est = oracle::eri_monte_carlo(A, A, B, B, 1, 1, 1, 1, 200000, rng);
  EXPECT_LE(std::abs(est.mean - exchange_pair(1, 2)), 4 * est.stderr_);
  const auto far = oracle::eri_monte_carlo(A, B, B, A, 1, 1, 1, 1, 200000, rng);
  EXPECT_LE(std::abs(far.mean - coulomb_pair(1, 2)), 4 * far.stderr_);
}

TEST(TwoBodyTensor, DenseAndSparseAgree) {
  TwoBodyTensor d(5, true), s(5, false);
  d.set_symmetric(0, 1, 2, 3, 1.5);
  s.set_symmetric(0, 1, 2, 3, 1.5);
  d.add(4, 4, 4, 4, 2.0);
  s.add(4, 4, 4, 4, 2.0);
  EXPECT_EQ(d.nonzero_count(), 9u);
  EXPECT_EQ(s.nonzero_count(), 9u);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int e = 0; e < 5; ++e) EXPECT_EQ(d(a, b, c, e), s(a, b, c, e));
  EXPECT_EQ(d(3, 2, 1, 0), 1.5);
  EXPECT_EQ(d(1, 0, 3, 2), 1.5);
  EXPECT_EQ(d(0, 2, 1, 3), 1.5);
  EXPECT_EQ(d.max_abs(), 2.0);
  s.set(4, 4, 4, 4, 0.0);
  EXPECT_EQ(s.nonzero_count(), 8u);
}

namespace {
OrbitalLayout edge_layout(double gamma, double Gamma = 60.0) {
  return place_centers(path_graph(2), {gamma}, Gamma, 1.0, 1.0);
}
}  // namespace

TEST(Assembly, SingleEdgeOverlapStructure) {
  const double gamma = 2.0;
  const auto L = edge_layout(gamma);
  const auto P = assemble_primitive_tensors(L);
  ASSERT_EQ(P.size(), 4);
  int above = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (std::abs(P.S(a, b)) > 1e-12) {
        ++above;
        EXPECT_NEAR(P.S(a, b), std::exp(-gamma * gamma / 2), 1e-15);
      }
  EXPECT_EQ(above, 1);
  for (int a = 0; a < 4; ++a) EXPECT_DOUBLE_EQ(P.T(a, a), 1.5);
  const auto& pr = L.pairs().front();
  EXPECT_NEAR(P.U(pr.first, pr.second, pr.second, pr.first), coulomb_pair(1.0, gamma), 1e-15);
  EXPECT_TRUE(P.V.isZero());
}

TEST(Assembly, ExponentsOnDiagonal) {
  const auto L = place_centers(path_graph(2), {2.0}, 60.0, 1.0, 3.0);
  const auto P = assemble_primitive_tensors(L);
  EXPECT_DOUBLE_EQ(P.T(0, 0), 4.5);
  EXPECT_DOUBLE_EQ(P.T(1, 1), 1.5);
}

TEST(Assembly, FarPairErisAreSmall) {
  const double Gamma = 1e4;
  const auto L = place_centers(complete_graph(3), {2.0, 2.0, 2.0}, Gamma, 1.0, 2.0);
  const auto P = assemble_primitive_tensors(L);
  const double beta = 2.0;
  for (int a = 0; a < L.primitive_count(); ++a)
    for (int b = 0; b < L.primitive_count(); ++b)
      if (a != b && distance(L.center(a), L.center(b)) >= Gamma) {
        EXPECT_LE(P.U(a, b, b, a), 2 * beta * beta * beta / Gamma);
      }
}

TEST(Compose, FarApartCompositeDiagonal) {
  const double alpha = 1.0, beta = 2.0;
  const int d = 2;
  const WeightedGraph g(3, d, {});
  const auto L = place_centers(g, {}, 1e9, alpha, beta);
  const auto C = compose_tensors(assemble_primitive_tensors(L), L);
  EXPECT_EQ(C.level, Level::Composite);
  EXPECT_NEAR(C.T(0, 0), 0.75 * (alpha + beta), 1e-14);
  EXPECT_NEAR(C.U(1, 1, 1, 1), 0.25 * coulomb_pair(beta, 0) + coulomb_pair(alpha, 0) / (4.0 * d), 1e-8);
  EXPECT_NEAR(C.S(0, 0), 1.0, 1e-14);
}

TEST(Serialization, JsonRoundTrip) {
  const auto L = edge_layout(2.0);
  const auto C = compose_tensors(assemble_primitive_tensors(L), L);
  const auto j = tensors_to_json(C, 2);
  const auto back = tensors_from_json(j);
  EXPECT_EQ(back.level, Level::Composite);
  EXPECT_EQ(back.T, C.T);
  EXPECT_EQ(back.U, C.U);
  EXPECT_EQ(j.at("eta").get<int>(), 2);
  EXPECT_THROW(tensors_from_json({{"N", 2}}), ParseError);
}

TEST(Serialization, FcidumpRoundTrip) {
  const auto L = edge_layout(2.0);
  const auto C = compose_tensors(assemble_primitive_tensors(L), L);
  const std::string text = tensors_to_fcidump(C, 2);
  EXPECT_EQ(text.rfind("&FCI NORB=", 0), 0u);
  int eta = 0;
  const auto back = tensors_from_fcidump(text, &eta);
  EXPECT_EQ(eta, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      EXPECT_NEAR(back.T(a, b), C.T(a, b), 1e-15 * (1 + std::abs(C.T(a, b))));
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 2; ++e)
          EXPECT_NEAR(back.U(a, b, c, e), C.U(a, b, c, e), 1e-15 * (1 + std::abs(C.U(a, b, c, e))));
    }
}
