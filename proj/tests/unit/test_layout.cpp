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
#include "esred/layout.hpp"

using namespace esred;

namespace {

OrbitalLayout make(const WeightedGraph& g, double gamma, double Gamma, double alpha = 1.0,
                   double beta = 1.0) {
  return place_centers(g, std::vector<double>(g.edge_count(), gamma), Gamma, alpha, beta);
}

// Pairwise distances by brute force over every center pair.
void count_pairs(const OrbitalLayout& L, double Gamma, int* close, int* far) {
  *close = *far = 0;
  for (int a = 0; a < L.primitive_count(); ++a)
    for (int b = a + 1; b < L.primitive_count(); ++b) {
      if (distance(L.center(a), L.center(b)) >= Gamma) ++*far;
      else ++*close;
    }
}

}  // namespace

TEST(Layout, TriangleCounts) {
  const auto L = make(complete_graph(3), 2.0, 50.0);
  EXPECT_EQ(L.primitive_count(), 9);
  EXPECT_EQ(L.pairs().size(), 3u);
  int close = 0, far = 0;
  count_pairs(L, 50.0, &close, &far);
  EXPECT_EQ(close, 3);
  EXPECT_EQ(far, 33);
  EXPECT_TRUE(verify_layout(L).empty());
}

TEST(Layout, PathDummyCount) {
  const auto L = make(path_graph(3), 2.0, 50.0);
  EXPECT_EQ(L.pairs().size(), 2u);
  EXPECT_EQ(L.dummy_count(), 5);
}

TEST(Layout, PairsJoinEdgeEndpointsAtGamma) {
  const WeightedGraph g = cycle_graph(4);
  const std::vector<double> gammas{1.5, 2.0, 2.5, 3.0};
  const auto L = place_centers(g, gammas, 40.0, 1.0, 2.0);
  for (const ClosePair& p : L.pairs()) {
    const Edge& e = g.edges()[p.edge];
    EXPECT_EQ(L.vertex_of(p.first) + 1, e.i);
    EXPECT_EQ(L.vertex_of(p.second) + 1, e.j);
    EXPECT_NE(L.slot_of(p.first), 0);
    EXPECT_NE(L.slot_of(p.second), 0);
    EXPECT_DOUBLE_EQ(distance(L.center(p.first), L.center(p.second)), gammas[p.edge]);
  }
  EXPECT_DOUBLE_EQ(L.gamma_min(), 1.5);
  EXPECT_DOUBLE_EQ(L.gamma_max(), 3.0);
  EXPECT_DOUBLE_EQ(L.omega_min(), 1.5 * 1.5);
  EXPECT_FALSE(L.uniform_gamma());
}

TEST(Layout, ExponentsAndAmplitudes) {
  const auto L = make(path_graph(3), 2.0, 50.0, 1.0, 3.0);
  double norm = 0.0;
  for (int s = 0; s <= L.d(); ++s) norm += L.amplitude(L.primitive_index(1, s)) * L.amplitude(L.primitive_index(1, s));
  EXPECT_NEAR(norm, 1.0, 1e-15);
  EXPECT_EQ(L.exponent(L.primitive_index(0, 0)), 3.0);
  EXPECT_EQ(L.exponent(L.primitive_index(0, 1)), 1.0);
  EXPECT_DOUBLE_EQ(L.amplitude(0), 1.0 / std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(L.amplitude(1), 1.0 / std::sqrt(4.0));
}

TEST(Layout, ExactCloseDistanceFarFromOrigin) {
  const double Gamma = 640.0 * std::pow(3.0, 18.0);
  const auto L = make(complete_graph(3), 2.0, Gamma);
  for (const ClosePair& p : L.pairs()) {
    EXPECT_EQ(distance(L.center(p.first), L.center(p.second)), 2.0);
  }
  EXPECT_TRUE(verify_layout(L).empty());
}

TEST(Layout, RejectsBadGamma) {
  EXPECT_THROW(make(path_graph(2), 5.0, 4.0), ValidationError);
  EXPECT_THROW(make(path_graph(2), -1.0, 4.0), ValidationError);
  EXPECT_THROW(place_centers(path_graph(3), {1.0}, 10.0, 1.0, 1.0), ValidationError);
}

TEST(Layout, VerifyDetectsMovedCenter) {
  auto L = make(path_graph(3), 2.0, 30.0);
  L.mutable_centers()[L.pairs()[0].second].y += 0.5;
  EXPECT_FALSE(verify_layout(L).empty());
  auto M = make(path_graph(3), 2.0, 30.0);
  M.mutable_centers()[0] = M.center(M.pairs()[0].first);
  EXPECT_FALSE(verify_layout(M).empty());
}

TEST(Layout, JsonRoundTripAndXyz) {
  const auto L = make(cycle_graph(4), 2.5, 30.0, 1.0, 2.0);
  EXPECT_EQ(layout_from_json(layout_to_json(L)), L);
  const std::string xyz = layout_to_xyz(L);
  EXPECT_NE(xyz.find('\n'), std::string::npos);
}

// Property: every random graph produces a layout that passes verification.
TEST(LayoutProperty, RandomGraphsVerify) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng() % 2) edges.push_back({i, j, 1.0});
    const WeightedGraph g = graph_from_edges(n, edges);
    std::uniform_real_distribution<double> gd(0.5, 4.0);
    std::vector<double> gammas;
    for (std::size_t e = 0; e < edges.size(); ++e) gammas.push_back(gd(rng));
    const auto L = place_centers(g, gammas, 20.0, 1.0, 1.0);
    EXPECT_TRUE(verify_layout(L).empty()) << "trial " << trial;
    EXPECT_EQ(static_cast<int>(L.pairs().size()) * 2 + L.dummy_count(), L.primitive_count());
  }
}
