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

#include "esred/bounds.hpp"
#include "esred/error.hpp"
#include "esred/lowdin.hpp"

using namespace esred;

TEST(Plan, WorkedExample) {
  const auto plan = plan_parameters(1.0, 0.5);
  EXPECT_DOUBLE_EQ(plan.a, 114.0);
  EXPECT_NEAR(plan.b, 190.0, 1e-12);
  EXPECT_NEAR(plan.r, 76.0, 1e-12);
  EXPECT_NEAR(plan.g, 26.5, 1e-12);
  EXPECT_TRUE(plan.feasible);
  EXPECT_NEAR(plan.b, 30 + 6 * plan.p + 4 * plan.q + 2 * plan.r, 1e-12);
  EXPECT_NEAR(plan.omega0 / 2 - std::log(plan.omega0), plan.g * std::log(2.0), 1e-9);
  EXPECT_NEAR(plan.alpha.log(), 114 * std::log(2.0), 1e-12);
}

TEST(Plan, GridFeasibilityProperty) {
  for (int i = 1; i <= 30; ++i)
    for (int j = 1; j < i; ++j) {
      const double p = 0.1 * i, q = 0.1 * j;
      const auto plan = plan_parameters(p, q, 3);
      for (double r : plan.residuals) EXPECT_GE(r, -1e-9 * plan.b);
      EXPECT_GT(plan.residuals[2], 0.0);
      EXPECT_GT(plan.residuals[3], 0.0);
      EXPECT_GE(plan.residuals[1], 0.0);
    }
}

TEST(Plan, DomainErrors) {
  EXPECT_THROW(plan_parameters(0.5, 1.0), DomainError);
  EXPECT_THROW(plan_parameters(1.0, 0.0), DomainError);
  EXPECT_THROW(plan_parameters(1.0, 0.5, 1), DomainError);
}

TEST(PowerOfN, Representability) {
  const PowerOfN small{2.0, 10.0}, huge{3.0, 2000.0};
  EXPECT_DOUBLE_EQ(small.value(), 1024.0);
  EXPECT_TRUE(small.representable());
  EXPECT_FALSE(huge.representable());
  EXPECT_NEAR(huge.log(), 2000 * std::log(3.0), 1e-9);
}

TEST(SolveOmega, InvertsForwardMap) {
  const double alpha = 1.0, rho = 0.5;
  const int d = 2;
  for (double w : {4.0, 7.5, 30.0, 400.0}) {
    const double t = (alpha / (4.0 * d)) * sqrt_f_omega(w) / rho;
    EXPECT_NEAR(solve_omega(t, alpha, d, rho), w, 1e-9 * w);
    EXPECT_NEAR(solve_omega(-t, alpha, d, rho), w, 1e-9 * w);
  }
  EXPECT_TRUE(std::isinf(solve_omega(0.0, 1, 1, 1)));
  EXPECT_THROW(solve_omega(100.0, 1, 1, 1), DomainError);
  EXPECT_THROW(solve_omega(1.0, 0, 1, 1), DomainError);
}

TEST(Rounding, CompliantSingleEdgeValue) {
  const auto r = rounding_error_bound(2, 1, 1, 4, 640 * std::pow(2.0, 18));
  EXPECT_TRUE(r.hypotheses_hold());
  const double expect = 3 * 4 * 16 * std::exp(-4.0) + 1.0 / 80 + 8 * 16 * std::exp(-2.0);
  EXPECT_NEAR(r.bound, expect, 1e-12);
  EXPECT_NEAR(r.bound, 20.852, 1e-3);
  EXPECT_EQ(r.status(), BoundStatus::Unmeasured);
}

TEST(Rounding, SmallOmegaIsHypothesisFalse) {
  auto r = rounding_error_bound(2, 1, 1, 3, 640 * std::pow(2.0, 18));
  EXPECT_FALSE(r.hypotheses_hold());
  r.measured = 1e9;
  EXPECT_EQ(r.status(), BoundStatus::HypothesisFalse);
  EXPECT_TRUE(all_passed({r}));
}

TEST(Offsite, Values) {
  EXPECT_DOUBLE_EQ(offsite_bound(2, 1).bound, 120.0);
  EXPECT_DOUBLE_EQ(offsite_bound(2, 0).bound, 0.0);
}

TEST(ClassBound, Values) {
  EXPECT_NEAR(class_bound(2, 1, 1).bound, 56 * std::exp(-0.25), 1e-12);
  EXPECT_NEAR(class_bound(2, 1, 1).bound, 43.61, 1e-2);
  EXPECT_LT(class_bound(2, 1, 60).bound, 1e-300);
}

TEST(Status, PassFailAndSlack) {
  BoundReport r;
  r.bound = 1.0;
  r.measured = 1.0 + 1e-13;
  EXPECT_EQ(r.status(), BoundStatus::Fail);
  r.slack = kEntrySlack;
  EXPECT_EQ(r.status(), BoundStatus::Pass);
  r.lower = 0.5;
  r.measured = 0.4;
  EXPECT_EQ(r.status(), BoundStatus::Fail);
  EXPECT_FALSE(all_passed({r}));
  EXPECT_EQ(status_name(BoundStatus::HypothesisFalse), "hypothesis-false");
  const auto j = reports_to_json({r});
  EXPECT_FALSE(j.at("all_passed").get<bool>());
  EXPECT_NE(reports_table({r}).find("fail"), std::string::npos);
}

TEST(HubbardCheck, Hypotheses) {
  HubbardInstance h{path_graph(2, 1.0), std::pow(2.0, 18.5), 2, 1.0, 0.5};
  auto r = hubbard_hypothesis_check(h, 1.0, 0.5);
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_EQ(r.status(), BoundStatus::Pass);
  h.u0 = 1.0;
  r = hubbard_hypothesis_check(h, 1.0, 0.5);
  EXPECT_EQ(r.status(), BoundStatus::HypothesisFalse);
  h.u0 = std::pow(2.0, 18.5);
  h.graph = path_graph(2, 1e6);
  r = hubbard_hypothesis_check(h, 1.0, 0.5);
  EXPECT_EQ(r.status(), BoundStatus::HypothesisFalse);
}

TEST(BlockBounds, CompliantLayoutPasses) {
  for (const auto& g : {path_graph(2), path_graph(3), complete_graph(3)}) {
    const double Gamma = 640.0 * std::pow(static_cast<double>(g.n()), 18.0);
    const auto L = place_centers(g, std::vector<double>(g.edge_count(), 2.0), Gamma, 1.0, 1.0);
    const auto P = assemble_primitive_tensors(L);
    const auto xf = inv_sqrt_overlap(L, P.S);
    const auto reports = orthonormalization_bounds(L, P, xf);
    EXPECT_GE(reports.size(), 5 * g.edge_count());
    for (const auto& r : reports) EXPECT_EQ(r.status(), BoundStatus::Pass) << r.family << " " << r.quantity;
  }
}

TEST(BlockBounds, BlockHelpers) {
  const auto L = place_centers(path_graph(2), {1.0}, 5.0, 1.0, 1.0);
  const auto P = assemble_primitive_tensors(L);
  const Eigen::MatrixXd B = block_part(P.S, L);
  EXPECT_TRUE(B.isApprox(B.transpose()));
  const auto& pr = L.pairs().front();
  EXPECT_EQ(B(pr.first, pr.second), P.S(pr.first, pr.second));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const bool in_pair = (a == pr.first && b == pr.second) || (a == pr.second && b == pr.first);
      if (a != b && !in_pair) EXPECT_EQ(B(a, b), 0.0);
    }
  EXPECT_GT(max_off_block(P.U, L), 0.0);
}
