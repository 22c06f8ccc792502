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

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "esred/instances.hpp"
#include "esred/integrals.hpp"
#include "esred/layout.hpp"
#include "esred/lowdin.hpp"

namespace esred {

/// base^exponent kept symbolic; value() may overflow to infinity.
struct PowerOfN {
  double base = 1.0;
  double exponent = 0.0;

  double value() const;
  double log() const;
  bool representable() const;
};

struct ParameterPlan {
  int n = 0;
  double p = 0.0;
  double q = 0.0;
  double a = 0.0;
  double b = 0.0;
  double r = 0.0;
  double g = 0.0;
  PowerOfN alpha;
  PowerOfN beta;
  PowerOfN rho;
  /// Solution of sqrt(f(omega0)) = n^-g on omega >= 2.
  double omega0 = 2.0;
  /// Residuals of the four constraints, each > 0 when strictly satisfied
  /// (the equality constraint reports -|lhs - rhs|).
  std::vector<double> residuals;
  bool feasible = false;

  nlohmann::json to_json() const;
};

/// Throws DomainError unless p > q > 0 and n >= 2.
ParameterPlan plan_parameters(double p, double q, int n = 2);

/// Smallest omega >= 2 with ln sqrt(f(omega)) <= -level, i.e. sqrt(f) = e^-level.
double omega_from_log_level(double level);

/// Inverts rho |t| = (alpha / 4d) sqrt(f(omega)) on omega in [max(2, omega0), 1500].
/// Returns +infinity when t = 0; throws DomainError when out of range.
double solve_omega(double t_target, double alpha, int d, double rho, double omega0 = 2.0);

struct HypothesisCheck {
  std::string condition;
  bool holds = false;
};

enum class BoundStatus { Pass, Fail, HypothesisFalse, Unmeasured };

struct BoundReport {
  std::string family;
  std::string quantity;
  std::vector<HypothesisCheck> hypotheses;
  double bound = 0.0;
  std::optional<double> lower;
  std::optional<double> measured;
  /// Absolute floating-point allowance added to both sides of the comparison.
  double slack = 0.0;

  bool hypotheses_hold() const;
  bool within() const;
  bool satisfied() const { return status() == BoundStatus::Pass; }
  BoundStatus status() const;

  nlohmann::json to_json() const;
};

std::string status_name(BoundStatus s);
nlohmann::json reports_to_json(const std::vector<BoundReport>& reports);
std::string reports_table(const std::vector<BoundReport>& reports);
/// Exit-code semantics: true iff no report is Fail.
bool all_passed(const std::vector<BoundReport>& reports);

BoundReport rounding_error_bound(int n, double alpha, double beta, double omega_min,
                                 double Gamma);
BoundReport offsite_bound(int n, double alpha);
BoundReport class_bound(int n, double alpha, double gamma);
BoundReport hubbard_hypothesis_check(const HubbardInstance& inst, double p, double q);

/// Entrywise numerical allowance for quantities read off eigendecompositions.
inline constexpr double kEntrySlack = 1e-12;

/// One report per orthonormalization inequality, measured on primitive tensors.
std::vector<BoundReport> orthonormalization_bounds(const OrbitalLayout& layout,
                                         const CoefficientTensors& prim,
                                         const OrthoTransform& xf);

/// The diagonal plus every edge block of an n(d+1) x n(d+1) matrix.
Eigen::MatrixXd block_part(const Eigen::MatrixXd& A, const OrbitalLayout& layout);
/// Largest |U - U_block| entry, where U_block keeps entries whose pair
/// indices [a,b] and [c,d] are both diagonal or both inside one edge block.
double max_off_block(const TwoBodyTensor& U, const OrbitalLayout& layout);

}  // namespace esred
