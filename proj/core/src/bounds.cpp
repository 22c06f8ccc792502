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

#include "esred/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "esred/error.hpp"

namespace esred {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(const char* f, double a) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// ln sqrt(f(omega)) = ln omega - omega / 2.
double log_sqrt_f(double omega) { return std::log(omega) - 0.5 * omega; }

double omega_min_of(const OrbitalLayout& layout) {
  return layout.pairs().empty() ? kInf : layout.omega_min();
}

}  // namespace

double PowerOfN::value() const { return std::pow(base, exponent); }
double PowerOfN::log() const { return exponent * std::log(base); }
bool PowerOfN::representable() const { return std::isfinite(value()); }

nlohmann::json ParameterPlan::to_json() const {
  auto power = [](const PowerOfN& x) {
    nlohmann::json j = {{"base", x.base}, {"exponent", x.exponent}, {"log", x.log()}};
    j["value"] = x.representable() ? nlohmann::json(x.value()) : nlohmann::json(nullptr);
    return j;
  };
  return {{"n", n},         {"p", p},
          {"q", q},         {"a", a},
          {"b", b},         {"r", r},
          {"g", g},         {"alpha", power(alpha)},
          {"beta", power(beta)}, {"rho", power(rho)},
          {"omega0", omega0}, {"residuals", residuals},
          {"feasible", feasible}};
}

double omega_from_log_level(double level) {
  // Solve omega / 2 - ln omega = level on omega >= 2, where the left side
  // increases from 1 - ln 2.
  if (level <= 1.0 - std::log(2.0)) return 2.0;
  double lo = 2.0;
  double hi = 4.0;
  while (0.5 * hi - std::log(hi) < level) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (0.5 * mid - std::log(mid) < level) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
  }
  return hi;
}

ParameterPlan plan_parameters(double p, double q, int n) {
  if (!(q > 0.0) || !(p > q)) throw DomainError("parameter plan requires p > q > 0");
  if (n < 2) throw DomainError("parameter plan requires n >= 2");
  ParameterPlan plan;
  plan.n = n;
  plan.p = p;
  plan.q = q;
  plan.a = 18.0 * p + 12.0 * q + 90.0;
  plan.b = 5.0 * plan.a / 3.0;
  plan.r = 2.0 * plan.a / 3.0;
  plan.g = plan.a / 4.0 - p / 2.0 - 1.5;
  plan.alpha = {static_cast<double>(n), plan.a};
  plan.beta = {static_cast<double>(n), plan.b};
  plan.rho = {static_cast<double>(n), plan.r};
  plan.omega0 = omega_from_log_level(plan.g * std::log(static_cast<double>(n)));

  const double g_boxed = -p / 2.0 + plan.a - plan.b / 4.0 - 1.5 - plan.r / 2.0;
  plan.residuals = {
      -std::abs(plan.b - (30.0 + 6.0 * p + 4.0 * q + 2.0 * plan.r)),
      g_boxed - 1.0,
      (plan.r - q) - (4.0 + plan.a / 2.0),
      (plan.a - plan.b / 2.0) - (p + q + 5.0),
  };
  plan.feasible = plan.residuals[0] >= -1e-9 * plan.b && plan.residuals[1] >= 0.0 &&
                  plan.residuals[2] > 0.0 && plan.residuals[3] > 0.0 &&
                  std::abs(g_boxed - plan.g) <= 1e-9 * plan.a;
  if (!plan.feasible) throw DomainError("parameter plan violates its constraints");
  return plan;
}

double solve_omega(double t_target, double alpha, int d, double rho, double omega0) {
  if (!(alpha > 0.0) || d < 1 || !(rho > 0.0)) {
    throw DomainError("solve_omega needs alpha > 0, d >= 1, rho > 0");
  }
  if (t_target == 0.0) return kInf;
  const double lo0 = std::max(2.0, omega0);
  const double hi0 = 1500.0;
  const double level = std::log(rho * std::abs(t_target)) - std::log(alpha / (4.0 * d));
  const double top = log_sqrt_f(lo0);
  if (level > top) {
    if (level - top <= 1e-12) return lo0;
    throw DomainError(fmt("coefficient target exceeds the reachable maximum by a factor %.6g",
                          std::exp(level - top)));
  }
  if (level < log_sqrt_f(hi0)) throw DomainError("coefficient target below the reachable range");
  double lo = lo0;
  double hi = hi0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (log_sqrt_f(mid) > level) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * hi) break;
  }
  const double flo = std::abs(log_sqrt_f(lo) - level);
  const double fhi = std::abs(log_sqrt_f(hi) - level);
  return flo <= fhi ? lo : hi;
}

bool BoundReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const HypothesisCheck& h) { return h.holds; });
}

bool BoundReport::within() const {
  if (!measured) return false;
  const double m = *measured;
  if (std::isnan(m)) return false;
  if (m > bound + slack) return false;
  if (lower && m < *lower - slack) return false;
  return true;
}

BoundStatus BoundReport::status() const {
  if (!hypotheses_hold()) return BoundStatus::HypothesisFalse;
  if (!measured) return BoundStatus::Unmeasured;
  return within() ? BoundStatus::Pass : BoundStatus::Fail;
}

std::string status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::Pass:
      return "pass";
    case BoundStatus::Fail:
      return "fail";
    case BoundStatus::HypothesisFalse:
      return "hypothesis-false";
    case BoundStatus::Unmeasured:
      return "unmeasured";
  }
  return "unknown";
}

nlohmann::json BoundReport::to_json() const {
  nlohmann::json hyp = nlohmann::json::array();
  for (const auto& h : hypotheses) hyp.push_back({{"condition", h.condition}, {"holds", h.holds}});
  nlohmann::json j = {{"family", family},   {"quantity", quantity}, {"hypotheses", hyp},
                      {"bound", bound},   {"slack", slack},       {"status", status_name(status())},
                      {"satisfied", satisfied()}};
  j["lower"] = lower ? nlohmann::json(*lower) : nlohmann::json(nullptr);
  j["measured"] = measured ? nlohmann::json(*measured) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json reports_to_json(const std::vector<BoundReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return {{"reports", arr}, {"all_passed", all_passed(reports)}};
}

std::string reports_table(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  char line[320];
  std::snprintf(line, sizeof line, "%-18s %-44s %14s %14s  %s\n", "family", "quantity", "measured",
                "bound", "status");
  os << line;
  for (const auto& r : reports) {
    char meas[32] = "-";
    if (r.measured) std::snprintf(meas, sizeof meas, "%.6g", *r.measured);
    std::snprintf(line, sizeof line, "%-18s %-44s %14s %14.6g  %s\n", r.family.c_str(),
                  r.quantity.substr(0, 44).c_str(), meas, r.bound,
                  status_name(r.status()).c_str());
    os << line;
  }
  return os.str();
}

bool all_passed(const std::vector<BoundReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const BoundReport& r) { return r.status() == BoundStatus::Fail; });
}

BoundReport rounding_error_bound(int n, double alpha, double beta, double omega_min,
                                 double Gamma) {
  const double nn = n;
  BoundReport r;
  r.family = "rounding";
  r.quantity = "||H_ES - H_round||";
  r.hypotheses = {
      {"beta >= alpha >= 1", beta >= alpha && alpha >= 1.0},
      {"omega_min >= 4", omega_min >= 4.0},
      {"Gamma >= 640 n^18 beta^3", Gamma >= 640.0 * std::pow(nn, 18.0) * std::pow(beta, 3.0)},
      {"alpha Gamma^2 >= 12 ln beta + 80 ln n + 4 omega_min + 24",
       alpha * Gamma * Gamma >=
           12.0 * std::log(beta) + 80.0 * std::log(nn) + 4.0 * omega_min + 24.0},
  };
  const double w = std::isfinite(omega_min) ? omega_min : kInf;
  const double f = std::isfinite(w) ? f_omega(w) : 0.0;
  const double e = std::isfinite(w) ? std::exp(-w / 2.0) : 0.0;
  r.bound = 3.0 * nn * nn * alpha * f + 1.0 / (20.0 * nn * nn) +
            8.0 * std::pow(nn, 4.0) * std::sqrt(alpha) * e;
  return r;
}

BoundReport offsite_bound(int n, double alpha) {
  BoundReport r;
  r.family = "offsite";
  r.quantity = "||H_round - H_main - n c_T||";
  r.bound = 30.0 * n * n * std::sqrt(alpha);
  return r;
}

BoundReport class_bound(int n, double alpha, double gamma) {
  BoundReport r;
  r.family = "classical";
  r.quantity = "||H_round - H_class - n c_T||";
  r.hypotheses = {{"alpha >= 1", alpha >= 1.0}, {"gamma >= 1", gamma >= 1.0}};
  r.bound = 14.0 * alpha * n * n * std::exp(-alpha * gamma * gamma / 4.0);
  return r;
}

BoundReport hubbard_hypothesis_check(const HubbardInstance& inst, double p, double q) {
  const double n = inst.graph.n();
  const double need_u0 = std::pow(n, 14.0 + 3.0 * p + 2.0 * q);
  const double t_cap = std::sqrt(std::pow(n, p) * inst.u0);
  double ratio = need_u0 / inst.u0;
  for (const Edge& e : inst.graph.edges()) ratio = std::max(ratio, std::abs(e.weight) / t_cap);
  bool t_ok = true;
  for (const Edge& e : inst.graph.edges()) t_ok = t_ok && std::abs(e.weight) <= t_cap;
  BoundReport r;
  r.hypotheses = {{"u0 >= n^(14+3p+2q)", inst.u0 >= need_u0},
                  {"|t| <= sqrt(n^p u0) on every edge", t_ok}};
  r.family = "hubbard";
  r.quantity = "max(n^(14+3p+2q)/u0, |t|/sqrt(n^p u0))";
  r.bound = 1.0;
  r.measured = ratio;
  return r;
}

Eigen::MatrixXd block_part(const Eigen::MatrixXd& A, const OrbitalLayout& layout) {
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(A.rows(), A.cols());
  for (Eigen::Index k = 0; k < A.rows(); ++k) B(k, k) = A(k, k);
  for (const ClosePair& p : layout.pairs()) {
    B(p.first, p.second) = A(p.first, p.second);
    B(p.second, p.first) = A(p.second, p.first);
  }
  return B;
}

double max_off_block(const TwoBodyTensor& U, const OrbitalLayout& layout) {
  std::vector<int> block_of(layout.primitive_count(), -1);
  for (std::size_t k = 0; k < layout.pairs().size(); ++k) {
    block_of[layout.pairs()[k].first] = static_cast<int>(k);
    block_of[layout.pairs()[k].second] = static_cast<int>(k);
  }
  double m = 0.0;
  U.for_each_nonzero([&](int a, int b, int c, int d, double v) {
    if (a == c && b == d) return;
    const int k = block_of[a];
    if (k >= 0 && block_of[b] == k && block_of[c] == k && block_of[d] == k) return;
    m = std::max(m, std::abs(v));
  });
  return m;
}

std::vector<BoundReport> orthonormalization_bounds(const OrbitalLayout& layout,
                                         const CoefficientTensors& prim,
                                         const OrthoTransform& xf) {
  if (prim.level != Level::Primitive || prim.size() != layout.primitive_count()) {
    throw ValidationError("orthonormalization bounds need primitive tensors for this layout");
  }
  const double n = layout.n();
  const double alpha = layout.alpha();
  const double beta = layout.beta();
  const double Gamma = layout.Gamma();
  const double aG2 = alpha * Gamma * Gamma;
  const double wmin = omega_min_of(layout);
  // With no close pair the omega_min terms drop out of the r-bound.
  const double wterm = std::isfinite(wmin) ? wmin : 0.0;
  const HypothesisCheck w4{"omega_min >= 4", wmin >= 4.0};
  std::vector<BoundReport> out;

  {
    BoundReport r;
    r.family = "r-bound";
    r.quantity = "max|R_neg|";
    r.hypotheses = {{"alpha Gamma^2 >= 4 ln n + 2 omega_min + 2",
                     aG2 >= 4.0 * std::log(n) + 2.0 * wterm + 2.0},
                    w4};
    r.bound = n * n * std::exp(-(aG2 - wterm) / 2.0);
    r.measured = xf.R_neg.size() ? xf.R_neg.cwiseAbs().maxCoeff() : 0.0;
    r.slack = kEntrySlack;
    out.push_back(r);
  }

  for (const ClosePair& p : layout.pairs()) {
    const Edge& e = layout.graph().edges()[p.edge];
    const std::string tag = "edge " + std::to_string(e.i) + "-" + std::to_string(e.j) + ": ";
    const double eps = prim.S(p.first, p.second);
    const double omega = alpha * p.gamma * p.gamma;
    const double sf = sqrt_f_omega(omega);
    const int idx[2] = {p.first, p.second};

    Eigen::Matrix2d Rb, Tb;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        Rb(r, c) = xf.R_aprx(idx[r], idx[c]);
        Tb(r, c) = prim.T(idx[r], idx[c]);
      }
    }
    const Eigen::Matrix2d RTR = Rb * Tb * Rb;

    auto add = [&](const std::string& q, double lower, double upper, double meas) {
      BoundReport r;
      r.family = "r-approx";
      r.quantity = tag + q;
      r.hypotheses = {w4};
      r.lower = lower;
      r.bound = upper;
      r.measured = meas;
      r.slack = kEntrySlack;
      out.push_back(r);
    };
    add("On(R_aprx)", 1.0, 1.0 + eps * eps, Rb(0, 0));
    add("Off(R_aprx)", -eps / 2.0 - eps * eps * eps, -eps / 2.0, Rb(0, 1));
    const double ta0 = kinetic(alpha, alpha, 0.0);
    add("On(R T R)", ta0, ta0 + alpha * omega * eps * eps, RTR(0, 0));
    add("Off(R T R)", -(alpha / 2.0) * sf * (1.0 + 4.0 * eps * eps), -(alpha / 2.0) * sf,
        RTR(0, 1));

    double worst = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) {
            double v = 0.0;
            for (int a2 = 0; a2 < 2; ++a2)
              for (int b2 = 0; b2 < 2; ++b2)
                for (int c2 = 0; c2 < 2; ++c2)
                  for (int d2 = 0; d2 < 2; ++d2) {
                    v += Rb(a, a2) * Rb(b, b2) * Rb(c, c2) * Rb(d, d2) *
                         prim.U(idx[a2], idx[b2], idx[c2], idx[d2]);
                  }
            worst = std::max(worst, std::abs(v - prim.U(idx[a], idx[b], idx[c], idx[d])));
          }
    BoundReport r;
    r.family = "r-approx";
    r.quantity = tag + "max|RR U RR - U|";
    r.hypotheses = {w4};
    r.bound = 16.0 * std::sqrt(alpha) * eps;
    r.measured = worst;
    r.slack = kEntrySlack;
    out.push_back(r);
  }

  {
    BoundReport r;
    r.family = "r-max";
    r.quantity = "max|R_aprx|";
    r.hypotheses = {w4};
    r.bound = 1.5;
    r.measured = xf.R_aprx.size() ? xf.R_aprx.cwiseAbs().maxCoeff() : 0.0;
    r.slack = kEntrySlack;
    out.push_back(r);
    r.quantity = "max|R|";
    r.hypotheses = {{"alpha Gamma^2 >= 4 ln n + omega_min + 2",
                     aG2 >= 4.0 * std::log(n) + wterm + 2.0},
                    w4};
    r.bound = 2.0;
    r.measured = xf.R.size() ? xf.R.cwiseAbs().maxCoeff() : 0.0;
    out.push_back(r);
  }

  const std::vector<HypothesisCheck> ib = {{"beta >= alpha >= 1", beta >= alpha && alpha >= 1.0},
                                           {"alpha Gamma^2 >= 64", aG2 >= 64.0}};
  auto integral = [&](const std::string& q, double bound, double meas) {
    BoundReport r;
    r.family = "integral-bounds";
    r.quantity = q;
    r.hypotheses = ib;
    r.bound = bound;
    r.measured = meas;
    r.slack = kEntrySlack;
    out.push_back(r);
  };
  const Eigen::MatrixXd Tneg = prim.T - block_part(prim.T, layout);
  integral("t_max", 1.5 * beta, prim.T.size() ? prim.T.cwiseAbs().maxCoeff() : 0.0);
  integral("t_neg_max", beta * std::exp(-aG2 / 4.0), Tneg.size() ? Tneg.cwiseAbs().maxCoeff() : 0.0);
  integral("u_max", 2.0 * beta * beta * beta, prim.U.max_abs());
  integral("u_neg_max", 2.0 * beta * beta * beta / Gamma, max_off_block(prim.U, layout));
  return out;
}

}  // namespace esred
