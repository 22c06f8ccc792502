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

#include "esred/slater.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "esred/error.hpp"
#include "esred/integrals.hpp"

namespace esred {

void SlaterState::validate() const {
  if (B.rows() > B.cols()) throw ValidationError("more orbitals than modes");
  const Eigen::MatrixXd G = B * B.transpose();
  const double err = (G - Eigen::MatrixXd::Identity(B.rows(), B.rows())).cwiseAbs().maxCoeff();
  if (B.rows() > 0 && err > 1e-10) throw ValidationError("Slater rows are not orthonormal");
}

SlaterState random_slater_state(int eta, int modes, std::mt19937_64& rng) {
  if (eta < 0 || eta > modes) throw ValidationError("eta must lie in [0, modes]");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd G(modes, eta);
  for (int c = 0; c < eta; ++c)
    for (int r = 0; r < modes; ++r) G(r, c) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(modes, eta);
  return {Q.transpose()};
}

double slater_energy(const SecondQuantizedHamiltonian& h, const SlaterState& state) {
  if (state.modes() != h.modes()) throw ValidationError("state and operator mode counts differ");
  state.validate();
  const Eigen::MatrixXd D = state.B.transpose() * state.B;
  double e = 0.0;
  for (const auto& [term, c] : h.terms()) {
    std::vector<int> cr, an;
    for (const Ladder& l : term) (l.dagger ? cr : an).push_back(l.mode);
    if (cr.size() != an.size()) continue;
    const long k = static_cast<long>(cr.size());
    if (k == 0) {
      e += c;
      continue;
    }
    if (k > state.eta()) continue;
    Eigen::MatrixXd M(k, k);
    for (long i = 0; i < k; ++i)
      for (long j = 0; j < k; ++j) M(i, j) = D(cr[i], an[k - 1 - j]);
    e += c * M.determinant();
  }
  return e;
}

ClassicalGround classical_ground(const SecondQuantizedHamiltonian& h, int eta, int max_modes) {
  const int M = h.modes();
  if (M > max_modes) throw ResourceError("classical scan limited to " + std::to_string(max_modes) + " modes");
  if (eta < 0 || eta > M) throw ValidationError("eta must lie in [0, modes]");

  // Diagonal terms reduce to (mask, signed coefficient), grouped by top bit.
  std::vector<std::vector<std::pair<std::uint64_t, double>>> by_top(M);
  double constant = 0.0;
  bool nonnegative = true;
  for (const auto& [term, c] : h.terms()) {
    std::uint64_t cmask = 0, amask = 0;
    for (const Ladder& l : term) (l.dagger ? cmask : amask) |= std::uint64_t{1} << l.mode;
    if (cmask != amask) throw ValidationError("classical_ground needs a diagonal operator");
    if (cmask == 0) {
      constant += c;
      continue;
    }
    std::uint64_t bits = cmask;
    const double v = c * apply_ladder(term, bits);
    if (v < 0.0) nonnegative = false;
    by_top[63 - std::countl_zero(cmask)].push_back({cmask, v});
  }

  ClassicalGround best;
  best.eta = eta;
  best.energy = std::numeric_limits<double>::infinity();
  auto dfs = [&](auto&& self, int next, int left, std::uint64_t chosen, double partial) -> void {
    if (left == 0) {
      if (partial < best.energy) {
        best.energy = partial;
        best.occupation = chosen;
      }
      return;
    }
    if (nonnegative && partial >= best.energy) return;
    for (int m = next; m <= M - left; ++m) {
      const std::uint64_t with = chosen | (std::uint64_t{1} << m);
      double add = 0.0;
      for (const auto& [mask, v] : by_top[m]) {
        if ((mask & with) == mask) add += v;
      }
      self(self, m + 1, left - 1, with, partial + add);
    }
  };
  dfs(dfs, 0, eta, 0, 0.0);
  best.energy += constant;
  return best;
}

nlohmann::json IndependentSetResult::to_json() const {
  return {{"k", k},
          {"has_independent_set", has_independent_set},
          {"energy", energy},
          {"u1", u1},
          {"u2", u2},
          {"occupation", occupation},
          {"vertices", vertices}};
}

IndependentSetResult independent_set_check(const WeightedGraph& graph, int k) {
  const int n = graph.n();
  if (k < 0 || k > 2 * n) throw ValidationError("k must lie in [0, 2n]");
  const double alpha = 1.0;
  const double gamma = 1.0;
  const double beta = 16.0 * std::pow(static_cast<double>(n), 4.0);
  const double d = graph.d();
  IndependentSetResult res;
  res.k = k;
  res.u1 = 0.25 * coulomb_pair(beta, 0.0) + coulomb_pair(alpha, 0.0) / (4.0 * d);
  res.u2 = coulomb_pair(alpha, gamma) / (4.0 * d * d);
  if (!(res.u1 > 4.0 * n * n * res.u2)) {
    throw HypothesisError("onsite repulsion does not dominate the edge coupling");
  }
  const ClassicalGround g = classical_ground(build_classical(graph, res.u1, res.u2), k);
  res.energy = g.energy;
  res.occupation = g.occupation;
  res.has_independent_set = g.energy < res.u2 / 2.0;
  for (int i = 0; i < n; ++i) {
    if ((g.occupation >> (2 * i)) & 3u) res.vertices.push_back(i + 1);
  }
  return res;
}

SlaterState local_search_hartree_fock(const SecondQuantizedHamiltonian& h, int eta,
                                      int restarts, std::uint64_t seed, double* energy) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int M = h.modes();
  SlaterState best_state;
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, restarts); ++r) {
    SlaterState s = random_slater_state(eta, M, rng);
    double e = slater_energy(h, s);
    double step = 0.5;
    for (int it = 0; it < 400 && step > 1e-8; ++it) {
      Eigen::MatrixXd G(eta, M);
      for (int i = 0; i < eta; ++i)
        for (int j = 0; j < M; ++j) G(i, j) = gauss(rng);
      Eigen::HouseholderQR<Eigen::MatrixXd> qr((s.B + step * G).transpose());
      const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(M, eta);
      SlaterState trial{Q.transpose()};
      const double et = slater_energy(h, trial);
      if (et < e) {
        s = trial;
        e = et;
      } else {
        step *= 0.9;
      }
    }
    if (e < best) {
      best = e;
      best_state = s;
    }
  }
  if (energy != nullptr) *energy = best;
  return best_state;
}

}  // namespace esred
