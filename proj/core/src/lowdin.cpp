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

#include "esred/lowdin.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <Eigen/Eigenvalues>

#include "esred/error.hpp"

namespace esred {

std::array<double, 2> block_inv_sqrt(double eps) {
  const double a = 1.0 / std::sqrt(1.0 + eps);
  const double b = 1.0 / std::sqrt(1.0 - eps);
  return {0.5 * (a + b), 0.5 * (a - b)};
}

OrthoTransform inv_sqrt_overlap(const Eigen::MatrixXd& S,
                                const std::vector<std::array<int, 2>>& blocks) {
  const Eigen::Index n = S.rows();
  if (S.cols() != n) throw ValidationError("overlap matrix must be square");
  if ((S - S.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, S.cwiseAbs().maxCoeff())) {
    throw HypothesisError("overlap matrix is not symmetric");
  }
  OrthoTransform xf;
  xf.blocks = blocks;
  if (n == 0) {
    xf.R = xf.R_aprx = xf.R_neg = Eigen::MatrixXd(0, 0);
    return xf;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  if (es.info() != Eigen::Success) throw HypothesisError("overlap eigendecomposition failed");
  const double lmin = es.eigenvalues().minCoeff();
  if (!(lmin > 1e-10)) {
    throw HypothesisError("overlap matrix is not positive definite (min eigenvalue " +
                          std::to_string(lmin) + ")");
  }
  const Eigen::VectorXd inv = es.eigenvalues().array().rsqrt();
  xf.R = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
  xf.R = 0.5 * (xf.R + xf.R.transpose()).eval();

  xf.R_aprx = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) xf.R_aprx(k, k) = 1.0 / std::sqrt(S(k, k));
  for (const auto& [a, b] : blocks) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw ValidationError("overlap block index out of range");
    }
    if (S(a, a) != 1.0 || S(b, b) != 1.0) {
      throw ValidationError("edge blocks require unit diagonal");
    }
    const auto [on, off] = block_inv_sqrt(S(a, b));
    xf.R_aprx(a, a) = xf.R_aprx(b, b) = on;
    xf.R_aprx(a, b) = xf.R_aprx(b, a) = off;
  }
  xf.R_neg = xf.R - xf.R_aprx;
  return xf;
}

OrthoTransform inv_sqrt_overlap(const OrbitalLayout& layout, const Eigen::MatrixXd& S) {
  std::vector<std::array<int, 2>> blocks;
  for (const ClosePair& p : layout.pairs()) blocks.push_back({p.first, p.second});
  return inv_sqrt_overlap(S, blocks);
}

namespace {

// Applies R to tensor index `axis` of a dense N^4 array.
std::vector<double> transform_axis(const std::vector<double>& in, const Eigen::MatrixXd& R,
                                   int N, int axis) {
  std::vector<double> out(in.size(), 0.0);
  std::size_t stride = 1;
  for (int k = 3; k > axis; --k) stride *= static_cast<std::size_t>(N);
  const std::size_t block = stride * N;
  const std::size_t outer = in.size() / block;
  for (std::size_t o = 0; o < outer; ++o) {
    const std::size_t base = o * block;
    for (int a = 0; a < N; ++a) {
      for (int ap = 0; ap < N; ++ap) {
        const double r = R(ap, a);
        if (r == 0.0) continue;
        const double* src = &in[base + a * stride];
        double* dst = &out[base + ap * stride];
        for (std::size_t s = 0; s < stride; ++s) dst[s] += r * src[s];
      }
    }
  }
  return out;
}

}  // namespace

CoefficientTensors transform_tensors(const CoefficientTensors& prim, const Eigen::MatrixXd& R) {
  const int N = prim.size();
  if (R.rows() != N || R.cols() != N) throw ValidationError("transform dimension mismatch");
  CoefficientTensors out;
  out.level = prim.level;
  out.S = R * prim.S * R;
  out.T = R * prim.T * R;
  out.V = R * prim.V * R;
  out.U = TwoBodyTensor(N, prim.U.dense());

  if (prim.U.dense()) {
    std::vector<double> buf(static_cast<std::size_t>(N) * N * N * N, 0.0);
    prim.U.for_each_nonzero([&](int a, int b, int c, int d, double v) {
      buf[((static_cast<std::size_t>(a) * N + b) * N + c) * N + d] = v;
    });
    for (int axis = 0; axis < 4; ++axis) buf = transform_axis(buf, R, N, axis);
    std::size_t k = 0;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          for (int d = 0; d < N; ++d) out.U.set(a, b, c, d, buf[k++]);
    return out;
  }

  std::map<std::array<int, 4>, double> cur;
  prim.U.for_each_nonzero([&](int a, int b, int c, int d, double v) { cur[{a, b, c, d}] = v; });
  for (int axis = 0; axis < 4; ++axis) {
    std::map<std::array<int, 4>, double> next;
    for (const auto& [key, v] : cur) {
      for (int ap = 0; ap < N; ++ap) {
        const double r = R(ap, key[axis]);
        if (std::abs(r) < kUnderflowFloor) continue;
        auto k2 = key;
        k2[axis] = ap;
        next[k2] += r * v;
      }
    }
    cur = std::move(next);
  }
  for (const auto& [key, v] : cur) out.U.set(key[0], key[1], key[2], key[3], v);
  return out;
}

CoefficientTensors transform_tensors(const CoefficientTensors& prim, const OrthoTransform& xf) {
  return transform_tensors(prim, xf.R);
}

double f_omega(double omega) { return omega * omega * std::exp(-omega); }

double sqrt_f_omega(double omega) { return omega * std::exp(-omega / 2.0); }

double RoundedCoefficients::t(int i, int j) const {
  if (i == j) return c_T;
  const int a = std::min(i, j);
  const int b = std::max(i, j);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e][0] == a && edges[e][1] == b) return t_edge[e];
  }
  return 0.0;
}

double RoundedCoefficients::u(int i, int j, int k, int l) const {
  if (i == j && j == k && k == l) return c_U;
  const int lo = std::min({i, j, k, l});
  const int hi = std::max({i, j, k, l});
  for (int x : {i, j, k, l}) {
    if (x != lo && x != hi) return 0.0;
  }
  std::size_t e = 0;
  while (e < edges.size() && !(edges[e][0] == lo && edges[e][1] == hi)) ++e;
  if (e == edges.size()) return 0.0;
  const int count_lo = (i == lo) + (j == lo) + (k == lo) + (l == lo);
  if (count_lo != 2) return u_other[e];
  if (i == l && j == k) return u_coul[e];
  return u_exch[e];
}

std::vector<std::array<int, 4>> RoundedCoefficients::support() const {
  std::set<std::array<int, 4>> out;
  for (const auto& [a, b] : edges) {
    for (int mask = 0; mask < 16; ++mask) {
      out.insert({mask & 1 ? b : a, mask & 2 ? b : a, mask & 4 ? b : a, mask & 8 ? b : a});
    }
  }
  return {out.begin(), out.end()};
}

RoundedCoefficients rounded_coefficients(const OrbitalLayout& layout) {
  RoundedCoefficients rc;
  rc.n = layout.n();
  rc.d = layout.d();
  rc.alpha = layout.alpha();
  rc.beta = layout.beta();
  const double a = rc.alpha;
  const double b = rc.beta;
  const double d = rc.d;
  rc.c_T = 0.5 * (kinetic(a, a, 0.0) + kinetic(b, b, 0.0));
  rc.c_U = 0.25 * coulomb_pair(b, 0.0) + coulomb_pair(a, 0.0) / (4.0 * d);
  const auto& graph_edges = layout.graph().edges();
  for (const ClosePair& p : layout.pairs()) {
    const Edge& e = graph_edges[p.edge];
    const double omega = a * p.gamma * p.gamma;
    rc.edges.push_back({e.i - 1, e.j - 1});
    rc.omega.push_back(omega);
    rc.t_edge.push_back(-(a / (4.0 * d)) * sqrt_f_omega(omega));
    rc.u_coul.push_back(coulomb_pair(a, p.gamma) / (4.0 * d * d));
    rc.u_exch.push_back(exchange_pair(a, p.gamma) / (4.0 * d * d));
    rc.u_other.push_back(other_pair(a, p.gamma) / (4.0 * d * d));
  }
  return rc;
}

}  // namespace esred
