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

// Independent numerical oracles used by the unit and acceptance tests.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "esred/layout.hpp"

namespace esred::oracle {

inline constexpr double kPi = 3.14159265358979323846;

template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-13) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, tol);
}

inline double boys0(double x) {
  return integrate([x](double t) { return std::exp(-x * t * t); }, 0.0, 1.0);
}

/// Normalized 1D Gaussian factor and its derivative.
inline double g1(double z, double c, double t) {
  return std::pow(2.0 * z / kPi, 0.25) * std::exp(-z * (t - c) * (t - c));
}
inline double dg1(double z, double c, double t) { return -2.0 * z * (t - c) * g1(z, c, t); }

inline double axis_overlap(double z1, double c1, double z2, double c2) {
  const double w = 14.0 / std::sqrt(std::min(z1, z2));
  const double lo = std::min(c1, c2) - w, hi = std::max(c1, c2) + w;
  return integrate([&](double t) { return g1(z1, c1, t) * g1(z2, c2, t); }, lo, hi);
}

inline double axis_gradient(double z1, double c1, double z2, double c2) {
  const double w = 14.0 / std::sqrt(std::min(z1, z2));
  const double lo = std::min(c1, c2) - w, hi = std::max(c1, c2) + w;
  return integrate([&](double t) { return dg1(z1, c1, t) * dg1(z2, c2, t); }, lo, hi);
}

/// Centers at the origin and at (x, 0, 0).
inline double overlap(double z1, double z2, double x) {
  const double s0 = axis_overlap(z1, 0.0, z2, 0.0);
  return axis_overlap(z1, 0.0, z2, x) * s0 * s0;
}

/// (1/2) int grad a . grad b, summed over axes.
inline double kinetic(double z1, double z2, double x) {
  const double sx = axis_overlap(z1, 0.0, z2, x);
  const double s0 = axis_overlap(z1, 0.0, z2, 0.0);
  const double gx = axis_gradient(z1, 0.0, z2, x);
  const double g0 = axis_gradient(z1, 0.0, z2, 0.0);
  return 0.5 * (gx * s0 * s0 + 2.0 * sx * g0 * s0);
}

/// Coulomb energy of two normalized Gaussian densities |xi_z|^2 a distance x
/// apart: the potential of one is erf(sqrt(2z) R)/R; its spherical average
/// about the other center is integrated against the radial density.
inline double coulomb_pair(double z, double x) {
  const double a = 2.0 * z;
  auto phi = [a](double R) {
    if (R < 1e-7) return 2.0 * std::sqrt(a / kPi) * (1.0 - a * R * R / 3.0);
    return std::erf(std::sqrt(a) * R) / R;
  };
  auto shell = [&](double r) {
    const double avg = 0.5 * integrate(
        [&](double mu) { return phi(std::sqrt(std::max(0.0, r * r + x * x - 2.0 * r * x * mu))); },
        -1.0, 1.0, 1e-14);
    const double rho = std::pow(a / kPi, 1.5) * std::exp(-a * r * r);
    return 4.0 * kPi * r * r * rho * avg;
  };
  const double rmax = 12.0 / std::sqrt(a);
  if (x > 0.0 && x < rmax) return integrate(shell, 0.0, x) + integrate(shell, x, rmax);
  return integrate(shell, 0.0, rmax);
}

inline double gaussian3(double z, const Point3& c, double x, double y, double w) {
  const double dx = x - c.x, dy = y - c.y, dz = w - c.z;
  return std::pow(2.0 * z / kPi, 0.75) * std::exp(-z * (dx * dx + dy * dy + dz * dz));
}

struct McEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
};

/// int int xi1(r) xi2(s) xi3(s) xi4(r) / |r - s| by importance sampling.
/// r is drawn from a normal around the weighted center of xi1 xi4 and s from
/// one around that of xi2 xi3; the weight evaluates the integrand directly.
inline McEstimate eri_monte_carlo(const Point3& c1, const Point3& c2, const Point3& c3,
                                  const Point3& c4, double z1, double z2, double z3,
                                  double z4, long samples, std::mt19937_64& rng) {
  const double zr = z1 + z4, zs = z2 + z3;
  const Point3 P{(z1 * c1.x + z4 * c4.x) / zr, (z1 * c1.y + z4 * c4.y) / zr,
                 (z1 * c1.z + z4 * c4.z) / zr};
  const Point3 Q{(z2 * c2.x + z3 * c3.x) / zs, (z2 * c2.y + z3 * c3.y) / zs,
                 (z2 * c2.z + z3 * c3.z) / zs};
  const double sr = std::sqrt(1.0 / (2.0 * zr)), ss = std::sqrt(1.0 / (2.0 * zs));
  // Ratio of the four normalized Gaussians to the two proposal densities,
  // with all exponentials folded into a single exp.
  const double scale = std::pow(16.0 * z1 * z2 * z3 * z4 / (kPi * kPi * kPi * kPi), 0.75) *
                       std::pow(2.0 * kPi * sr * sr, 1.5) * std::pow(2.0 * kPi * ss * ss, 1.5);
  auto d2 = [](double x, double y, double w, const Point3& c) {
    return (x - c.x) * (x - c.x) + (y - c.y) * (y - c.y) + (w - c.z) * (w - c.z);
  };
  std::normal_distribution<double> normal(0.0, 1.0);
  double mean = 0.0, m2 = 0.0;
  for (long k = 1; k <= samples; ++k) {
    const double ax = normal(rng), ay = normal(rng), az = normal(rng);
    const double bx = normal(rng), by = normal(rng), bz = normal(rng);
    const double rx = P.x + sr * ax, ry = P.y + sr * ay, rz = P.z + sr * az;
    const double sx = Q.x + ss * bx, sy = Q.y + ss * by, sz = Q.z + ss * bz;
    const double expo = 0.5 * (ax * ax + ay * ay + az * az + bx * bx + by * by + bz * bz) -
                        z1 * d2(rx, ry, rz, c1) - z4 * d2(rx, ry, rz, c4) -
                        z2 * d2(sx, sy, sz, c2) - z3 * d2(sx, sy, sz, c3);
    const double dist = std::sqrt((rx - sx) * (rx - sx) + (ry - sy) * (ry - sy) + (rz - sz) * (rz - sz));
    const double v = scale * std::exp(expo) / dist;
    const double delta = v - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (v - mean);
  }
  McEstimate e;
  e.mean = mean;
  e.stderr_ = std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples));
  return e;
}

/// Brute-force independence number check over all vertex subsets.
inline bool has_independent_set(int n, const std::vector<std::pair<int, int>>& edges, int k) {
  if (k == 0) return true;
  if (k > n) return false;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<unsigned>(k)) continue;
    bool ok = true;
    for (const auto& [i, j] : edges) {
      if ((mask >> (i - 1) & 1u) && (mask >> (j - 1) & 1u)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Dense Fock-space vector of b+_1 ... b+_eta |0>, with b+_k = sum_m B(k, m) a+_m
/// and a+_m carrying the sign (-1)^(occupied modes below m).
inline std::vector<double> slater_vector(const std::vector<std::vector<double>>& B, int modes) {
  std::vector<double> psi(std::size_t{1} << modes, 0.0);
  psi[0] = 1.0;
  for (int k = static_cast<int>(B.size()) - 1; k >= 0; --k) {
    std::vector<double> next(psi.size(), 0.0);
    for (std::size_t s = 0; s < psi.size(); ++s) {
      if (psi[s] == 0.0) continue;
      for (int m = 0; m < modes; ++m) {
        if (s >> m & 1u) continue;
        const int below = std::popcount(s & ((std::size_t{1} << m) - 1));
        next[s | (std::size_t{1} << m)] += (below % 2 ? -1.0 : 1.0) * B[k][m] * psi[s];
      }
    }
    psi.swap(next);
  }
  return psi;
}

}  // namespace esred::oracle
