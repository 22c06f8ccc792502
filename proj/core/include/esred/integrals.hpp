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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "esred/layout.hpp"

namespace esred {

/// F_0(x) = integral_0^1 exp(-x t^2) dt.
double boys0(double x);

/// Overlap of two normalized s-Gaussians with exponents z1, z2 whose centers
/// are a distance x apart.
double overlap(double z1, double z2, double x);

/// Kinetic matrix element -1/2 <a|laplacian|b> for the same pair.
double kinetic(double z1, double z2, double x);

/// Coulomb repulsion between two equal-exponent charge densities |xi_z|^2.
double coulomb_pair(double z, double x);
double exchange_pair(double z, double x);
double other_pair(double z, double x);

/// Two-electron integral
///   int int xi1(r) xi2(s) xi3(s) xi4(r) / |r - s| dr ds
/// for normalized s-Gaussians xi_k centered at c_k with exponent z_k.
double eri_four_center(const Point3& c1, const Point3& c2, const Point3& c3,
                       const Point3& c4, double z1, double z2, double z3,
                       double z4);

/// Values below this magnitude are stored as exact zeros.
inline constexpr double kUnderflowFloor = 1e-300;

/// Four-index array u(a, b, c, d) = int a(r) b(s) c(s) d(r) / |r - s|.
///
/// Dense storage up to dense_limit orbitals, otherwise a sparse map holding
/// only nonzero entries. Iteration order is deterministic in both modes.
class TwoBodyTensor {
 public:
  TwoBodyTensor() = default;
  TwoBodyTensor(int size, bool dense);

  int size() const { return n_; }
  bool dense() const { return dense_; }

  double operator()(int a, int b, int c, int d) const;
  void set(int a, int b, int c, int d, double value);
  void add(int a, int b, int c, int d, double value);
  /// Writes value into all eight symmetry-related slots of (a, b, c, d).
  void set_symmetric(int a, int b, int c, int d, double value);

  std::size_t nonzero_count() const;
  double max_abs() const;

  template <typename F>
  void for_each_nonzero(F&& fn) const {
    if (dense_) {
      const std::size_t total = values_.size();
      for (std::size_t k = 0; k < total; ++k) {
        if (values_[k] == 0.0) continue;
        std::size_t r = k;
        const int d = static_cast<int>(r % n_);
        r /= n_;
        const int c = static_cast<int>(r % n_);
        r /= n_;
        const int b = static_cast<int>(r % n_);
        const int a = static_cast<int>(r / n_);
        fn(a, b, c, d, values_[k]);
      }
    } else {
      for (const auto& [key, v] : sparse_) {
        fn(key[0], key[1], key[2], key[3], v);
      }
    }
  }

  bool operator==(const TwoBodyTensor&) const = default;

 private:
  std::size_t flat(int a, int b, int c, int d) const {
    return ((static_cast<std::size_t>(a) * n_ + b) * n_ + c) * n_ + d;
  }

  int n_ = 0;
  bool dense_ = true;
  std::vector<double> values_;
  std::map<std::array<int, 4>, double> sparse_;
};

enum class Level { Primitive, Composite };

struct CoefficientTensors {
  Level level = Level::Primitive;
  Eigen::MatrixXd S;
  Eigen::MatrixXd T;
  /// External potential; identically zero in this construction.
  Eigen::MatrixXd V;
  TwoBodyTensor U;

  int size() const { return static_cast<int>(S.rows()); }
};

/// Largest basis stored densely, per level.
inline constexpr int kDensePrimitiveLimit = 48;
inline constexpr int kDenseCompositeLimit = 12;

CoefficientTensors assemble_primitive_tensors(const OrbitalLayout& layout);

/// Contracts primitive-level tensors with the composite amplitudes.
CoefficientTensors compose_tensors(const CoefficientTensors& prim,
                                   const OrbitalLayout& layout);

nlohmann::json tensors_to_json(const CoefficientTensors& tensors, int eta);
CoefficientTensors tensors_from_json(const nlohmann::json& j);

/// FCIDUMP text with two-electron lines in chemists' order (ij|kl).
std::string tensors_to_fcidump(const CoefficientTensors& tensors, int eta);
/// Parses the output of tensors_to_fcidump (S is set to the identity).
CoefficientTensors tensors_from_fcidump(const std::string& text, int* eta);

}  // namespace esred
