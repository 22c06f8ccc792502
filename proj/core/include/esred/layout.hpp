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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "esred/instances.hpp"

namespace esred {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Point3&) const = default;
};

double distance(const Point3& a, const Point3& b);

/// The close pair of primitive centers realizing one graph edge.
/// first belongs to the lower-numbered endpoint.
struct ClosePair {
  int edge = 0;    ///< index into graph().edges()
  int first = 0;   ///< flat primitive index
  int second = 0;  ///< flat primitive index
  double gamma = 0.0;

  bool operator==(const ClosePair&) const = default;
};

/// Primitive Gaussian centers for every composite orbital.
///
/// Primitive (i, p) with 0-based vertex i and slot p in {0, ..., d} has flat
/// index i * (d + 1) + p. Slot 0 carries exponent beta and amplitude 1/sqrt(2);
/// slots 1..d carry exponent alpha and amplitude 1/sqrt(2d).
class OrbitalLayout {
 public:
  OrbitalLayout() = default;
  OrbitalLayout(WeightedGraph graph, double alpha, double beta, double Gamma,
                std::vector<Point3> centers, std::vector<ClosePair> pairs);

  const WeightedGraph& graph() const { return graph_; }
  int n() const { return graph_.n(); }
  int d() const { return graph_.d(); }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double Gamma() const { return Gamma_; }

  int primitive_count() const { return n() * (d() + 1); }
  int primitive_index(int vertex0, int slot) const {
    return vertex0 * (d() + 1) + slot;
  }
  int vertex_of(int flat) const { return flat / (d() + 1); }
  int slot_of(int flat) const { return flat % (d() + 1); }

  const std::vector<Point3>& centers() const { return centers_; }
  std::vector<Point3>& mutable_centers() { return centers_; }
  const Point3& center(int flat) const { return centers_[flat]; }
  double exponent(int flat) const { return slot_of(flat) == 0 ? beta_ : alpha_; }
  double amplitude(int flat) const;

  const std::vector<ClosePair>& pairs() const { return pairs_; }
  std::vector<ClosePair>& mutable_pairs() { return pairs_; }

  double gamma_min() const;
  double gamma_max() const;
  /// omega = alpha * gamma^2 for one edge.
  double omega(int edge) const;
  double omega_min() const;
  /// True when every edge has the same gamma (exactly).
  bool uniform_gamma() const;
  /// Number of primitive centers not belonging to any close pair.
  int dummy_count() const;

  bool operator==(const OrbitalLayout&) const = default;

 private:
  WeightedGraph graph_;
  double alpha_ = 1.0;
  double beta_ = 1.0;
  double Gamma_ = 1.0;
  std::vector<Point3> centers_;
  std::vector<ClosePair> pairs_;
};

/// Places every primitive center in the z = 0 plane.
///
/// Each edge's close pair and each dummy center gets its own cell on the
/// x axis; cells are 2 Gamma + 2 gamma_max wide. A close pair shares the
/// cell's x coordinate and is split along y by exactly gamma.
/// gamma holds one value per edge, in graph().edges() order.
OrbitalLayout place_centers(const WeightedGraph& graph,
                            const std::vector<double>& gamma, double Gamma,
                            double alpha, double beta);

struct LayoutViolation {
  int first = -1;
  int second = -1;
  double measured = 0.0;
  std::string what;
};

/// Empty iff the layout satisfies every geometric and bookkeeping invariant.
std::vector<LayoutViolation> verify_layout(const OrbitalLayout& layout);

nlohmann::json layout_to_json(const OrbitalLayout& layout);
OrbitalLayout layout_from_json(const nlohmann::json& j);
/// One line per primitive: label, exponent, amplitude, coordinates.
std::string layout_to_xyz(const OrbitalLayout& layout);

}  // namespace esred
