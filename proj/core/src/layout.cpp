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

#include "esred/layout.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "esred/error.hpp"

namespace esred {

namespace {
constexpr double kDistanceRelTol = 1e-12;
}

double distance(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

OrbitalLayout::OrbitalLayout(WeightedGraph graph, double alpha, double beta,
                             double Gamma, std::vector<Point3> centers,
                             std::vector<ClosePair> pairs)
    : graph_(std::move(graph)),
      alpha_(alpha),
      beta_(beta),
      Gamma_(Gamma),
      centers_(std::move(centers)),
      pairs_(std::move(pairs)) {
  if (!(alpha_ > 0.0) || !(beta_ > 0.0)) {
    throw ValidationError("Gaussian exponents must be positive");
  }
  if (!(Gamma_ > 0.0)) throw ValidationError("Gamma must be positive");
}

double OrbitalLayout::amplitude(int flat) const {
  return slot_of(flat) == 0 ? 1.0 / std::sqrt(2.0)
                            : 1.0 / std::sqrt(2.0 * d());
}

double OrbitalLayout::gamma_min() const {
  double g = std::numeric_limits<double>::infinity();
  for (const auto& p : pairs_) g = std::min(g, p.gamma);
  return g;
}

double OrbitalLayout::gamma_max() const {
  double g = 0.0;
  for (const auto& p : pairs_) g = std::max(g, p.gamma);
  return g;
}

double OrbitalLayout::omega(int edge) const {
  const double g = pairs_.at(edge).gamma;
  return alpha_ * g * g;
}

double OrbitalLayout::omega_min() const {
  const double g = gamma_min();
  return alpha_ * g * g;
}

bool OrbitalLayout::uniform_gamma() const {
  return std::all_of(pairs_.begin(), pairs_.end(), [&](const ClosePair& p) {
    return p.gamma == pairs_.front().gamma;
  });
}

int OrbitalLayout::dummy_count() const {
  return primitive_count() - 2 * static_cast<int>(pairs_.size());
}

OrbitalLayout place_centers(const WeightedGraph& graph,
                            const std::vector<double>& gamma, double Gamma,
                            double alpha, double beta) {
  const auto& edges = graph.edges();
  if (gamma.size() != edges.size()) {
    throw ValidationError("need one gamma per edge");
  }
  double gamma_max = 0.0;
  for (double g : gamma) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw ValidationError("every gamma must be positive and finite");
    }
    gamma_max = std::max(gamma_max, g);
  }
  if (!(Gamma > gamma_max)) {
    throw ValidationError("Gamma must exceed the largest gamma");
  }

  const int d = graph.d();
  const int n = graph.n();
  const double cell = 2.0 * Gamma + 2.0 * gamma_max;
  std::vector<Point3> centers(static_cast<std::size_t>(n * (d + 1)));
  std::vector<bool> placed(centers.size(), false);
  std::vector<ClosePair> pairs;
  pairs.reserve(edges.size());

  auto slot_for = [&](int vertex, int neighbor) {
    const auto nb = graph.neighbors(vertex);
    const auto it = std::find(nb.begin(), nb.end(), neighbor);
    return static_cast<int>(it - nb.begin()) + 1;
  };

  long cell_index = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int a = (edges[e].i - 1) * (d + 1) + slot_for(edges[e].i, edges[e].j);
    const int b = (edges[e].j - 1) * (d + 1) + slot_for(edges[e].j, edges[e].i);
    const double x = static_cast<double>(cell_index++) * cell;
    centers[a] = {x, 0.0, 0.0};
    centers[b] = {x, gamma[e], 0.0};
    placed[a] = placed[b] = true;
    pairs.push_back({static_cast<int>(e), a, b, gamma[e]});
  }
  for (std::size_t k = 0; k < centers.size(); ++k) {
    if (placed[k]) continue;
    centers[k] = {static_cast<double>(cell_index++) * cell, 0.0, 0.0};
  }
  return OrbitalLayout(graph, alpha, beta, Gamma, std::move(centers),
                       std::move(pairs));
}

std::vector<LayoutViolation> verify_layout(const OrbitalLayout& layout) {
  std::vector<LayoutViolation> out;
  const int count = layout.primitive_count();
  const auto& edges = layout.graph().edges();
  const auto& pairs = layout.pairs();

  if (static_cast<int>(layout.centers().size()) != count) {
    out.push_back({-1, -1, double(layout.centers().size()),
                   "center count differs from n(d+1)"});
    return out;
  }
  if (pairs.size() != edges.size()) {
    out.push_back({-1, -1, double(pairs.size()),
                   "close pair count differs from edge count"});
  }

  std::vector<int> pair_of(count, -1);
  std::vector<int> edge_seen(edges.size(), 0);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const ClosePair& p = pairs[k];
    if (p.edge < 0 || p.edge >= static_cast<int>(edges.size())) {
      out.push_back({p.first, p.second, double(p.edge), "pair edge out of range"});
      continue;
    }
    ++edge_seen[p.edge];
    const Edge& e = edges[p.edge];
    if (layout.vertex_of(p.first) != e.i - 1 ||
        layout.vertex_of(p.second) != e.j - 1 || layout.slot_of(p.first) == 0 ||
        layout.slot_of(p.second) == 0) {
      out.push_back({p.first, p.second, 0.0,
                     "pair primitives do not belong to the edge endpoints"});
    }
    for (int idx : {p.first, p.second}) {
      if (idx < 0 || idx >= count) continue;
      if (pair_of[idx] >= 0) {
        out.push_back({idx, -1, 0.0, "primitive used by two close pairs"});
      }
      pair_of[idx] = static_cast<int>(k);
    }
    if (!(p.gamma > 0.0) || !(p.gamma < layout.Gamma())) {
      out.push_back({p.first, p.second, p.gamma,
                     "gamma must satisfy 0 < gamma < Gamma"});
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edge_seen[e] != 1) {
      out.push_back({-1, -1, double(edge_seen[e]),
                     "edge is not realized by exactly one close pair"});
    }
  }

  const double norm = 0.5 + layout.d() * (1.0 / (2.0 * layout.d()));
  if (std::abs(norm - 1.0) > 1e-12) {
    out.push_back({-1, -1, norm, "composite amplitudes are not normalized"});
  }

  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      const double dist = distance(layout.center(a), layout.center(b));
      const bool close = pair_of[a] >= 0 && pair_of[a] == pair_of[b];
      if (close) {
        const double g = pairs[pair_of[a]].gamma;
        if (std::abs(dist - g) > kDistanceRelTol * g) {
          out.push_back({a, b, dist, "close pair distance differs from gamma"});
        }
      } else if (dist < layout.Gamma() * (1.0 - kDistanceRelTol)) {
        out.push_back({a, b, dist, "far pair closer than Gamma"});
      }
    }
  }
  return out;
}

nlohmann::json layout_to_json(const OrbitalLayout& layout) {
  nlohmann::json centers = nlohmann::json::array();
  for (int k = 0; k < layout.primitive_count(); ++k) {
    const Point3& c = layout.center(k);
    centers.push_back({{"vertex", layout.vertex_of(k) + 1},
                       {"slot", layout.slot_of(k)},
                       {"exponent", layout.exponent(k)},
                       {"amplitude", layout.amplitude(k)},
                       {"position", {c.x, c.y, c.z}}});
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (const ClosePair& p : layout.pairs()) {
    const Edge& e = layout.graph().edges()[p.edge];
    pairs.push_back({{"edge", {e.i, e.j}},
                     {"first", p.first},
                     {"second", p.second},
                     {"gamma", p.gamma},
                     {"omega", layout.alpha() * p.gamma * p.gamma}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : layout.graph().edges()) edges.push_back({e.i, e.j, e.weight});
  return {{"n", layout.n()},
          {"d", layout.d()},
          {"edges", edges},
          {"alpha", layout.alpha()},
          {"beta", layout.beta()},
          {"Gamma", layout.Gamma()},
          {"centers", centers},
          {"pairs", pairs}};
}

OrbitalLayout layout_from_json(const nlohmann::json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& row : j.at("edges")) {
      edges.push_back({row.at(0).get<int>(), row.at(1).get<int>(),
                       row.at(2).get<double>()});
    }
    WeightedGraph graph(j.at("n").get<int>(), j.at("d").get<int>(),
                        std::move(edges));
    std::vector<Point3> centers;
    for (const auto& c : j.at("centers")) {
      const auto& pos = c.at("position");
      centers.push_back({pos.at(0).get<double>(), pos.at(1).get<double>(),
                         pos.at(2).get<double>()});
    }
    std::vector<ClosePair> pairs;
    int k = 0;
    for (const auto& p : j.at("pairs")) {
      pairs.push_back({k++, p.at("first").get<int>(), p.at("second").get<int>(),
                       p.at("gamma").get<double>()});
    }
    return OrbitalLayout(std::move(graph), j.at("alpha").get<double>(),
                         j.at("beta").get<double>(), j.at("Gamma").get<double>(),
                         std::move(centers), std::move(pairs));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("layout: ") + ex.what());
  }
}

std::string layout_to_xyz(const OrbitalLayout& layout) {
  std::ostringstream os;
  os << layout.primitive_count() << '\n';
  os << "alpha=" << layout.alpha() << " beta=" << layout.beta()
     << " Gamma=" << layout.Gamma() << '\n';
  os << std::setprecision(17);
  for (int k = 0; k < layout.primitive_count(); ++k) {
    const Point3& c = layout.center(k);
    os << 'G' << layout.vertex_of(k) + 1 << '_' << layout.slot_of(k) << ' '
       << layout.exponent(k) << ' ' << layout.amplitude(k) << ' ' << c.x << ' '
       << c.y << ' ' << c.z << '\n';
  }
  return os.str();
}

}  // namespace esred
