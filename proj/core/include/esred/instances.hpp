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

#include <filesystem>
#include <optional>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace esred {

/// Undirected weighted edge between 1-indexed vertices, i < j.
struct Edge {
  int i = 0;
  int j = 0;
  double weight = 0.0;

  bool operator==(const Edge&) const = default;
};

/// Interaction graph with a declared degree bound.
///
/// Vertices are 1-indexed in the public interface, matching the serialized
/// format. Construction validates every invariant and throws
/// ValidationError on the first violation.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(int n, int d, std::vector<Edge> edges);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  int degree(int vertex) const;
  int max_degree() const;
  /// Neighbors of a 1-indexed vertex, sorted ascending.
  std::vector<int> neighbors(int vertex) const;
  /// Index into edges() of {i, j}, or -1.
  int edge_index(int i, int j) const;
  bool has_edge(int i, int j) const { return edge_index(i, j) >= 0; }

  /// Same topology and degree bound, new weights (one per edge, in order).
  WeightedGraph with_weights(const std::vector<double>& weights) const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Edge> edges_;
};

WeightedGraph path_graph(int n, double weight = 1.0);
WeightedGraph cycle_graph(int n, double weight = 1.0);
WeightedGraph complete_graph(int n, double weight = 1.0);
/// Graph with no edges; the degree bound is 1.
WeightedGraph empty_graph(int n);
/// Degree bound set to max(1, max degree).
WeightedGraph graph_from_edges(int n, std::vector<Edge> edges);

/// Antiferromagnetic Heisenberg instance; weights are the couplings kappa.
struct HeisenbergInstance {
  WeightedGraph graph;
  std::optional<double> p;
  std::optional<double> q;

  void validate() const;
  bool operator==(const HeisenbergInstance&) const = default;
};

/// Fermi-Hubbard instance; weights are the hopping amplitudes.
struct HubbardInstance {
  WeightedGraph graph;
  double u0 = 0.0;
  int eta = 0;
  std::optional<double> p;
  std::optional<double> q;

  void validate() const;
  bool operator==(const HubbardInstance&) const = default;
};

using Instance = std::variant<HeisenbergInstance, HubbardInstance>;

const WeightedGraph& graph_of(const Instance& instance);

nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& j);

/// Reads and validates an instance file. Throws IoError, ParseError or
/// ValidationError.
Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& instance, const std::filesystem::path& path);

}  // namespace esred
