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

#include "esred/instances.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include "esred/error.hpp"

namespace esred {

namespace {

constexpr double kRelTol = 1e-12;

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")";
}

}  // namespace

WeightedGraph::WeightedGraph(int n, int d, std::vector<Edge> edges)
    : n_(n), d_(d), edges_(std::move(edges)) {
  if (n_ < 1) throw ValidationError("graph must have at least one vertex");
  if (d_ < 1) throw ValidationError("degree bound d must be positive");
  if (d_ > std::max(1, n_ - 1)) {
    throw ValidationError("degree bound d = " + std::to_string(d_) +
                          " exceeds n - 1");
  }
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.i < 1 || e.j > n_ || e.i >= e.j) {
      throw ValidationError("edge " + edge_name(e) +
                            " violates 1 <= i < j <= n");
    }
    if (!std::isfinite(e.weight)) {
      throw ValidationError("edge " + edge_name(e) + " has non-finite weight");
    }
    if (!seen.emplace(e.i, e.j).second) {
      throw ValidationError("duplicate edge " + edge_name(e));
    }
  }
  if (max_degree() > d_) {
    throw ValidationError("degree bound d = " + std::to_string(d_) +
                          " is below the maximum degree " +
                          std::to_string(max_degree()));
  }
}

int WeightedGraph::degree(int vertex) const {
  int deg = 0;
  for (const Edge& e : edges_) deg += (e.i == vertex) + (e.j == vertex);
  return deg;
}

int WeightedGraph::max_degree() const {
  std::vector<int> deg(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++deg[e.i];
    ++deg[e.j];
  }
  return *std::max_element(deg.begin(), deg.end());
}

std::vector<int> WeightedGraph::neighbors(int vertex) const {
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.i == vertex) out.push_back(e.j);
    if (e.j == vertex) out.push_back(e.i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int WeightedGraph::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k].i == i && edges_[k].j == j) return static_cast<int>(k);
  }
  return -1;
}

WeightedGraph WeightedGraph::with_weights(
    const std::vector<double>& weights) const {
  if (weights.size() != edges_.size()) {
    throw ValidationError("weight count does not match edge count");
  }
  std::vector<Edge> edges = edges_;
  for (std::size_t k = 0; k < edges.size(); ++k) edges[k].weight = weights[k];
  return WeightedGraph(n_, d_, std::move(edges));
}

WeightedGraph graph_from_edges(int n, std::vector<Edge> edges) {
  std::vector<int> deg(std::max(n, 0) + 1, 0);
  for (const Edge& e : edges) {
    if (e.i >= 0 && e.i <= n) ++deg[e.i];
    if (e.j >= 0 && e.j <= n) ++deg[e.j];
  }
  int d = std::max(1, *std::max_element(deg.begin(), deg.end()));
  return WeightedGraph(n, d, std::move(edges));
}

WeightedGraph path_graph(int n, double weight) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, weight});
  return graph_from_edges(n, std::move(edges));
}

WeightedGraph cycle_graph(int n, double weight) {
  if (n < 3) return path_graph(n, weight);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, weight});
  edges.push_back({1, n, weight});
  return graph_from_edges(n, std::move(edges));
}

WeightedGraph complete_graph(int n, double weight) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j, weight});
  return graph_from_edges(n, std::move(edges));
}

WeightedGraph empty_graph(int n) { return WeightedGraph(n, 1, {}); }

void HeisenbergInstance::validate() const {
  const double n = graph.n();
  for (const Edge& e : graph.edges()) {
    if (e.weight < 0.0) {
      throw ValidationError("negative coupling on edge " + edge_name(e));
    }
    if (p && e.weight > std::pow(n, *p) * (1.0 + kRelTol)) {
      throw ValidationError("coupling on edge " + edge_name(e) +
                            " exceeds n^p");
    }
  }
}

void HubbardInstance::validate() const {
  if (!(u0 > 0.0)) throw ValidationError("onsite repulsion u0 must be > 0");
  if (eta < 1) throw ValidationError("electron count eta must be >= 1");
  if (eta > 2 * graph.n()) {
    throw ValidationError("electron count exceeds the number of spin orbitals");
  }
  if (p) {
    const double cap = std::sqrt(std::pow(double(graph.n()), *p) * u0);
    for (const Edge& e : graph.edges()) {
      if (std::abs(e.weight) > cap * (1.0 + kRelTol)) {
        throw ValidationError("hopping on edge " + edge_name(e) +
                              " exceeds sqrt(n^p u0)");
      }
    }
  }
}

const WeightedGraph& graph_of(const Instance& instance) {
  return std::visit([](const auto& inst) -> const WeightedGraph& {
    return inst.graph;
  }, instance);
}

namespace {

nlohmann::json graph_fields(const WeightedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.i, e.j, e.weight});
  return {{"n", g.n()}, {"d", g.d()}, {"edges", edges}};
}

template <typename T>
T required(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("field '") + key + "': " + ex.what());
  }
}

std::optional<double> optional_number(const nlohmann::json& j,
                                      const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_number()) {
    throw ParseError(std::string("field '") + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

WeightedGraph graph_from_json(const nlohmann::json& j) {
  const int n = required<int>(j, "n");
  const int d = required<int>(j, "d");
  if (!j.contains("edges") || !j.at("edges").is_array()) {
    throw ParseError("field 'edges' must be an array");
  }
  std::vector<Edge> edges;
  for (const auto& row : j.at("edges")) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
        !row[1].is_number_integer() || !row[2].is_number()) {
      throw ParseError("each edge must be [i, j, weight] with integer i, j");
    }
    edges.push_back({row[0].get<int>(), row[1].get<int>(),
                     row[2].get<double>()});
  }
  return WeightedGraph(n, d, std::move(edges));
}

}  // namespace

nlohmann::json instance_to_json(const Instance& instance) {
  nlohmann::json j;
  if (const auto* heis = std::get_if<HeisenbergInstance>(&instance)) {
    j = graph_fields(heis->graph);
    j["kind"] = "heisenberg";
    if (heis->p) j["p"] = *heis->p;
    if (heis->q) j["q"] = *heis->q;
  } else {
    const auto& hub = std::get<HubbardInstance>(instance);
    j = graph_fields(hub.graph);
    j["kind"] = "hubbard";
    j["u0"] = hub.u0;
    j["eta"] = hub.eta;
    if (hub.p) j["p"] = *hub.p;
    if (hub.q) j["q"] = *hub.q;
  }
  return j;
}

Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  const std::string kind =
      j.contains("kind") ? required<std::string>(j, "kind") : "heisenberg";
  WeightedGraph graph = graph_from_json(j);
  if (kind == "heisenberg") {
    HeisenbergInstance inst{std::move(graph), optional_number(j, "p"),
                            optional_number(j, "q")};
    inst.validate();
    return inst;
  }
  if (kind == "hubbard") {
    HubbardInstance inst{std::move(graph), required<double>(j, "u0"),
                         required<int>(j, "eta"), optional_number(j, "p"),
                         optional_number(j, "q")};
    inst.validate();
    return inst;
  }
  throw ParseError("unknown instance kind '" + kind + "'");
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
  return instance_from_json(j);
}

void save_instance(const Instance& instance,
                   const std::filesystem::path& path) {
  std::visit([](const auto& inst) { inst.validate(); }, instance);
  std::ofstream out(path);
  if (!out) throw IoError("cannot write instance file " + path.string());
  out << instance_to_json(instance).dump(2) << '\n';
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace esred
