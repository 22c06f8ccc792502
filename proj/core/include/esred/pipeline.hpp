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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "esred/bounds.hpp"
#include "esred/fockspace.hpp"
#include "esred/heis2hubb.hpp"
#include "esred/instances.hpp"
#include "esred/integrals.hpp"
#include "esred/layout.hpp"
#include "esred/lowdin.hpp"

namespace esred {

inline constexpr const char* kVersion = "0.1.0";

/// A single value for every edge, or values keyed by 1-indexed "i-j".
struct EdgeValues {
  std::optional<double> all;
  std::map<std::pair<int, int>, double> per_edge;

  /// Value for edge {i, j}; throws ValidationError if missing.
  double at(int i, int j) const;
};

/// Accepts a plain number or a JSON object such as {"1-2": 4.0}.
EdgeValues parse_edge_values(const std::string& text);

struct RunConfig {
  std::filesystem::path instance;
  std::filesystem::path out;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> Gamma;
  std::optional<double> u0;
  std::optional<int> eta;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<EdgeValues> gamma;
  std::optional<EdgeValues> omega;
  std::uint64_t seed = 0;
  std::size_t cap = SectorBasis::kDefaultCap;
  int k = 0;
};

/// Everything produced by the reduction chain for one Heisenberg instance.
struct ChainResult {
  HeisenbergInstance heisenberg;
  ReductionCertificate certificate;
  double alpha = 1.0;
  double beta = 1.0;
  double Gamma = 1.0;
  double rho = 0.0;
  double c_main_U = 0.0;
  int eta = 0;
  /// True when every omega came from inverting the coefficient equation.
  bool omega_solved = true;
  /// Per input edge; +infinity marks an edge with zero hopping (dropped).
  std::vector<double> omega;
  OrbitalLayout layout;
  CoefficientTensors primitive;
  OrthoTransform transform;
  /// Composite orbitals after orthonormalization.
  CoefficientTensors composite;
  RoundedCoefficients rounded;
};

/// Heisenberg -> Hubbard (negative hopping branch) -> Gaussian layout ->
/// integrals -> orthonormal composite tensors.
ChainResult run_chain(const HeisenbergInstance& inst, const RunConfig& config);

/// FNV-1a 64-bit hash as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

std::string read_file(const std::filesystem::path& path);
/// Writes text, creating parent directories; throws IoError.
void write_file(const std::filesystem::path& path, const std::string& text);

/// Writes manifest.json, hubbard.json, layout.json, tensors.json and
/// tensors.fcidump into config.out.
void write_reduce_outputs(const ChainResult& chain, const RunConfig& config,
                          const std::string& input_bytes);

struct VerifyOutcome {
  std::vector<BoundReport> reports;
  nlohmann::json spectrum;
  bool passed = false;
};

/// Rebuilds every Hamiltonian from the files in config.out, measures all
/// bounds and writes bounds.json and spectrum.json.
VerifyOutcome verify_outputs(const RunConfig& config);

/// Measures the bound reports for an in-memory chain.
VerifyOutcome verify_chain(const ChainResult& chain, const CoefficientTensors& es_tensors,
                           const HubbardInstance& hubbard, const RunConfig& config);

}  // namespace esred
