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

#include <cstdio>
#include <iostream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "esred/error.hpp"
#include "esred/pipeline.hpp"
#include "esred/slater.hpp"

namespace {

enum Exit { kOk = 0, kBoundFailure = 1, kInputError = 2, kResourceError = 3 };

struct RawFlags {
  std::string instance;
  std::string out = "esred_out";
  std::optional<double> alpha, beta, Gamma, u0, p, q;
  std::optional<int> eta;
  std::optional<std::string> gamma, omega;
  std::uint64_t seed = 0;
  std::size_t cap = esred::SectorBasis::kDefaultCap;
  int k = 0;
};

void add_common(CLI::App* cmd, RawFlags& f) {
  cmd->add_option("--instance", f.instance, "instance JSON file")->required();
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--cap", f.cap, "maximum sector dimension");
}

void add_reduce_flags(CLI::App* cmd, RawFlags& f) {
  cmd->add_option("--alpha", f.alpha, "bridge exponent");
  cmd->add_option("--beta", f.beta, "vertex exponent");
  cmd->add_option("--Gamma", f.Gamma, "minimum far-pair distance");
  cmd->add_option("--u0", f.u0, "onsite repulsion");
  cmd->add_option("--eta", f.eta, "electron count");
  cmd->add_option("--p", f.p, "weight exponent p");
  cmd->add_option("--q", f.q, "precision exponent q");
  auto* g = cmd->add_option("--gamma", f.gamma, "pair separation: number or {\"i-j\": value}");
  auto* w = cmd->add_option("--omega", f.omega, "alpha gamma^2: number or {\"i-j\": value}");
  g->excludes(w);
}

esred::RunConfig to_config(const RawFlags& f) {
  esred::RunConfig c;
  c.instance = f.instance;
  c.out = f.out;
  c.alpha = f.alpha;
  c.beta = f.beta;
  c.Gamma = f.Gamma;
  c.u0 = f.u0;
  c.eta = f.eta;
  c.p = f.p;
  c.q = f.q;
  if (f.gamma) c.gamma = esred::parse_edge_values(*f.gamma);
  if (f.omega) c.omega = esred::parse_edge_values(*f.omega);
  c.seed = f.seed;
  c.cap = f.cap;
  c.k = f.k;
  return c;
}

int cmd_reduce(const RawFlags& f) {
  esred::RunConfig config = to_config(f);
  const std::string bytes = esred::read_file(config.instance);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& ex) {
    throw esred::ParseError(ex.what());
  }
  const esred::Instance inst = esred::instance_from_json(j);
  if (!std::holds_alternative<esred::HeisenbergInstance>(inst)) {
    throw esred::ValidationError("reduce expects a Heisenberg instance");
  }
  esred::HeisenbergInstance heis = std::get<esred::HeisenbergInstance>(inst);
  if (config.p) heis.p = config.p;
  if (config.q) heis.q = config.q;
  config.p = heis.p;
  config.q = heis.q;
  const esred::ChainResult chain = esred::run_chain(heis, config);
  esred::write_reduce_outputs(chain, config, bytes);
  std::cout << "wrote " << config.out.string() << "/{manifest,hubbard,layout,tensors}.json and tensors.fcidump\n";
  return kOk;
}

int cmd_verify(const RawFlags& f) {
  esred::RunConfig config = to_config(f);
  const esred::VerifyOutcome outcome = esred::verify_outputs(config);
  std::cout << esred::reports_table(outcome.reports);
  return outcome.passed ? kOk : kBoundFailure;
}

int cmd_np_gadget(const RawFlags& f) {
  const esred::Instance inst = esred::load_instance(f.instance);
  const esred::WeightedGraph& g = esred::graph_of(inst);
  if (f.k < 0) throw esred::ValidationError("k must be nonnegative");
  const esred::IndependentSetResult r = esred::independent_set_check(g, f.k);
  const std::filesystem::path out = std::filesystem::path(f.out) / "np_gadget.json";
  esred::write_file(out, r.to_json().dump(2) + "\n");
  std::cout << "k=" << r.k << " independent_set=" << (r.has_independent_set ? "yes" : "no")
            << " energy=" << r.energy << " u2=" << r.u2 << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"esred: electronic-structure reductions at desk scale"};
  app.set_version_flag("--version", std::string(esred::kVersion));
  app.require_subcommand(1);

  RawFlags flags;
  auto* reduce = app.add_subcommand("reduce", "Heisenberg instance -> Hubbard, layout and tensors");
  add_common(reduce, flags);
  add_reduce_flags(reduce, flags);
  auto* verify = app.add_subcommand("verify", "measure every bound on reduce outputs");
  add_common(verify, flags);
  verify->add_option("--eta", flags.eta, "electron count");
  auto* gadget = app.add_subcommand("np-gadget", "classical independent-set gadget");
  add_common(gadget, flags);
  gadget->add_option("--k", flags.k, "independent set size")->required();

  verify->get_option("--instance")->required(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*reduce) return cmd_reduce(flags);
    if (*verify) return cmd_verify(flags);
    return cmd_np_gadget(flags);
  } catch (const esred::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResourceError;
  } catch (const esred::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
