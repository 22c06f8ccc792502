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

#include "esred/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "esred/error.hpp"
#include "esred/spectra.hpp"

namespace esred {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

nlohmann::json load_json(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(path.filename().string() + ": " + ex.what());
  }
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

double max_entry_diff(const SparseMatrix& a, const SparseMatrix& b) {
  const SparseMatrix d = a - b;
  double m = 0.0;
  for (long c = 0; c < d.outerSize(); ++c)
    for (SparseMatrix::InnerIterator it(d, c); it; ++it) m = std::max(m, std::abs(it.value()));
  return m;
}

}  // namespace

double EdgeValues::at(int i, int j) const {
  const auto it = per_edge.find({std::min(i, j), std::max(i, j)});
  if (it != per_edge.end()) return it->second;
  if (all) return *all;
  throw ValidationError("no value given for edge " + std::to_string(i) + "-" + std::to_string(j));
}

EdgeValues parse_edge_values(const std::string& text) {
  EdgeValues ev;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw ParseError("expected a number or a JSON object, got '" + text + "'");
  }
  if (j.is_number()) {
    ev.all = j.get<double>();
    return ev;
  }
  if (!j.is_object()) throw ParseError("per-edge values must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    int a = 0, b = 0;
    char dash = 0;
    std::istringstream ks(key);
    if (!(ks >> a >> dash >> b) || dash != '-' || !ks.eof()) {
      throw ParseError("edge key '" + key + "' is not of the form i-j");
    }
    if (!value.is_number()) throw ParseError("edge value for '" + key + "' is not a number");
    ev.per_edge[{std::min(a, b), std::max(a, b)}] = value.get<double>();
  }
  return ev;
}

ChainResult run_chain(const HeisenbergInstance& inst, const RunConfig& config) {
  inst.validate();
  const WeightedGraph& g = inst.graph;
  const int n = g.n();
  const int d = g.d();
  if (config.gamma && config.omega) throw ValidationError("give either gamma or omega, not both");

  ChainResult c;
  c.heisenberg = inst;
  c.alpha = config.alpha.value_or(1.0);
  c.beta = config.beta.value_or(std::max(1.0, c.alpha));
  if (!(c.alpha > 0.0) || !(c.beta > 0.0)) throw ValidationError("alpha and beta must be positive");
  const double u0 = config.u0.value_or(100.0);
  c.certificate = reduce_heisenberg_to_hubbard(inst, u0, HoppingSign::Negative);
  c.certificate.hubbard.p = inst.p;
  c.certificate.hubbard.q = inst.q;
  c.c_main_U = main_onsite(c.beta);
  c.rho = c.c_main_U / u0;
  c.eta = config.eta.value_or(n);
  c.omega_solved = !config.gamma && !config.omega;

  std::vector<Edge> kept;
  std::vector<double> gammas;
  const auto& hub_edges = c.certificate.hubbard.graph.edges();
  for (const Edge& e : hub_edges) {
    double w;
    if (config.omega) {
      w = config.omega->at(e.i, e.j);
    } else if (config.gamma) {
      const double gm = config.gamma->at(e.i, e.j);
      w = c.alpha * gm * gm;
    } else {
      w = solve_omega(e.weight, c.alpha, d, c.rho);
    }
    if (!(w > 0.0)) throw ValidationError("omega must be positive");
    c.omega.push_back(w);
    if (std::isfinite(w)) {
      kept.push_back(e);
      gammas.push_back(std::sqrt(w / c.alpha));
    }
  }
  const double nn = n;
  c.Gamma = config.Gamma.value_or(640.0 * std::pow(nn, 18.0) * std::pow(c.beta, 3.0));
  c.layout = place_centers(WeightedGraph(n, d, kept), gammas, c.Gamma, c.alpha, c.beta);
  const auto violations = verify_layout(c.layout);
  if (!violations.empty()) throw ValidationError("layout check failed: " + violations.front().what);

  c.primitive = assemble_primitive_tensors(c.layout);
  c.transform = inv_sqrt_overlap(c.layout, c.primitive.S);
  c.composite = compose_tensors(transform_tensors(c.primitive, c.transform), c.layout);
  c.rounded = rounded_coefficients(c.layout);
  return c;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

void write_reduce_outputs(const ChainResult& c, const RunConfig& config,
                          const std::string& input_bytes) {
  const auto& out = config.out;
  const int n = c.layout.n();

  nlohmann::json edges = nlohmann::json::array();
  const auto& heis = c.heisenberg.graph.edges();
  for (std::size_t k = 0; k < heis.size(); ++k) {
    const double w = c.omega[k];
    nlohmann::json e = {{"i", heis[k].i},
                        {"j", heis[k].j},
                        {"kappa", heis[k].weight},
                        {"t", c.certificate.hubbard.graph.edges()[k].weight},
                        {"h_eff", c.certificate.h_eff[k]}};
    e["omega"] = std::isfinite(w) ? nlohmann::json(w) : nlohmann::json(nullptr);
    e["gamma"] = std::isfinite(w) ? nlohmann::json(std::sqrt(w / c.alpha)) : nlohmann::json(nullptr);
    edges.push_back(e);
  }

  nlohmann::json plan = nullptr;
  if (config.p && config.q) {
    try {
      plan = plan_parameters(*config.p, *config.q, std::max(2, n)).to_json();
    } catch (const DomainError& ex) {
      plan = {{"error", ex.what()}};
    }
  }
  const double wmin = c.layout.pairs().empty() ? kInf : c.layout.omega_min();
  const BoundReport rounding = rounding_error_bound(n, c.alpha, c.beta, wmin, c.Gamma);
  nlohmann::json hyps = nlohmann::json::array();
  for (const auto& h : rounding.hypotheses) hyps.push_back({{"condition", h.condition}, {"holds", h.holds}});

  const nlohmann::json manifest = {
      {"tool", "esred"},
      {"version", kVersion},
      {"command", "reduce"},
      {"input", {{"path", config.instance.filename().string()}, {"fnv1a64", fnv1a_hex(input_bytes)}}},
      {"parameters",
       {{"alpha", c.alpha},
        {"beta", c.beta},
        {"Gamma", c.Gamma},
        {"u0", c.certificate.hubbard.u0},
        {"eta", c.eta},
        {"p", optional_json(config.p)},
        {"q", optional_json(config.q)},
        {"seed", config.seed},
        {"cap", config.cap},
        {"omega_solved", c.omega_solved}}},
      {"rho", c.rho},
      {"c_main_U", c.c_main_U},
      {"c_eff", c.certificate.c_eff},
      {"c_T", c.rounded.c_T},
      {"c_U", c.rounded.c_U},
      {"large_u0_hypothesis", c.certificate.large_u0_hypothesis},
      {"rounding_hypotheses", hyps},
      {"plan", plan},
      {"edges", edges},
      {"files", {"hubbard.json", "layout.json", "tensors.json", "tensors.fcidump"}}};

  write_file(out / "manifest.json", manifest.dump(2) + "\n");
  write_file(out / "hubbard.json", instance_to_json(Instance{c.certificate.hubbard}).dump(2) + "\n");
  write_file(out / "layout.json", layout_to_json(c.layout).dump(2) + "\n");
  write_file(out / "tensors.json", tensors_to_json(c.composite, c.eta).dump(2) + "\n");
  write_file(out / "tensors.fcidump", tensors_to_fcidump(c.composite, c.eta));
}

VerifyOutcome verify_chain(const ChainResult& c, const CoefficientTensors& es_tensors,
                           const HubbardInstance& hubbard, const RunConfig& config) {
  const OrbitalLayout& layout = c.layout;
  const int n = layout.n();
  const int eta = c.eta;
  EigenOptions opts;
  opts.seed = config.seed;
  opts.cap = config.cap;

  if (es_tensors.size() != n) throw ValidationError("tensor file does not match the layout");
  const SecondQuantizedHamiltonian h_es = build_es_hamiltonian(es_tensors);
  const SecondQuantizedHamiltonian h_round = build_rounded(c.rounded);
  const SecondQuantizedHamiltonian h_main = build_main(c.rounded);
  SecondQuantizedHamiltonian shift(2 * n);
  shift.add_constant(eta * c.rounded.c_T);

  std::vector<BoundReport> reports;
  const double wmin = layout.pairs().empty() ? kInf : layout.omega_min();

  BoundReport r1 = rounding_error_bound(n, c.alpha, c.beta, wmin, c.Gamma);
  r1.measured = spectral_norm_diff(h_es, h_round, eta, opts);
  reports.push_back(r1);

  BoundReport r2 = offsite_bound(n, c.alpha);
  r2.measured = spectral_norm_diff(h_round, h_main + shift, eta, opts);
  reports.push_back(r2);

  if (!layout.pairs().empty() && layout.uniform_gamma()) {
    BoundReport r6 = class_bound(n, c.alpha, layout.pairs().front().gamma);
    r6.measured = spectral_norm_diff(h_round, build_classical(layout, c.rounded) + shift, eta, opts);
    reports.push_back(r6);
  }

  for (auto& r : orthonormalization_bounds(layout, c.primitive, c.transform)) reports.push_back(std::move(r));

  {
    double scale = 1.0;
    scale = std::max(scale, c.composite.T.cwiseAbs().maxCoeff());
    scale = std::max(scale, c.composite.U.max_abs());
    double diff = (c.composite.T - es_tensors.T).cwiseAbs().maxCoeff();
    diff = std::max(diff, (c.composite.V - es_tensors.V).cwiseAbs().maxCoeff());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int cc = 0; cc < n; ++cc)
          for (int d = 0; d < n; ++d)
            diff = std::max(diff, std::abs(c.composite.U(a, b, cc, d) - es_tensors.U(a, b, cc, d)));
    BoundReport r;
    r.family = "consistency";
    r.quantity = "max|tensor file - recomputed|";
    r.bound = 1e-12 * scale;
    r.measured = diff;
    reports.push_back(r);
  }

  const SectorMatrix main_m = sector_restrict(h_main, eta, opts.cap);
  const SectorMatrix hub_m = sector_restrict(build_hubbard(hubbard), eta, opts.cap);
  {
    BoundReport r;
    r.family = "proportionality";
    r.quantity = "max|H_main - rho H_Hubb| entry";
    r.hypotheses = {{"omega solved from the coefficient equation", c.omega_solved}};
    r.bound = 1e-9;
    r.measured = max_entry_diff(main_m.matrix, c.rho * hub_m.matrix);
    reports.push_back(r);
  }

  if (hubbard.p && hubbard.q) reports.push_back(hubbard_hypothesis_check(hubbard, *hubbard.p, *hubbard.q));

  VerifyOutcome outcome;
  outcome.reports = reports;
  outcome.passed = all_passed(reports);
  const SpectrumReport s_es = ground_energy(h_es, eta, opts);
  const SpectrumReport s_round = ground_energy(h_round, eta, opts);
  SpectrumReport s_main = lowest_eigenvalues(main_m.matrix, 1, opts);
  s_main.eta = eta;
  SpectrumReport s_hub = lowest_eigenvalues(hub_m.matrix, 1, opts);
  s_hub.eta = eta;
  outcome.spectrum = {{"eta", eta},
                      {"dimension", s_es.dimension},
                      {"n_c_T", eta * c.rounded.c_T},
                      {"rho", c.rho},
                      {"H_ES", s_es.to_json()},
                      {"H_round", s_round.to_json()},
                      {"H_main", s_main.to_json()},
                      {"H_Hubb", s_hub.to_json()},
                      {"rho_E_Hubb_plus_n_c_T", c.rho * s_hub.ground + eta * c.rounded.c_T}};
  return outcome;
}

VerifyOutcome verify_outputs(const RunConfig& config) {
  const auto& dir = config.out;
  const nlohmann::json manifest = load_json(dir / "manifest.json");
  const Instance hub_any = instance_from_json(load_json(dir / "hubbard.json"));
  if (!std::holds_alternative<HubbardInstance>(hub_any)) {
    throw ParseError("hubbard.json does not hold a Hubbard instance");
  }
  const HubbardInstance hubbard = std::get<HubbardInstance>(hub_any);
  const CoefficientTensors es_tensors = tensors_from_json(load_json(dir / "tensors.json"));
  if (es_tensors.level != Level::Composite) throw ParseError("tensors.json must be composite-level");

  ChainResult c;
  try {
    c.layout = layout_from_json(load_json(dir / "layout.json"));
    const auto& p = manifest.at("parameters");
    c.alpha = p.at("alpha").get<double>();
    c.beta = p.at("beta").get<double>();
    c.Gamma = p.at("Gamma").get<double>();
    c.eta = config.eta.value_or(p.at("eta").get<int>());
    c.omega_solved = p.at("omega_solved").get<bool>();
    c.rho = manifest.at("rho").get<double>();
    c.c_main_U = manifest.at("c_main_U").get<double>();
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("manifest.json: ") + ex.what());
  }
  if (!verify_layout(c.layout).empty()) throw ValidationError("layout.json violates the layout invariants");
  c.primitive = assemble_primitive_tensors(c.layout);
  c.transform = inv_sqrt_overlap(c.layout, c.primitive.S);
  c.composite = compose_tensors(transform_tensors(c.primitive, c.transform), c.layout);
  c.rounded = rounded_coefficients(c.layout);

  VerifyOutcome outcome = verify_chain(c, es_tensors, hubbard, config);
  write_file(dir / "bounds.json", reports_to_json(outcome.reports).dump(2) + "\n");
  write_file(dir / "spectrum.json", outcome.spectrum.dump(2) + "\n");
  return outcome;
}

}  // namespace esred
