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

#include "esred/fockspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "esred/error.hpp"

namespace esred {

namespace {

void normal_order_into(LadderString term, double coeff,
                       std::map<LadderString, double>& out) {
  for (std::size_t i = 1; i < term.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      const Ladder right = term[j];
      const Ladder left = term[j - 1];
      if (right.dagger && !left.dagger) {
        term[j - 1] = right;
        term[j] = left;
        coeff = -coeff;
        if (right.mode == left.mode) {
          LadderString reduced(term.begin(), term.begin() + (j - 1));
          reduced.insert(reduced.end(), term.begin() + (j + 1), term.end());
          normal_order_into(std::move(reduced), -coeff, out);
        }
      } else if (right.dagger == left.dagger) {
        if (right.mode == left.mode) return;
        if (right.mode > left.mode) {
          term[j - 1] = right;
          term[j] = left;
          coeff = -coeff;
        }
      }
    }
  }
  out[term] += coeff;
}

}  // namespace

std::map<LadderString, double> normal_order(const LadderString& term, double coeff) {
  std::map<LadderString, double> out;
  normal_order_into(term, coeff, out);
  return out;
}

SecondQuantizedHamiltonian::SecondQuantizedHamiltonian(int modes, std::optional<int> eta)
    : modes_(modes), eta_(eta) {
  if (modes < 0 || modes > 62) throw ValidationError("mode count must be in [0, 62]");
  if (eta && (*eta < 0 || *eta > modes)) throw ValidationError("eta must lie in [0, modes]");
}

void SecondQuantizedHamiltonian::add(const LadderString& term, double coeff) {
  if (coeff == 0.0) return;
  for (const Ladder& l : term) {
    if (l.mode < 0 || l.mode >= modes_) throw ValidationError("ladder mode out of range");
  }
  for (const auto& [t, c] : normal_order(term, coeff)) {
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      if (c != 0.0) terms_.emplace(t, c);
      continue;
    }
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

void SecondQuantizedHamiltonian::add_hopping(int p, int q, double coeff) {
  add({cre(p), ann(q)}, coeff);
  add({cre(q), ann(p)}, coeff);
}

void SecondQuantizedHamiltonian::add_density_density(int p, int q, double coeff) {
  add({cre(p), ann(p), cre(q), ann(q)}, coeff);
}

SecondQuantizedHamiltonian& SecondQuantizedHamiltonian::operator+=(
    const SecondQuantizedHamiltonian& o) {
  if (o.modes_ != modes_) throw ValidationError("mode count mismatch");
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

SecondQuantizedHamiltonian& SecondQuantizedHamiltonian::operator-=(
    const SecondQuantizedHamiltonian& o) {
  if (o.modes_ != modes_) throw ValidationError("mode count mismatch");
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

SecondQuantizedHamiltonian& SecondQuantizedHamiltonian::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= s;
  return *this;
}

SecondQuantizedHamiltonian SecondQuantizedHamiltonian::adjoint() const {
  SecondQuantizedHamiltonian out(modes_, eta_);
  for (const auto& [t, c] : terms_) {
    LadderString adj(t.rbegin(), t.rend());
    for (Ladder& l : adj) l.dagger = !l.dagger;
    out.add(adj, c);
  }
  return out;
}

bool SecondQuantizedHamiltonian::is_hermitian(double tol) const {
  const SecondQuantizedHamiltonian diff = *this - adjoint();
  double scale = 1.0;
  for (const auto& [t, c] : terms_) scale = std::max(scale, std::abs(c));
  return std::all_of(diff.terms_.begin(), diff.terms_.end(),
                     [&](const auto& kv) { return std::abs(kv.second) <= tol * scale; });
}

bool SecondQuantizedHamiltonian::conserves_number() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
    const auto creations = std::count_if(kv.first.begin(), kv.first.end(),
                                         [](const Ladder& l) { return l.dagger; });
    return 2 * creations == static_cast<long>(kv.first.size());
  });
}

void SecondQuantizedHamiltonian::prune(double tol) {
  std::erase_if(terms_, [&](const auto& kv) { return std::abs(kv.second) <= tol; });
}

nlohmann::json SecondQuantizedHamiltonian::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [t, c] : terms_) {
    nlohmann::json ops = nlohmann::json::array();
    for (const Ladder& l : t) ops.push_back({l.mode, l.dagger ? 1 : 0});
    terms.push_back({{"ops", ops}, {"coeff", c}});
  }
  nlohmann::json j = {{"modes", modes_}, {"terms", terms}};
  j["eta"] = eta_ ? nlohmann::json(*eta_) : nlohmann::json(nullptr);
  return j;
}

SectorBasis::SectorBasis(int modes, std::optional<int> eta, std::size_t cap)
    : modes_(modes), eta_(eta) {
  if (modes < 0 || modes > 62) throw ValidationError("mode count must be in [0, 62]");
  if (eta && (*eta < 0 || *eta > modes)) {
    throw ValidationError("particle number " + std::to_string(*eta) + " exceeds " +
                          std::to_string(modes) + " modes");
  }
  double dim = 1.0;
  if (eta) {
    for (int k = 0; k < *eta; ++k) dim = dim * (modes - k) / (k + 1);
  } else {
    dim = std::ldexp(1.0, modes);
  }
  if (dim > static_cast<double>(cap)) {
    throw ResourceError("sector dimension " + std::to_string(static_cast<long long>(dim)) +
                        " exceeds cap " + std::to_string(cap));
  }
  states_.reserve(static_cast<std::size_t>(std::llround(dim)));
  if (!eta) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << modes); ++s) states_.push_back(s);
    return;
  }
  if (*eta == 0) {
    states_.push_back(0);
    return;
  }
  // Gosper's hack enumerates fixed-weight words in increasing order.
  std::uint64_t s = (std::uint64_t{1} << *eta) - 1;
  const std::uint64_t limit = std::uint64_t{1} << modes;
  while (s < limit) {
    states_.push_back(s);
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

long SectorBasis::index(std::uint64_t bits) const {
  const auto it = std::lower_bound(states_.begin(), states_.end(), bits);
  if (it == states_.end() || *it != bits) return -1;
  return static_cast<long>(it - states_.begin());
}

int apply_ladder(const LadderString& term, std::uint64_t& bits) {
  int sign = 1;
  for (auto it = term.rbegin(); it != term.rend(); ++it) {
    const std::uint64_t mask = std::uint64_t{1} << it->mode;
    const bool occupied = (bits & mask) != 0;
    if (occupied == it->dagger) return 0;
    if (std::popcount(bits & (mask - 1)) & 1) sign = -sign;
    bits ^= mask;
  }
  return sign;
}

namespace {

struct CompiledTerm {
  const LadderString* ops;
  double coeff;
  std::uint64_t need_set;
  std::uint64_t need_clear;
};

std::vector<CompiledTerm> compile(const SecondQuantizedHamiltonian& h) {
  std::vector<CompiledTerm> out;
  for (const auto& [t, c] : h.terms()) {
    CompiledTerm ct{&t, c, 0, 0};
    // Normal order: annihilations act first on distinct modes; creations
    // whose mode is not annihilated must start empty.
    std::uint64_t annihilated = 0;
    for (const Ladder& l : t) {
      if (!l.dagger) annihilated |= std::uint64_t{1} << l.mode;
    }
    ct.need_set = annihilated;
    for (const Ladder& l : t) {
      const std::uint64_t m = std::uint64_t{1} << l.mode;
      if (l.dagger && !(annihilated & m)) ct.need_clear |= m;
    }
    out.push_back(ct);
  }
  return out;
}

template <typename Sink>
void for_each_element(const SecondQuantizedHamiltonian& h, const SectorBasis& basis,
                      Sink&& sink) {
  if (h.modes() != basis.modes()) throw ValidationError("operator and basis mode counts differ");
  const auto terms = compile(h);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const std::uint64_t s = basis.state(col);
    for (const CompiledTerm& ct : terms) {
      if ((s & ct.need_set) != ct.need_set || (s & ct.need_clear) != 0) continue;
      std::uint64_t bits = s;
      const int sign = apply_ladder(*ct.ops, bits);
      if (sign == 0) continue;
      const long row = basis.index(bits);
      if (row < 0) continue;
      sink(row, static_cast<long>(col), sign * ct.coeff);
    }
  }
}

}  // namespace

SparseMatrix realize(const SecondQuantizedHamiltonian& h, const SectorBasis& basis) {
  std::vector<Eigen::Triplet<double, long>> trip;
  for_each_element(h, basis, [&](long r, long c, double v) { trip.emplace_back(r, c, v); });
  const long dim = static_cast<long>(basis.size());
  SparseMatrix m(dim, dim);
  m.setFromTriplets(trip.begin(), trip.end());
  m.makeCompressed();
  return m;
}

Eigen::MatrixXd realize_dense(const SecondQuantizedHamiltonian& h, const SectorBasis& basis) {
  const long dim = static_cast<long>(basis.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for_each_element(h, basis, [&](long r, long c, double v) { m(r, c) += v; });
  return m;
}

SectorMatrix sector_restrict(const SecondQuantizedHamiltonian& h, int eta, std::size_t cap) {
  if (eta < 0 || eta > h.modes()) {
    throw ValidationError("particle number " + std::to_string(eta) + " outside [0, " +
                          std::to_string(h.modes()) + "]");
  }
  if (!h.conserves_number()) throw ValidationError("operator does not conserve particle number");
  SectorBasis basis(h.modes(), eta, cap);
  SparseMatrix m = realize(h, basis);
  return {std::move(basis), std::move(m)};
}

Eigen::MatrixXd jordan_wigner_matrix(const SecondQuantizedHamiltonian& h) {
  if (h.modes() > 14) throw ResourceError("Jordan-Wigner matrix limited to 14 modes");
  return realize_dense(h, SectorBasis(h.modes(), std::nullopt));
}

SecondQuantizedHamiltonian number_operator(int modes) {
  SecondQuantizedHamiltonian h(modes);
  for (int m = 0; m < modes; ++m) h.add_number(m, 1.0);
  return h;
}

SecondQuantizedHamiltonian build_hubbard(const HubbardInstance& inst) {
  const int n = inst.graph.n();
  SecondQuantizedHamiltonian h(2 * n, inst.eta);
  for (int i = 1; i <= n; ++i) {
    h.add_density_density(spin_mode(i, +1), spin_mode(i, -1), inst.u0);
  }
  for (const Edge& e : inst.graph.edges()) {
    for (int s : {+1, -1}) h.add_hopping(spin_mode(e.i, s), spin_mode(e.j, s), e.weight);
  }
  return h;
}

SecondQuantizedHamiltonian build_es_hamiltonian(const CoefficientTensors& tensors) {
  const int n = tensors.size();
  if (tensors.T.rows() != n || tensors.V.rows() != n || tensors.U.size() != n) {
    throw ValidationError("coefficient tensor dimensions disagree");
  }
  SecondQuantizedHamiltonian h(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double t = tensors.T(i, j) + tensors.V(i, j);
      if (t == 0.0) continue;
      for (int s = 0; s < 2; ++s) h.add({cre(2 * i + s), ann(2 * j + s)}, t);
    }
  }
  tensors.U.for_each_nonzero([&](int i, int j, int k, int l, double v) {
    for (int tau = 0; tau < 2; ++tau) {
      for (int sigma = 0; sigma < 2; ++sigma) {
        h.add({cre(2 * i + tau), cre(2 * j + sigma), ann(2 * k + sigma), ann(2 * l + tau)},
              0.5 * v);
      }
    }
  });
  return h;
}

SecondQuantizedHamiltonian build_rounded(const RoundedCoefficients& rc) {
  SecondQuantizedHamiltonian h(2 * rc.n);
  for (int m = 0; m < 2 * rc.n; ++m) h.add_number(m, rc.c_T);
  for (std::size_t e = 0; e < rc.edges.size(); ++e) {
    for (int s = 0; s < 2; ++s) {
      h.add_hopping(2 * rc.edges[e][0] + s, 2 * rc.edges[e][1] + s, rc.t_edge[e]);
    }
  }
  std::vector<std::array<int, 4>> tuples = rc.support();
  for (int i = 0; i < rc.n; ++i) tuples.push_back({i, i, i, i});
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  for (const auto& [i, j, k, l] : tuples) {
    const double v = rc.u(i, j, k, l);
    if (v == 0.0) continue;
    for (int tau = 0; tau < 2; ++tau) {
      for (int sigma = 0; sigma < 2; ++sigma) {
        h.add({cre(2 * i + tau), cre(2 * j + sigma), ann(2 * k + sigma), ann(2 * l + tau)},
              0.5 * v);
      }
    }
  }
  return h;
}

double main_onsite(double beta) { return 0.25 * coulomb_pair(beta, 0.0); }

SecondQuantizedHamiltonian build_main(const RoundedCoefficients& rc) {
  SecondQuantizedHamiltonian h(2 * rc.n);
  const double cu = main_onsite(rc.beta);
  for (int i = 0; i < rc.n; ++i) h.add_density_density(2 * i, 2 * i + 1, cu);
  for (std::size_t e = 0; e < rc.edges.size(); ++e) {
    for (int s = 0; s < 2; ++s) {
      h.add_hopping(2 * rc.edges[e][0] + s, 2 * rc.edges[e][1] + s, rc.t_edge[e]);
    }
  }
  return h;
}

SecondQuantizedHamiltonian build_classical(const WeightedGraph& graph, double u1, double u2) {
  const int n = graph.n();
  SecondQuantizedHamiltonian h(2 * n);
  for (int i = 1; i <= n; ++i) h.add_density_density(spin_mode(i, +1), spin_mode(i, -1), u1);
  for (const Edge& e : graph.edges()) {
    for (int s : {+1, -1}) {
      for (int t : {+1, -1}) h.add_density_density(spin_mode(e.i, s), spin_mode(e.j, t), u2);
    }
  }
  return h;
}

SecondQuantizedHamiltonian build_classical(const OrbitalLayout& layout,
                                           const RoundedCoefficients& rc) {
  if (!layout.uniform_gamma()) throw ValidationError("classical Hamiltonian needs a uniform gamma");
  const double u2 = rc.u_coul.empty() ? 0.0 : rc.u_coul.front();
  return build_classical(layout.graph(), rc.c_U, u2);
}

std::string matrix_to_csv(const SparseMatrix& m) {
  std::ostringstream os;
  os << "row,col,value\n";
  char buf[96];
  for (long c = 0; c < m.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) {
      std::snprintf(buf, sizeof buf, "%ld,%ld,%.17g\n", it.row(), it.col(), it.value());
      os << buf;
    }
  }
  return os.str();
}

}  // namespace esred
