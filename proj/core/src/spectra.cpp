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

#include "esred/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

#include "esred/error.hpp"

namespace esred {

nlohmann::json SpectrumReport::to_json() const {
  nlohmann::json j = {{"ground", ground},
                      {"eigenvalues", eigenvalues},
                      {"dimension", dimension},
                      {"method", method == SpectrumMethod::Dense ? "dense" : "iterative"},
                      {"residual", residual}};
  j["eta"] = eta ? nlohmann::json(*eta) : nlohmann::json(nullptr);
  return j;
}

namespace {

SpectrumReport dense_solve(const Eigen::MatrixXd& m, int k) {
  SpectrumReport r;
  r.dimension = m.rows();
  r.method = SpectrumMethod::Dense;
  if (m.rows() == 0) return r;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw HypothesisError("dense eigensolver failed");
  const int count = std::min<long>(k, m.rows());
  for (int i = 0; i < count; ++i) {
    r.eigenvalues.push_back(es.eigenvalues()(i));
    const double res = (m * es.eigenvectors().col(i) - es.eigenvalues()(i) * es.eigenvectors().col(i)).norm();
    r.residual = std::max(r.residual, res);
  }
  r.ground = r.eigenvalues.front();
  return r;
}

void orthogonalize(Eigen::VectorXd& w, const Eigen::MatrixXd& V, long cols,
                   const std::vector<Eigen::VectorXd>& locked) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& x : locked) w -= x.dot(w) * x;
    if (cols > 0) w -= V.leftCols(cols) * (V.leftCols(cols).transpose() * w);
  }
}

SpectrumReport lanczos(const SparseMatrix& A, int k, const EigenOptions& opts) {
  const long dim = A.rows();
  SpectrumReport rep;
  rep.dimension = dim;
  rep.method = SpectrumMethod::Iterative;
  k = static_cast<int>(std::min<long>(k, dim));
  std::vector<Eigen::VectorXd> locked;
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  for (int want = 0; want < k; ++want) {
    Eigen::VectorXd v(dim);
    for (long i = 0; i < dim; ++i) v(i) = gauss(rng);
    orthogonalize(v, Eigen::MatrixXd(dim, 0), 0, locked);
    v.normalize();

    const long m = std::min<long>(opts.krylov, dim - static_cast<long>(locked.size()));
    bool converged = false;
    double theta = 0.0;
    Eigen::VectorXd x;
    double res = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < opts.max_restarts && !converged; ++restart) {
      Eigen::MatrixXd V(dim, m);
      std::vector<double> alpha, beta;
      V.col(0) = v;
      long used = m;
      for (long i = 0; i < m; ++i) {
        Eigen::VectorXd w = A * V.col(i);
        const double a = V.col(i).dot(w);
        alpha.push_back(a);
        orthogonalize(w, V, i + 1, locked);
        const double b = w.norm();
        if (i + 1 == m) break;
        if (b < 1e-13 * std::max(1.0, std::abs(a))) {
          used = i + 1;
          break;
        }
        beta.push_back(b);
        V.col(i + 1) = w / b;
      }
      Eigen::MatrixXd Tm = Eigen::MatrixXd::Zero(used, used);
      for (long i = 0; i < used; ++i) {
        Tm(i, i) = alpha[i];
        if (i + 1 < used) Tm(i, i + 1) = Tm(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Tm);
      theta = es.eigenvalues()(0);
      x = V.leftCols(used) * es.eigenvectors().col(0);
      orthogonalize(x, Eigen::MatrixXd(dim, 0), 0, locked);
      x.normalize();
      theta = x.dot(A * x);
      res = (A * x - theta * x).norm();
      converged = res <= opts.tolerance;
      v = x;
    }
    if (!converged) {
      throw HypothesisError("Lanczos did not reach residual " + std::to_string(opts.tolerance) +
                            " (got " + std::to_string(res) + ")");
    }
    locked.push_back(x);
    rep.eigenvalues.push_back(theta);
    rep.residual = std::max(rep.residual, res);
  }
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
  if (!rep.eigenvalues.empty()) rep.ground = rep.eigenvalues.front();
  return rep;
}

}  // namespace

SpectrumReport lowest_eigenvalues(const SparseMatrix& m, int k, const EigenOptions& opts) {
  if (m.rows() != m.cols()) throw ValidationError("matrix must be square");
  if (k < 1) throw ValidationError("need k >= 1");
  if (m.rows() <= opts.dense_limit && !opts.force_iterative) {
    return dense_solve(Eigen::MatrixXd(m), k);
  }
  return lanczos(m, k, opts);
}

SpectrumReport lowest_eigenvalues(const Eigen::MatrixXd& m, int k) {
  if (m.rows() != m.cols()) throw ValidationError("matrix must be square");
  return dense_solve(m, k);
}

SpectrumReport low_spectrum(const SecondQuantizedHamiltonian& h, int eta, int k,
                            const EigenOptions& opts) {
  const SectorMatrix sm = sector_restrict(h, eta, opts.cap);
  SpectrumReport r = lowest_eigenvalues(sm.matrix, k, opts);
  r.eta = eta;
  return r;
}

SpectrumReport ground_energy(const SecondQuantizedHamiltonian& h, int eta,
                             const EigenOptions& opts) {
  return low_spectrum(h, eta, 1, opts);
}

double spectral_norm(const SparseMatrix& m, const EigenOptions& opts) {
  if (m.rows() == 0) return 0.0;
  if (m.rows() <= opts.dense_limit && !opts.force_iterative) {
    return spectral_norm(Eigen::MatrixXd(m));
  }
  const double lo = lowest_eigenvalues(m, 1, opts).ground;
  const SparseMatrix neg = -m;
  const double hi = -lowest_eigenvalues(neg, 1, opts).ground;
  return std::max(std::abs(lo), std::abs(hi));
}

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_norm_diff(const SecondQuantizedHamiltonian& h1,
                          const SecondQuantizedHamiltonian& h2, std::optional<int> eta,
                          const EigenOptions& opts) {
  if (h1.modes() != h2.modes()) throw ValidationError("operators act on different mode counts");
  const SecondQuantizedHamiltonian diff = h1 - h2;
  const SectorBasis basis(diff.modes(), eta, opts.cap);
  return spectral_norm(realize(diff, basis), opts);
}

SpectrumReport low_spectrum_projection(const SparseMatrix& m, double threshold,
                                       const EigenOptions& opts) {
  SpectrumReport r;
  const long dim = m.rows();
  if (dim <= opts.dense_limit && !opts.force_iterative) {
    r = dense_solve(Eigen::MatrixXd(m), static_cast<int>(dim));
  } else {
    for (int k = 8;; k *= 2) {
      r = lanczos(m, k, opts);
      if (r.eigenvalues.back() > threshold || static_cast<long>(r.eigenvalues.size()) == dim) break;
      if (k >= 512) throw ResourceError("more than 512 eigenvalues below threshold");
    }
  }
  std::erase_if(r.eigenvalues, [&](double e) { return e > threshold; });
  r.ground = r.eigenvalues.empty() ? std::numeric_limits<double>::quiet_NaN() : r.eigenvalues.front();
  return r;
}

SpectrumReport low_spectrum_projection(const SecondQuantizedHamiltonian& h, int eta,
                                       double threshold, const EigenOptions& opts) {
  const SectorMatrix sm = sector_restrict(h, eta, opts.cap);
  SpectrumReport r = low_spectrum_projection(sm.matrix, threshold, opts);
  r.eta = eta;
  return r;
}

}  // namespace esred
