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

#include "esred/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <regex>
#include <sstream>

#include "esred/error.hpp"

namespace esred {

namespace {

constexpr double kPi = std::numbers::pi;

double norm_const(double z) { return std::pow(2.0 * z / kPi, 0.75); }

double squared_distance(const Point3& a, const Point3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return dx * dx + dy * dy + dz * dz;
}

// Gaussian product center as a + w (b - a).
Point3 product_center(const Point3& a, double za, const Point3& b, double zb) {
  const double w = zb / (za + zb);
  return {a.x + w * (b.x - a.x), a.y + w * (b.y - a.y), a.z + w * (b.z - a.z)};
}

double floor_to_zero(double v) {
  return std::abs(v) < kUnderflowFloor ? 0.0 : v;
}

}  // namespace

double boys0(double x) {
  if (x < 0.0) throw DomainError("boys0 requires x >= 0");
  if (x < 1e-6) return 1.0 - x / 3.0 + x * x / 10.0;
  const double s = std::sqrt(x);
  return 0.5 * std::sqrt(kPi) / s * std::erf(s);
}

double overlap(double z1, double z2, double x) {
  const double zs = z1 + z2;
  const double mu = z1 * z2 / zs;
  return std::pow(2.0 * std::sqrt(z1 * z2) / zs, 1.5) * std::exp(-mu * x * x);
}

double kinetic(double z1, double z2, double x) {
  const double zs = z1 + z2;
  const double mu = z1 * z2 / zs;
  const double pre = std::pow(2.0, 1.5) * std::pow(z1 * z2, 1.75) / std::pow(zs, 2.5);
  return pre * (3.0 - 2.0 * mu * x * x) * std::exp(-mu * x * x);
}

double coulomb_pair(double z, double x) {
  return std::sqrt(4.0 * z / kPi) * boys0(z * x * x);
}

double exchange_pair(double z, double x) {
  return std::exp(-z * x * x) * coulomb_pair(z, 0.0);
}

double other_pair(double z, double x) {
  return std::exp(-z * x * x / 2.0) * coulomb_pair(z, x / 2.0);
}

double eri_four_center(const Point3& c1, const Point3& c2, const Point3& c3,
                       const Point3& c4, double z1, double z2, double z3,
                       double z4) {
  const double p = z1 + z4;
  const double q = z2 + z3;
  const double k14 = std::exp(-z1 * z4 / p * squared_distance(c1, c4));
  const double k23 = std::exp(-z2 * z3 / q * squared_distance(c2, c3));
  if (k14 == 0.0 || k23 == 0.0) return 0.0;
  const Point3 P = product_center(c1, z1, c4, z4);
  const Point3 Q = product_center(c2, z2, c3, z3);
  const double norms = norm_const(z1) * norm_const(z2) * norm_const(z3) * norm_const(z4);
  const double pre = 2.0 * std::pow(kPi, 2.5) / (p * q * std::sqrt(p + q));
  return norms * k14 * k23 * pre * boys0(p * q / (p + q) * squared_distance(P, Q));
}

TwoBodyTensor::TwoBodyTensor(int size, bool dense) : n_(size), dense_(dense) {
  if (size < 0) throw ValidationError("tensor size must be nonnegative");
  if (dense_) {
    const std::size_t n = static_cast<std::size_t>(size);
    values_.assign(n * n * n * n, 0.0);
  }
}

double TwoBodyTensor::operator()(int a, int b, int c, int d) const {
  if (dense_) return values_[flat(a, b, c, d)];
  const auto it = sparse_.find({a, b, c, d});
  return it == sparse_.end() ? 0.0 : it->second;
}

void TwoBodyTensor::set(int a, int b, int c, int d, double value) {
  if (dense_) {
    values_[flat(a, b, c, d)] = value;
  } else if (value == 0.0) {
    sparse_.erase({a, b, c, d});
  } else {
    sparse_[{a, b, c, d}] = value;
  }
}

void TwoBodyTensor::add(int a, int b, int c, int d, double value) {
  if (value == 0.0) return;
  if (dense_) {
    values_[flat(a, b, c, d)] += value;
  } else {
    auto& slot = sparse_[{a, b, c, d}];
    slot += value;
    if (slot == 0.0) sparse_.erase({a, b, c, d});
  }
}

void TwoBodyTensor::set_symmetric(int a, int b, int c, int d, double value) {
  set(a, b, c, d, value);
  set(b, a, d, c, value);
  set(d, c, b, a, value);
  set(c, d, a, b, value);
  set(d, b, c, a, value);
  set(b, d, a, c, value);
  set(a, c, b, d, value);
  set(c, a, d, b, value);
}

std::size_t TwoBodyTensor::nonzero_count() const {
  if (!dense_) return sparse_.size();
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](double v) { return v != 0.0; }));
}

double TwoBodyTensor::max_abs() const {
  double m = 0.0;
  for_each_nonzero([&](int, int, int, int, double v) { m = std::max(m, std::abs(v)); });
  return m;
}

CoefficientTensors assemble_primitive_tensors(const OrbitalLayout& layout) {
  const int N = layout.primitive_count();
  CoefficientTensors out;
  out.level = Level::Primitive;
  out.S = Eigen::MatrixXd::Zero(N, N);
  out.T = Eigen::MatrixXd::Zero(N, N);
  out.V = Eigen::MatrixXd::Zero(N, N);
  out.U = TwoBodyTensor(N, N <= kDensePrimitiveLimit);

  double z_max = 0.0;
  for (int a = 0; a < N; ++a) z_max = std::max(z_max, layout.exponent(a));

  // Charge distributions a(r) d(r) whose overlap survives the floor.
  struct Pair {
    int a, d;
    double s;
  };
  std::vector<Pair> pairs;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b <= a; ++b) {
      const double x = distance(layout.center(a), layout.center(b));
      const double za = layout.exponent(a);
      const double zb = layout.exponent(b);
      const double s = floor_to_zero(overlap(za, zb, x));
      const double t = floor_to_zero(kinetic(za, zb, x));
      out.S(a, b) = out.S(b, a) = s;
      out.T(a, b) = out.T(b, a) = t;
      if (s * (2.0 / std::sqrt(kPi)) * std::sqrt(2.0 * z_max) >= kUnderflowFloor) {
        pairs.push_back({a, b, s});
      }
    }
  }
  for (int a = 0; a < N; ++a) out.S(a, a) = 1.0;

  // Chemists' (ad|bc) = u(a, b, c, d); loop over canonical pairs of pairs.
  for (std::size_t P = 0; P < pairs.size(); ++P) {
    for (std::size_t Q = 0; Q <= P; ++Q) {
      const int a = pairs[P].a;
      const int d = pairs[P].d;
      const int b = pairs[Q].a;
      const int c = pairs[Q].d;
      const double v = floor_to_zero(eri_four_center(
          layout.center(a), layout.center(b), layout.center(c), layout.center(d),
          layout.exponent(a), layout.exponent(b), layout.exponent(c),
          layout.exponent(d)));
      if (v != 0.0) out.U.set_symmetric(a, b, c, d, v);
    }
  }
  return out;
}

CoefficientTensors compose_tensors(const CoefficientTensors& prim,
                                   const OrbitalLayout& layout) {
  if (prim.level != Level::Primitive) {
    throw ValidationError("compose_tensors expects primitive-level tensors");
  }
  const int N = layout.primitive_count();
  if (prim.size() != N) throw ValidationError("tensor size does not match layout");
  const int n = layout.n();

  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, N);
  for (int k = 0; k < N; ++k) C(layout.vertex_of(k), k) = layout.amplitude(k);

  CoefficientTensors out;
  out.level = Level::Composite;
  out.S = C * prim.S * C.transpose();
  out.T = C * prim.T * C.transpose();
  out.V = C * prim.V * C.transpose();
  out.U = TwoBodyTensor(n, n <= kDenseCompositeLimit);
  std::vector<double> psi(N);
  std::vector<int> vtx(N);
  for (int k = 0; k < N; ++k) {
    psi[k] = layout.amplitude(k);
    vtx[k] = layout.vertex_of(k);
  }
  prim.U.for_each_nonzero([&](int a, int b, int c, int d, double v) {
    out.U.add(vtx[a], vtx[b], vtx[c], vtx[d], psi[a] * psi[b] * psi[c] * psi[d] * v);
  });
  return out;
}

namespace {

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j, int n, const char* name) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw ParseError(std::string("tensors: matrix ") + name + " has wrong shape");
  }
  Eigen::MatrixXd m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != n) {
      throw ParseError(std::string("tensors: matrix ") + name + " has wrong shape");
    }
    for (int c = 0; c < n; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

}  // namespace

nlohmann::json tensors_to_json(const CoefficientTensors& tensors, int eta) {
  nlohmann::json u = nlohmann::json::array();
  tensors.U.for_each_nonzero([&](int a, int b, int c, int d, double v) {
    u.push_back({a, b, c, d, v});
  });
  return {{"level", tensors.level == Level::Primitive ? "primitive" : "composite"},
          {"N", tensors.size()},
          {"eta", eta},
          {"u_convention", "u[a][b][c][d] = int a(r) b(s) c(s) d(r) / |r - s|, 0-indexed"},
          {"S", matrix_to_json(tensors.S)},
          {"T", matrix_to_json(tensors.T)},
          {"V", matrix_to_json(tensors.V)},
          {"U", u}};
}

CoefficientTensors tensors_from_json(const nlohmann::json& j) {
  try {
    CoefficientTensors out;
    const std::string level = j.at("level").get<std::string>();
    if (level == "primitive") {
      out.level = Level::Primitive;
    } else if (level == "composite") {
      out.level = Level::Composite;
    } else {
      throw ParseError("tensors: unknown level '" + level + "'");
    }
    const int n = j.at("N").get<int>();
    if (n < 0) throw ParseError("tensors: negative N");
    out.S = matrix_from_json(j.at("S"), n, "S");
    out.T = matrix_from_json(j.at("T"), n, "T");
    out.V = matrix_from_json(j.at("V"), n, "V");
    const int limit =
        out.level == Level::Primitive ? kDensePrimitiveLimit : kDenseCompositeLimit;
    out.U = TwoBodyTensor(n, n <= limit);
    for (const auto& e : j.at("U")) {
      if (!e.is_array() || e.size() != 5) throw ParseError("tensors: bad U entry");
      const int idx[4] = {e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                          e[3].get<int>()};
      for (int k : idx) {
        if (k < 0 || k >= n) throw ParseError("tensors: U index out of range");
      }
      out.U.set(idx[0], idx[1], idx[2], idx[3], e[4].get<double>());
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("tensors: ") + ex.what());
  }
}

std::string tensors_to_fcidump(const CoefficientTensors& tensors, int eta) {
  const int n = tensors.size();
  std::ostringstream os;
  os << "&FCI NORB=" << n << ",NELEC=" << eta << ",MS2=0,\n ORBSYM=";
  for (int i = 0; i < n; ++i) os << "1,";
  os << "\n ISYM=1,\n&END\n";
  char line[128];
  auto emit = [&](double v, int i, int j, int k, int l) {
    std::snprintf(line, sizeof line, "%24.16E %4d %4d %4d %4d\n", v, i, j, k, l);
    os << line;
  };
  // (ij|kl) = u[i][k][l][j]
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const int ij = i * (i + 1) / 2 + j;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l <= k; ++l) {
          const int kl = k * (k + 1) / 2 + l;
          if (kl > ij) continue;
          const double v = tensors.U(i, k, l, j);
          if (v != 0.0) emit(v, i + 1, j + 1, k + 1, l + 1);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double h = tensors.T(i, j) + tensors.V(i, j);
      if (h != 0.0) emit(h, i + 1, j + 1, 0, 0);
    }
  }
  emit(0.0, 0, 0, 0, 0);
  return os.str();
}

CoefficientTensors tensors_from_fcidump(const std::string& text, int* eta) {
  const auto end = text.find("&END");
  if (end == std::string::npos) throw ParseError("fcidump: missing &END");
  const std::string header = text.substr(0, end);
  std::smatch m;
  if (!std::regex_search(header, m, std::regex(R"(NORB\s*=\s*(\d+))"))) {
    throw ParseError("fcidump: missing NORB");
  }
  const int n = std::stoi(m[1]);
  if (eta != nullptr) {
    *eta = std::regex_search(header, m, std::regex(R"(NELEC\s*=\s*(\d+))"))
               ? std::stoi(m[1])
               : 0;
  }
  CoefficientTensors out;
  out.level = Level::Composite;
  out.S = Eigen::MatrixXd::Identity(n, n);
  out.T = Eigen::MatrixXd::Zero(n, n);
  out.V = Eigen::MatrixXd::Zero(n, n);
  out.U = TwoBodyTensor(n, n <= kDenseCompositeLimit);

  std::istringstream is(text.substr(end + 4));
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    double v;
    int i, j, k, l;
    if (!(ls >> v >> i >> j >> k >> l)) throw ParseError("fcidump: bad line '" + line + "'");
    if (i < 0 || j < 0 || k < 0 || l < 0 || i > n || j > n || k > n || l > n) {
      throw ParseError("fcidump: index out of range");
    }
    if (i == 0) continue;
    if (k == 0) {
      out.T(i - 1, j - 1) = out.T(j - 1, i - 1) = v;
    } else {
      out.U.set_symmetric(i - 1, k - 1, l - 1, j - 1, v);
    }
  }
  return out;
}

}  // namespace esred
