// Copyright 2026 The qpqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Random generators shared by the test binaries. Everything here is
// test-only and deliberately independent of the library's own algorithms.

#include <array>
#include <cmath>
#include <random>

#include "qpqc/channels.hpp"
#include "qpqc/qmath.hpp"

namespace qpqc::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260416);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Vec3 random_unit() {
  std::normal_distribution<double> n;
  Vec3 v{n(rng()), n(rng()), n(rng())};
  return (1.0 / norm(v)) * v;
}

/// Uniform in the Bloch ball of the given radius.
inline BlochVector random_bloch(double radius = 1.0) {
  return BlochVector(radius * std::cbrt(uniform(0.0, 1.0)) * random_unit());
}

inline DensityOperator random_density() { return bloch_to_density(random_bloch()); }

/// Rotation matrix from a random unit quaternion (Rodrigues form).
inline Mat3 random_rotation() {
  std::normal_distribution<double> n;
  double w = n(rng()), x = n(rng()), y = n(rng()), z = n(rng());
  const double len = std::sqrt(w * w + x * x + y * y + z * z);
  w /= len, x /= len, y /= len, z /= len;
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
           {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
           {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}}};
}

/// Uniform lambda inside the CP tetrahedron: convex combination of its
/// vertices I, X, Y, Z with Dirichlet(1,1,1,1) weights.
inline PauliDiagonal random_cp_lambda() {
  std::exponential_distribution<double> e;
  std::array<double, 4> w{e(rng()), e(rng()), e(rng()), e(rng())};
  const double s = w[0] + w[1] + w[2] + w[3];
  for (auto& v : w) v /= s;
  return {w[0] + w[1] - w[2] - w[3], w[0] - w[1] + w[2] - w[3], w[0] - w[1] - w[2] + w[3]};
}

using Mat4 = std::array<std::array<double, 4>, 4>;

/// Random real orthogonal 4x4 by Gram-Schmidt on Gaussian rows.
inline Mat4 random_orthogonal4() {
  std::normal_distribution<double> n;
  Mat4 o{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (auto& v : o[i]) v = n(rng());
    for (std::size_t k = 0; k < i; ++k) {
      double d = 0.0;
      for (std::size_t j = 0; j < 4; ++j) d += o[i][j] * o[k][j];
      for (std::size_t j = 0; j < 4; ++j) o[i][j] -= d * o[k][j];
    }
    double len = 0.0;
    for (double v : o[i]) len += v * v;
    for (auto& v : o[i]) v /= std::sqrt(len);
  }
  return o;
}

/// Another random-unitary decomposition of the Pauli channel with weights p:
/// Kraus freedom with W = O diag(1, i, i, i) keeps every new Kraus operator
/// of the form c0 I + i b.sigma (c0, b real), i.e. proportional to a unitary.
inline RandomUnitaryChannel remix(const PauliProbabilities& p, const Mat4& o) {
  std::vector<ChannelTerm> terms;
  for (std::size_t k = 0; k < 4; ++k) {
    Mat2 m = Complex(o[k][0] * std::sqrt(p[0]), 0.0) * pauli(0);
    for (std::size_t j = 1; j < 4; ++j)
      m = m + Complex(0.0, o[k][j] * std::sqrt(p[j])) * pauli(j);
    double q = 0.0;
    for (std::size_t j = 0; j < 4; ++j) q += o[k][j] * o[k][j] * p[j];
    if (q < 1e-14) {
      terms.push_back({0.0, QubitUnitary::identity()});
      continue;
    }
    terms.push_back({q, QubitUnitary(Complex(1.0 / std::sqrt(q), 0.0) * m, 1e-8)});
  }
  return RandomUnitaryChannel(std::move(terms));
}

}  // namespace qpqc::testing
