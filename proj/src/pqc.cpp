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

#include "qpqc/pqc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qpqc {

namespace {

constexpr double kTiny = 1e-12;

struct SymmetricEigen3 {
  Vec3 values;
  Mat3 vectors;  // column j is the eigenvector of values[j]
};

// Cyclic Jacobi for a real symmetric 3x3 matrix.
SymmetricEigen3 symmetric_eigen3(Mat3 a) {
  Mat3 v = identity3();
  for (int sweep = 0; sweep < 100; ++sweep) {
    const double off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double apq = a[p][q];
        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (std::size_t r = 0; r < 3; ++r) {
          if (r != p && r != q) {
            const double arp = a[r][p];
            const double arq = a[r][q];
            a[r][p] = a[p][r] = c * arp - s * arq;
            a[r][q] = a[q][r] = s * arp + c * arq;
          }
          const double vrp = v[r][p];
          const double vrq = v[r][q];
          v[r][p] = c * vrp - s * vrq;
          v[r][q] = s * vrp + c * vrq;
        }
      }
    }
  }
  return {{a[0][0], a[1][1], a[2][2]}, v};
}

Vec3 unit(const Vec3& v) { return (1.0 / norm(v)) * v; }

// Some unit vector orthogonal to u.
Vec3 any_orthogonal(const Vec3& u) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(u[i]) < std::abs(u[k])) k = i;
  Vec3 e{0.0, 0.0, 0.0};
  e[k] = 1.0;
  return unit(e - dot(e, u) * u);
}

// Proper rotation sending e_x to a and e_y to b (a, b orthonormal).
Mat3 frame(const Vec3& a, const Vec3& b) {
  const Vec3 c = cross(a, b);
  return {{{a[0], b[0], c[0]}, {a[1], b[1], c[1]}, {a[2], b[2], c[2]}}};
}

PqcSolution finish(UnitalChannel channel, const Vec3& ciphertext) {
  PqcSolution s{channel, channel.decomposition(), BlochVector(ciphertext), 0.0, 0.0};
  s.key_entropy = shannon_entropy(s.decomposition.probabilities());
  s.theta = s.ciphertext.norm();
  return s;
}

}  // namespace

TpHullDescriptor classify(const PlaintextSet& set, double tol) {
  if (set.states.empty()) throw InvalidArgument("plaintext set is empty");
  const Vec3 r1 = set.states.front().r();
  std::vector<Vec3> diffs;
  Mat3 scatter{};
  for (const auto& s : set.states) {
    const Vec3 d = s.r() - r1;
    diffs.push_back(d);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) scatter[i][j] += d[i] * d[j];
  }
  const auto eig = symmetric_eigen3(scatter);

  std::array<std::size_t, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return eig.values[a] > eig.values[b]; });

  TpHullDescriptor hull;
  for (std::size_t idx : order) {
    if (std::sqrt(std::max(eig.values[idx], 0.0)) <= tol) continue;
    Vec3 b{eig.vectors[0][idx], eig.vectors[1][idx], eig.vectors[2][idx]};
    b = unit(b);
    for (const auto& d : diffs) {
      const double proj = dot(d, b);
      if (std::abs(proj) > tol) {
        if (proj < 0.0) b = -1.0 * b;
        break;
      }
    }
    hull.basis.push_back(b);
  }
  hull.affine_dim = static_cast<int>(hull.basis.size());

  Vec3 anchor = r1;
  if (hull.affine_dim == 3) {
    anchor = {0.0, 0.0, 0.0};
  } else {
    for (const auto& b : hull.basis) anchor = anchor - dot(r1, b) * b;
  }
  hull.anchor = BlochVector(anchor);
  hull.delta = norm(anchor);
  return hull;
}

VerifyResult verify_pqc(const RandomUnitaryChannel& ch, const PlaintextSet& set,
                        double tol) {
  if (set.states.empty()) throw InvalidArgument("plaintext set is empty");
  VerifyResult res;
  const DensityOperator first = apply(ch, bloch_to_density(set.states.front()));
  res.ciphertext = density_to_bloch(first);
  for (const auto& s : set.states) {
    const double d = trace_distance(apply(ch, bloch_to_density(s)), first);
    res.max_deviation = std::max(res.max_deviation, d);
  }
  res.ok = res.max_deviation <= tol;
  return res;
}

KeyEntropyBounds key_entropy_bounds(const RandomUnitaryChannel& ch,
                                    const DensityOperator& ciphertext) {
  return {entropy_exchange(ch, DensityOperator::maximally_mixed()),
          von_neumann_entropy(ciphertext)};
}

double general_pqc_entropy(double a, double b) {
  if (!(std::abs(a) <= 1.0 + kTolProb && std::abs(b) <= 1.0 + kTolProb))
    throw CpViolation("general PQC requires |a| <= 1 and |b| <= 1");
  return 2.0 - 0.25 * (h_function(a) + h_function(b));
}

PqcSolution optimal_pqc(const TpHullDescriptor& hull, double theta) {
  const double delta = hull.delta;
  if (!std::isfinite(theta) || theta < -kTolState || theta > delta + kTolState)
    throw InfeasibleTheta("theta = " + std::to_string(theta) +
                          " is outside [0, delta = " + std::to_string(delta) + "]");
  theta = std::clamp(theta, 0.0, delta);
  const Vec3 anchor = hull.anchor.r();

  switch (hull.affine_dim) {
    case 0: {
      if (std::abs(theta - delta) > kTolState)
        throw InfeasibleTheta("a single plaintext is only mapped onto itself; theta must equal delta");
      return finish(UnitalChannel{}, anchor);
    }
    case 1: {
      const Vec3 u = hull.basis.at(0);
      Vec3 m;
      if (delta > kTiny) {
        const Vec3 a = (1.0 / delta) * anchor;
        const double c = theta / delta;
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        m = unit(c * a + s * cross(u, a));
      } else {
        m = any_orthogonal(u);
      }
      const Mat3 r = frame(m, u);
      return finish(UnitalChannel{r, {1.0, 0.0, 0.0}, transpose(r)}, dot(anchor, m) * m);
    }
    case 2: {
      Vec3 axis;
      double lambda;
      if (delta > kTiny) {
        axis = (1.0 / delta) * anchor;
        lambda = theta / delta;
      } else {
        axis = unit(cross(hull.basis.at(0), hull.basis.at(1)));
        lambda = 1.0;
      }
      const Mat3 r = frame(axis, any_orthogonal(axis));
      return finish(UnitalChannel{r, {lambda, 0.0, 0.0}, transpose(r)}, lambda * anchor);
    }
    case 3:
      return finish(UnitalChannel{identity3(), {0.0, 0.0, 0.0}, identity3()},
                    {0.0, 0.0, 0.0});
    default:
      throw InvalidArgument("affine dimension must be between 0 and 3");
  }
}

std::vector<std::pair<double, double>> optimal_entropy_curve(
    HullKind kind, double delta, const std::vector<double>& theta_grid) {
  if (!(delta > 0.0)) throw InvalidArgument("entropy curve requires delta > 0");
  std::vector<std::pair<double, double>> out;
  out.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    if (!(theta >= 0.0 && theta <= delta + kTolState))
      throw InfeasibleTheta("theta outside [0, delta]");
    const double t = std::min(theta / delta, 1.0);
    out.emplace_back(theta, kind == HullKind::line ? 1.0 : 2.0 - 0.5 * h_function(t));
  }
  return out;
}

}  // namespace qpqc
