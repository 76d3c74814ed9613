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

#include "qpqc/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace qpqc {

namespace {

constexpr double kJacobiOffTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

// ---- 3-vectors ------------------------------------------------------------

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

Mat3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 transpose(const Mat3& m) {
  Mat3 t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Vec3 operator*(const Mat3& m, const Vec3& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

double determinant(const Mat3& m) { return dot(m[0], cross(m[1], m[2])); }

bool is_rotation(const Mat3& m, double tol) {
  return max_abs_diff(m * transpose(m), identity3()) <= tol &&
         std::abs(determinant(m) - 1.0) <= tol;
}

// ---- 2x2 complex ----------------------------------------------------------

Mat2 Mat2::adjoint() const {
  return Mat2{{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 z;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) z(r, c) = x(r, 0) * y(0, c) + x(r, 1) * y(1, c);
  return z;
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  Mat2 z;
  for (std::size_t i = 0; i < 4; ++i) z.a[i] = x.a[i] + y.a[i];
  return z;
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  Mat2 z;
  for (std::size_t i = 0; i < 4; ++i) z.a[i] = x.a[i] - y.a[i];
  return z;
}

Mat2 operator*(Complex s, const Mat2& x) {
  Mat2 z;
  for (std::size_t i = 0; i < 4; ++i) z.a[i] = s * x.a[i];
  return z;
}

double max_abs_diff(const Mat2& x, const Mat2& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
  return d;
}

const Mat2& pauli(std::size_t j) {
  static const std::array<Mat2, 4> kPaulis = {
      Mat2{{1.0, 0.0, 0.0, 1.0}},
      Mat2{{0.0, 1.0, 1.0, 0.0}},
      Mat2{{0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}},
      Mat2{{1.0, 0.0, 0.0, -1.0}},
  };
  if (j > 3) throw InvalidArgument("pauli index out of range");
  return kPaulis[j];
}

// ---- Hermitian ------------------------------------------------------------

HermitianMatrix::HermitianMatrix(std::size_t dim, std::vector<Complex> entries,
                                 double tol)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0 || entries_.size() != dim_ * dim_)
    throw InvalidArgument("hermitian matrix: entry count does not match dimension");
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      const Complex a = entries_[r * dim_ + c];
      const Complex b = entries_[c * dim_ + r];
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
          std::abs(a - std::conj(b)) > tol)
        throw InvalidArgument("matrix is not Hermitian");
      const Complex avg = 0.5 * (a + std::conj(b));
      entries_[r * dim_ + c] = avg;
      entries_[c * dim_ + r] = std::conj(avg);
    }
  }
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
  std::vector<Complex> e(d.size() * d.size(), 0.0);
  for (std::size_t i = 0; i < d.size(); ++i) e[i * d.size() + i] = d[i];
  return HermitianMatrix(d.size(), std::move(e));
}

HermitianMatrix HermitianMatrix::from(const Mat2& m, double tol) {
  return HermitianMatrix(2, {m.a.begin(), m.a.end()}, tol);
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += entries_[i * dim_ + i].real();
  return t;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Complex> a = m.entries();
  auto at = [&](std::size_t r, std::size_t c) -> Complex& { return a[r * n + c]; };

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) off += std::norm(at(r, c));
    if (std::sqrt(off) < kJacobiOffTol) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(at(p, q));
        if (mag == 0.0) continue;
        // Diagonal phase on index q makes a_pq real and positive.
        const Complex phase = at(p, q) / mag;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == q) continue;
          at(r, q) *= std::conj(phase);
          at(q, r) *= phase;
        }
        // Real Jacobi rotation annihilating a_pq.
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) = app - t * mag;
        at(q, q) = aqq + t * mag;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Complex arp = at(r, p);
          const Complex arq = at(r, q);
          at(r, p) = c * arp - s * arq;
          at(r, q) = s * arp + c * arq;
          at(p, r) = std::conj(at(r, p));
          at(q, r) = std::conj(at(r, q));
        }
      }
    }
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i).real();
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

// ---- states ---------------------------------------------------------------

BlochVector::BlochVector(const Vec3& r, double tol) : r_(r) {
  for (double v : r_)
    if (!std::isfinite(v)) throw InvalidState("Bloch vector has a non-finite component");
  if (qpqc::norm(r_) > 1.0 + tol)
    throw InvalidState("Bloch vector outside the unit ball: |r| = " +
                       std::to_string(qpqc::norm(r_)));
}

DensityOperator::DensityOperator(const Mat2& m, double tol) : m_(m) {
  if (std::abs(m(0, 1) - std::conj(m(1, 0))) > tol || std::abs(m(0, 0).imag()) > tol ||
      std::abs(m(1, 1).imag()) > tol)
    throw InvalidState("density operator is not Hermitian");
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  if (std::abs(a + d - 1.0) > tol) throw InvalidState("density operator trace differs from one");
  const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const double lmin = 0.5 * (a + d) - std::hypot(0.5 * (a - d), std::abs(b));
  if (lmin < -tol) throw InvalidState("density operator is not positive semidefinite");
  m_ = Mat2{{a, b, std::conj(b), d}};
}

DensityOperator DensityOperator::maximally_mixed() {
  return DensityOperator(Mat2{{0.5, 0.0, 0.0, 0.5}});
}

QubitUnitary::QubitUnitary(const Mat2& m, double tol) : m_(m) {
  if (max_abs_diff(m * m.adjoint(), Mat2::identity()) > tol)
    throw InvalidArgument("matrix is not unitary");
}

QubitUnitary QubitUnitary::rotation(const Vec3& axis, double angle) {
  const double len = qpqc::norm(axis);
  if (len == 0.0) throw InvalidArgument("rotation axis must be nonzero");
  const Vec3 n = (1.0 / len) * axis;
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  Mat2 m = Complex(c, 0.0) * pauli(0);
  for (std::size_t j = 0; j < 3; ++j) m = m + Complex(0.0, -s * n[j]) * pauli(j + 1);
  return QubitUnitary(m);
}

QubitUnitary QubitUnitary::from_rotation(const Mat3& r) {
  if (!is_rotation(r, 1e-8)) throw InvalidArgument("matrix is not a proper rotation");
  // Quaternion (w, x, y, z) by Shepperd's method.
  double w, x, y, z;
  const double tr = r[0][0] + r[1][1] + r[2][2];
  if (tr > 0.0) {
    const double s = 2.0 * std::sqrt(tr + 1.0);
    w = 0.25 * s;
    x = (r[2][1] - r[1][2]) / s;
    y = (r[0][2] - r[2][0]) / s;
    z = (r[1][0] - r[0][1]) / s;
  } else if (r[0][0] > r[1][1] && r[0][0] > r[2][2]) {
    const double s = 2.0 * std::sqrt(1.0 + r[0][0] - r[1][1] - r[2][2]);
    w = (r[2][1] - r[1][2]) / s;
    x = 0.25 * s;
    y = (r[0][1] + r[1][0]) / s;
    z = (r[0][2] + r[2][0]) / s;
  } else if (r[1][1] > r[2][2]) {
    const double s = 2.0 * std::sqrt(1.0 + r[1][1] - r[0][0] - r[2][2]);
    w = (r[0][2] - r[2][0]) / s;
    x = (r[0][1] + r[1][0]) / s;
    y = 0.25 * s;
    z = (r[1][2] + r[2][1]) / s;
  } else {
    const double s = 2.0 * std::sqrt(1.0 + r[2][2] - r[0][0] - r[1][1]);
    w = (r[1][0] - r[0][1]) / s;
    x = (r[0][2] + r[2][0]) / s;
    y = (r[1][2] + r[2][1]) / s;
    z = 0.25 * s;
  }
  const double len = std::sqrt(w * w + x * x + y * y + z * z);
  w /= len;
  x /= len;
  y /= len;
  z /= len;
  const Mat2 m = Complex(w, 0.0) * pauli(0) + Complex(0.0, -x) * pauli(1) +
                 Complex(0.0, -y) * pauli(2) + Complex(0.0, -z) * pauli(3);
  return QubitUnitary(m);
}

DensityOperator QubitUnitary::conjugate(const DensityOperator& rho) const {
  return DensityOperator(m_ * rho.matrix() * m_.adjoint());
}

Mat3 QubitUnitary::bloch_rotation() const {
  Mat3 r{};
  const Mat2 ud = m_.adjoint();
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k)
      r[j][k] = 0.5 * (pauli(j + 1) * m_ * pauli(k + 1) * ud).trace().real();
  return r;
}

QubitUnitary operator*(const QubitUnitary& x, const QubitUnitary& y) {
  return QubitUnitary(x.matrix() * y.matrix());
}

DensityOperator bloch_to_density(const BlochVector& r) {
  Mat2 m = Complex(0.5, 0.0) * pauli(0);
  for (std::size_t j = 0; j < 3; ++j) m = m + Complex(0.5 * r.r()[j], 0.0) * pauli(j + 1);
  return DensityOperator(m);
}

BlochVector density_to_bloch(const DensityOperator& rho) {
  Vec3 r{};
  for (std::size_t j = 0; j < 3; ++j) r[j] = (rho.matrix() * pauli(j + 1)).trace().real();
  return BlochVector(r);
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  // Roots of the characteristic quadratic of the Hermitian difference.
  const Mat2 d = rho.matrix() - sigma.matrix();
  const double mean = 0.5 * (d(0, 0).real() + d(1, 1).real());
  const double rad = std::hypot(0.5 * (d(0, 0).real() - d(1, 1).real()), std::abs(d(0, 1)));
  return std::abs(mean + rad) + std::abs(mean - rad);
}

// ---- entropies ------------------------------------------------------------

double shannon_entropy(std::span<const double> p, double tol) {
  if (p.empty()) throw InvalidArgument("empty probability list");
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < -tol)
      throw InvalidArgument("probability is negative or not finite");
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol) throw InvalidArgument("probabilities do not sum to one");
  double h = 0.0;
  for (double v : p) h -= xlog2x(v);
  return h;
}

double von_neumann_entropy(const HermitianMatrix& rho, double tol) {
  if (std::abs(rho.trace() - 1.0) > tol) throw InvalidState("state trace differs from one");
  const auto ev = hermitian_eigenvalues(rho);
  if (ev.back() < -tol) throw InvalidState("state has a negative eigenvalue");
  return shannon_entropy(ev, tol);
}

double von_neumann_entropy(const DensityOperator& rho) {
  return von_neumann_entropy(HermitianMatrix::from(rho.matrix()));
}

double h_function(double x) {
  if (!(std::abs(x) <= 1.0 + kTolProb)) throw InvalidArgument("h(x) requires |x| <= 1");
  x = std::clamp(x, -1.0, 1.0);
  return xlog2x(1.0 + x) + xlog2x(1.0 - x);
}

double binary_entropy(double p) {
  if (!(p >= -kTolProb && p <= 1.0 + kTolProb))
    throw InvalidArgument("binary entropy requires p in [0, 1]");
  p = std::clamp(p, 0.0, 1.0);
  return -xlog2x(p) - xlog2x(1.0 - p);
}

}  // namespace qpqc
