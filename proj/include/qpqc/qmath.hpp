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

// Small dense linear algebra for single qubits (plus the few-dimensional
// environment matrices), Bloch conversions and entropy primitives. All
// logarithms are base 2.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qpqc/errors.hpp"

namespace qpqc {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
/// Row-major 3x3 real matrix; m[row][col].
using Mat3 = std::array<Vec3, 3>;

inline constexpr double kTolState = 1e-9;
inline constexpr double kTolProb = 1e-9;
inline constexpr double kTolHerm = 1e-10;
inline constexpr double kTolUnit = 1e-10;

// ---- 3-vectors and rotations ----------------------------------------------

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& a);

Mat3 identity3();
Mat3 transpose(const Mat3& m);
Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& m, const Vec3& v);
double max_abs_diff(const Mat3& a, const Mat3& b);
double determinant(const Mat3& m);
/// True when m is orthogonal with determinant +1.
bool is_rotation(const Mat3& m, double tol = kTolUnit);

// ---- 2x2 complex matrices -------------------------------------------------

/// Row-major 2x2 complex matrix.
struct Mat2 {
  std::array<Complex, 4> a{};

  Complex operator()(std::size_t r, std::size_t c) const { return a[2 * r + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return a[2 * r + c]; }

  static Mat2 identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }
  Mat2 adjoint() const;
  Complex trace() const { return a[0] + a[3]; }
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(Complex s, const Mat2& x);
double max_abs_diff(const Mat2& x, const Mat2& y);

/// Pauli matrices; index 0 is the identity.
const Mat2& pauli(std::size_t j);

// ---- Hermitian matrices ---------------------------------------------------

/// Square Hermitian matrix of arbitrary (small) dimension, row-major.
class HermitianMatrix {
 public:
  /// Throws InvalidArgument unless entries has dim*dim elements and is
  /// Hermitian within tol. The stored matrix is symmetrised exactly.
  HermitianMatrix(std::size_t dim, std::vector<Complex> entries,
                  double tol = kTolHerm);
  static HermitianMatrix diagonal(std::span<const double> d);
  static HermitianMatrix from(const Mat2& m, double tol = kTolHerm);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }
  double trace() const;
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Eigenvalues in descending order, by cyclic complex Jacobi rotations
/// (sweeps until the off-diagonal Frobenius norm drops below 1e-12, at most
/// 100 sweeps).
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m);

// ---- qubit states and unitaries -------------------------------------------

class BlochVector {
 public:
  BlochVector() = default;
  /// Throws InvalidState when |r| > 1 + tol or a component is not finite.
  explicit BlochVector(const Vec3& r, double tol = kTolState);
  BlochVector(double x, double y, double z) : BlochVector(Vec3{x, y, z}) {}

  const Vec3& r() const { return r_; }
  double x() const { return r_[0]; }
  double y() const { return r_[1]; }
  double z() const { return r_[2]; }
  double norm() const { return qpqc::norm(r_); }

 private:
  Vec3 r_{0.0, 0.0, 0.0};
};

class DensityOperator {
 public:
  /// Throws InvalidState unless m is Hermitian, trace one and PSD within
  /// tolerance.
  explicit DensityOperator(const Mat2& m, double tol = kTolState);
  static DensityOperator maximally_mixed();

  const Mat2& matrix() const { return m_; }

 private:
  Mat2 m_;
};

class QubitUnitary {
 public:
  /// Throws InvalidArgument unless m m^dagger = I within tol.
  explicit QubitUnitary(const Mat2& m, double tol = kTolUnit);

  static QubitUnitary identity() { return QubitUnitary(Mat2::identity()); }
  static QubitUnitary pauli_x() { return QubitUnitary(pauli(1)); }
  static QubitUnitary pauli_y() { return QubitUnitary(pauli(2)); }
  static QubitUnitary pauli_z() { return QubitUnitary(pauli(3)); }
  /// exp(-i angle/2 n.sigma) for a unit axis n: rotates Bloch vectors by
  /// angle about n.
  static QubitUnitary rotation(const Vec3& axis, double angle);
  /// SU(2) element whose adjoint action on Bloch vectors is the rotation r.
  static QubitUnitary from_rotation(const Mat3& r);

  const Mat2& matrix() const { return m_; }
  QubitUnitary adjoint() const { return QubitUnitary(m_.adjoint()); }
  /// U rho U^dagger.
  DensityOperator conjugate(const DensityOperator& rho) const;
  /// The SO(3) rotation R with U (r.sigma) U^dagger = (R r).sigma.
  Mat3 bloch_rotation() const;

 private:
  Mat2 m_;
};

QubitUnitary operator*(const QubitUnitary& x, const QubitUnitary& y);

DensityOperator bloch_to_density(const BlochVector& r);
BlochVector density_to_bloch(const DensityOperator& rho);

/// Tr|rho - sigma| (no factor one half), so that D(rho, I/2) = |r|.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

// ---- entropies ------------------------------------------------------------

/// -sum p log2 p with 0 log 0 = 0. Entries in (-tol, 0) are treated as 0;
/// throws InvalidArgument for anything that is not a distribution within tol.
double shannon_entropy(std::span<const double> p, double tol = kTolProb);
double von_neumann_entropy(const HermitianMatrix& rho, double tol = kTolState);
double von_neumann_entropy(const DensityOperator& rho);
/// (1+x)log2(1+x) + (1-x)log2(1-x) on |x| <= 1.
double h_function(double x);
/// Binary entropy H2(p) in bits.
double binary_entropy(double p);

}  // namespace qpqc
