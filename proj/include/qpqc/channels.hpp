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

// Single-qubit unital channels in two pictures: an explicit mixture of
// unitary conjugations, and the Pauli-diagonal normal form sandwiched
// between two Bloch-sphere rotations.

#include <array>
#include <cstddef>
#include <vector>

#include "qpqc/qmath.hpp"

namespace qpqc {

/// Probabilities of I, sigma_x, sigma_y, sigma_z in that order.
using PauliProbabilities = std::array<double, 4>;

/// Diagonal Bloch action (lambda_x, lambda_y, lambda_z) of a Pauli channel.
struct PauliDiagonal {
  double x = 1.0;
  double y = 1.0;
  double z = 1.0;

  double max_abs() const;
  friend bool operator==(const PauliDiagonal&, const PauliDiagonal&) = default;
};

PauliProbabilities probs_from_lambdas(const PauliDiagonal& l);
/// Inverse of probs_from_lambdas. Throws InvalidArgument for anything that
/// is not a distribution.
PauliDiagonal lambdas_from_probs(const PauliProbabilities& p, double tol = kTolProb);

/// 1 - lz >= |lx - ly| and 1 + lz >= |lx + ly|, i.e. every Pauli weight is
/// at least -tol.
bool is_completely_positive(const PauliDiagonal& l, double tol = kTolProb);

struct ChannelTerm {
  double p;
  QubitUnitary u;
};

/// E(rho) = sum_j p_j U_j rho U_j^dagger. Zero-weight terms are kept.
class RandomUnitaryChannel {
 public:
  /// Throws CpViolation when the weights are not a distribution or the list
  /// is empty. Weights in (-tol, 0) are clamped to zero.
  explicit RandomUnitaryChannel(std::vector<ChannelTerm> terms, double tol = kTolProb);

  static RandomUnitaryChannel identity();

  const std::vector<ChannelTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::vector<double> probabilities() const;

 private:
  std::vector<ChannelTerm> terms_;
};

/// rot_left * diag(lambda) * rot_right acting on Bloch vectors.
struct UnitalChannel {
  Mat3 rot_left = identity3();
  PauliDiagonal diag;
  Mat3 rot_right = identity3();

  /// Throws InvalidArgument when a rotation is not in SO(3) and CpViolation
  /// when the diagonal is not completely positive.
  void validate(double tol = kTolProb) const;
  Mat3 bloch_matrix() const;
  /// Orthogonal decomposition {p_j, U_left sigma_j U_right}.
  RandomUnitaryChannel decomposition(double tol = kTolProb) const;
};

/// Orthogonal Pauli decomposition {(p0, I), (px, X), (py, Y), (pz, Z)}.
/// Throws CpViolation when l is outside the tetrahedron.
RandomUnitaryChannel pauli_decomposition(const PauliDiagonal& l, double tol = kTolProb);

DensityOperator apply(const RandomUnitaryChannel& ch, const DensityOperator& rho);
BlochVector apply(const RandomUnitaryChannel& ch, const BlochVector& r);

/// T_jk = (1/2) Tr(sigma_j E[sigma_k]); the channel maps r to T r.
Mat3 bloch_action(const RandomUnitaryChannel& ch);

/// omega_env = sum_jk sqrt(p_j p_k) Tr[U_j rho U_k^dagger] |j><k|.
struct EnvironmentState {
  HermitianMatrix omega;
};

EnvironmentState environment_state(const RandomUnitaryChannel& ch,
                                   const DensityOperator& rho);
/// Von Neumann entropy of the environment state, in bits.
double entropy_exchange(const RandomUnitaryChannel& ch, const DensityOperator& rho);

/// True when |Tr[U_j U_k^dagger]| <= tol for every pair j != k.
bool check_orthogonal_terms(const RandomUnitaryChannel& ch, double tol = kTolUnit);

}  // namespace qpqc
