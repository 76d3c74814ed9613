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

// Perfect private quantum channels for a single qubit: plaintext hull
// classification, certificate checks, key-entropy bounds and synthesis of
// the minimum-entropy encryption for a target ciphertext distance.

#include <utility>
#include <vector>

#include "qpqc/channels.hpp"
#include "qpqc/qmath.hpp"

namespace qpqc {

inline constexpr double kTolRank = 1e-7;

struct PlaintextSet {
  std::vector<BlochVector> states;
};

/// Affine hull of a plaintext set. `anchor` is the point of the hull closest
/// to the origin and `delta` its length.
struct TpHullDescriptor {
  int affine_dim = 0;
  std::vector<Vec3> basis;
  BlochVector anchor;
  double delta = 0.0;
};

struct PqcSolution {
  UnitalChannel channel;
  RandomUnitaryChannel decomposition;
  BlochVector ciphertext;
  double key_entropy = 0.0;
  double theta = 0.0;
};

struct VerifyResult {
  bool ok = false;
  BlochVector ciphertext;
  double max_deviation = 0.0;
};

struct KeyEntropyBounds {
  double s_ex_bound = 0.0;
  double cipher_bound = 0.0;
};

/// Rank decisions threshold the singular values of the difference matrix
/// {r_i - r_1} at tol. Basis vectors are oriented so the first difference
/// with a significant component along them projects positively.
TpHullDescriptor classify(const PlaintextSet& set, double tol = kTolRank);

VerifyResult verify_pqc(const RandomUnitaryChannel& ch, const PlaintextSet& set,
                        double tol = kTolState);

/// s_ex_bound = S_ex(ch, I/2), cipher_bound = S(ciphertext).
KeyEntropyBounds key_entropy_bounds(const RandomUnitaryChannel& ch,
                                    const DensityOperator& ciphertext);

/// Key entropy 2 - [h(a) + h(b)]/4 of the channel diag(lx, ly, 0) with
/// a = lx - ly, b = lx + ly.
double general_pqc_entropy(double a, double b);

/// Minimum-entropy PQC whose ciphertext sits at distance theta from I/2.
///
///   dim 0  identity, H = 0. A single state is only mapped onto itself, so
///          theta must equal delta.
///   dim 1  half-half mixture of I and m.sigma with m orthogonal to the line,
///          tilted from the anchor by acos(theta / delta); H = 1.
///   dim 2  phase damping diag(theta / delta, 0, 0) along the anchor axis;
///          H = 2 - h(theta / delta) / 2. With delta = 0 the preserved axis
///          is the plane normal and H = 1.
///   dim 3  full depolarization, theta must be 0, H = 2.
///
/// Throws InfeasibleTheta when theta is negative or exceeds delta.
PqcSolution optimal_pqc(const TpHullDescriptor& hull, double theta);

enum class HullKind { line, plane };

/// (theta, H) samples of the optimal key entropy.
std::vector<std::pair<double, double>> optimal_entropy_curve(
    HullKind kind, double delta, const std::vector<double>& theta_grid);

}  // namespace qpqc
