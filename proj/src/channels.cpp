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

#include "qpqc/channels.hpp"

#include <algorithm>
#include <cmath>

namespace qpqc {

double PauliDiagonal::max_abs() const {
  return std::max({std::abs(x), std::abs(y), std::abs(z)});
}

PauliProbabilities probs_from_lambdas(const PauliDiagonal& l) {
  const double px = 0.25 * (1.0 + l.x - l.y - l.z);
  const double py = 0.25 * (1.0 - l.x + l.y - l.z);
  const double pz = 0.25 * (1.0 - l.x - l.y + l.z);
  return {1.0 - px - py - pz, px, py, pz};
}

PauliDiagonal lambdas_from_probs(const PauliProbabilities& p, double tol) {
  shannon_entropy(p, tol);  // validates the distribution
  return {p[0] + p[1] - p[2] - p[3], p[0] - p[1] + p[2] - p[3],
          p[0] - p[1] - p[2] + p[3]};
}

bool is_completely_positive(const PauliDiagonal& l, double tol) {
  const auto p = probs_from_lambdas(l);
  return std::all_of(p.begin(), p.end(), [tol](double v) { return v >= -tol; });
}

RandomUnitaryChannel::RandomUnitaryChannel(std::vector<ChannelTerm> terms, double tol)
    : terms_(std::move(terms)) {
  if (terms_.empty()) throw CpViolation("channel needs at least one term");
  double sum = 0.0;
  for (auto& t : terms_) {
    if (!std::isfinite(t.p) || t.p < -tol) throw CpViolation("negative term probability");
    t.p = std::max(t.p, 0.0);
    sum += t.p;
  }
  if (std::abs(sum - 1.0) > tol) throw CpViolation("term probabilities do not sum to one");
}

RandomUnitaryChannel RandomUnitaryChannel::identity() {
  return RandomUnitaryChannel({{1.0, QubitUnitary::identity()}});
}

std::vector<double> RandomUnitaryChannel::probabilities() const {
  std::vector<double> p;
  p.reserve(terms_.size());
  for (const auto& t : terms_) p.push_back(t.p);
  return p;
}

void UnitalChannel::validate(double tol) const {
  if (!is_rotation(rot_left, 1e-8) || !is_rotation(rot_right, 1e-8))
    throw InvalidArgument("unital channel rotations must be proper orthogonal");
  if (!is_completely_positive(diag, tol))
    throw CpViolation("lambda triple is not completely positive");
}

Mat3 UnitalChannel::bloch_matrix() const {
  const Mat3 d{{{diag.x, 0, 0}, {0, diag.y, 0}, {0, 0, diag.z}}};
  return rot_left * d * rot_right;
}

RandomUnitaryChannel UnitalChannel::decomposition(double tol) const {
  validate(tol);
  const auto p = probs_from_lambdas(diag);
  const QubitUnitary left = QubitUnitary::from_rotation(rot_left);
  const QubitUnitary right = QubitUnitary::from_rotation(rot_right);
  std::vector<ChannelTerm> terms;
  for (std::size_t j = 0; j < 4; ++j)
    terms.push_back({p[j], left * QubitUnitary(pauli(j)) * right});
  return RandomUnitaryChannel(std::move(terms), tol);
}

RandomUnitaryChannel pauli_decomposition(const PauliDiagonal& l, double tol) {
  return UnitalChannel{identity3(), l, identity3()}.decomposition(tol);
}

DensityOperator apply(const RandomUnitaryChannel& ch, const DensityOperator& rho) {
  Mat2 out;
  for (const auto& t : ch.terms())
    out = out + Complex(t.p, 0.0) * (t.u.matrix() * rho.matrix() * t.u.matrix().adjoint());
  return DensityOperator(out);
}

BlochVector apply(const RandomUnitaryChannel& ch, const BlochVector& r) {
  return density_to_bloch(apply(ch, bloch_to_density(r)));
}

Mat3 bloch_action(const RandomUnitaryChannel& ch) {
  Mat3 t{};
  for (const auto& term : ch.terms()) {
    const Mat3 r = term.u.bloch_rotation();
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) t[j][k] += term.p * r[j][k];
  }
  return t;
}

EnvironmentState environment_state(const RandomUnitaryChannel& ch,
                                   const DensityOperator& rho) {
  const auto& terms = ch.terms();
  const std::size_t n = terms.size();
  std::vector<Complex> w(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Mat2 m = terms[j].u.matrix() * rho.matrix() * terms[k].u.matrix().adjoint();
      w[j * n + k] = std::sqrt(terms[j].p * terms[k].p) * m.trace();
    }
  }
  return EnvironmentState{HermitianMatrix(n, std::move(w))};
}

double entropy_exchange(const RandomUnitaryChannel& ch, const DensityOperator& rho) {
  return von_neumann_entropy(environment_state(ch, rho).omega);
}

bool check_orthogonal_terms(const RandomUnitaryChannel& ch, double tol) {
  const auto& terms = ch.terms();
  for (std::size_t j = 0; j < terms.size(); ++j)
    for (std::size_t k = j + 1; k < terms.size(); ++k)
      if (std::abs((terms[j].u.matrix() * terms[k].u.matrix().adjoint()).trace()) > tol)
        return false;
  return true;
}

}  // namespace qpqc
