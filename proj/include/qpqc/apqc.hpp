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

// Approximate private quantum channels on the full qubit state space:
// security parameter of a channel, the closed-form entropy/security
// trade-off and a brute-force enumeration of the completely positive
// tetrahedron to check it against.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "qpqc/channels.hpp"
#include "qpqc/pqc.hpp"

namespace qpqc {

struct FrontierPoint {
  double epsilon = 0.0;
  double entropy = 0.0;
  PauliDiagonal lambda;
};

/// Per-bin minima over an epsilon grid; bin k covers [k w, (k+1) w), the
/// last bin is closed on the right so epsilon = 2 is included.
struct FrontierCurve {
  std::vector<FrontierPoint> points;
  double bin_width = 0.0;

  std::size_t bin_count() const;
  /// Bin holding epsilon; grid epsilons sitting on a bin edge within
  /// rounding go to the bin on the right.
  std::size_t bin_index(double epsilon) const;
  double bin_center(std::size_t k) const { return (static_cast<double>(k) + 0.5) * bin_width; }
};

/// 2 max |lambda_j|. Throws CpViolation outside the tetrahedron.
double epsilon_full_sphere(const PauliDiagonal& l);

/// Largest pairwise trace distance between encrypted plaintexts; 0 for
/// fewer than two states.
double epsilon_for_set(const RandomUnitaryChannel& ch, const PlaintextSet& set);

/// Key entropy of the depolarizing channel lambda_x = lambda_y = lambda_z =
/// lambda, physical on [-1/3, 1].
double entropy_depolarizing(double lambda);

/// Key entropy of lambda_z = -lambda, lambda_x = lambda_y = -(1 - lambda)/2
/// on [1/3, 1].
double entropy_phase_family(double lambda);

struct Crossover {
  double lambda_star = 0.0;
  double epsilon_star = 0.0;
};

/// Where entropy_depolarizing and entropy_phase_family meet on (1/3, 1).
Crossover crossover();

/// lambda in (1/3, 1) where the positive depolarizing branch falls back to
/// log2(3), the entropy of the universal-NOT approximation.
double depolarizing_plateau_end();

/// Piecewise optimal entropy: depolarizing at -eps/2 up to 2/3, the phase
/// family up to the crossover, depolarizing at +eps/2 beyond.
double analytic_frontier(double epsilon);

/// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol = 1e-12);

/// Number of grid values -1 + i step lying in [-1, 1].
std::size_t cp_grid_size(double step);

/// Calls visit(lambda, epsilon, entropy) for every completely positive grid
/// point lambda_x = -1 + i step with i in [x_begin, x_end) and the other two
/// components over the whole grid.
void visit_cp_grid(double step, std::size_t x_begin, std::size_t x_end,
                   const std::function<void(const PauliDiagonal&, double, double)>& visit);

/// Enumerates the cube [-1, 1]^3 at the given step, keeps CP points and
/// records the minimum-entropy witness per epsilon bin. Ties go to the
/// smaller |lx| + |ly| + |lz|. Work is split over hardware threads and
/// merged deterministically.
FrontierCurve brute_force_frontier(double step, double bin_width);

/// Best depolarizing-family entropy at security level epsilon.
std::vector<std::pair<double, double>> depolarizing_curve(const std::vector<double>& epsilon_grid);

}  // namespace qpqc
