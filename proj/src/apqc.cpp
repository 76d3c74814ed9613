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

#include "qpqc/apqc.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

namespace qpqc {

namespace {

constexpr double kDomainTol = 1e-12;
const double kLog2Three = std::log2(3.0);

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double l1(const PauliDiagonal& l) { return std::abs(l.x) + std::abs(l.y) + std::abs(l.z); }

// Strict total order used for per-bin minima.
bool better(const FrontierPoint& a, const FrontierPoint& b) {
  if (a.entropy != b.entropy) return a.entropy < b.entropy;
  if (l1(a.lambda) != l1(b.lambda)) return l1(a.lambda) < l1(b.lambda);
  if (a.lambda.x != b.lambda.x) return a.lambda.x < b.lambda.x;
  if (a.lambda.y != b.lambda.y) return a.lambda.y < b.lambda.y;
  return a.lambda.z < b.lambda.z;
}

double grid_value(double step, std::size_t i) {
  return std::min(1.0, -1.0 + static_cast<double>(i) * step);
}

template <typename Visit>
void for_each_cp_point(double step, std::size_t x_begin, std::size_t x_end, Visit&& visit) {
  const std::size_t n = cp_grid_size(step);
  for (std::size_t i = x_begin; i < std::min(x_end, n); ++i) {
    const double lx = grid_value(step, i);
    for (std::size_t j = 0; j < n; ++j) {
      const double ly = grid_value(step, j);
      for (std::size_t k = 0; k < n; ++k) {
        const PauliDiagonal l{lx, ly, grid_value(step, k)};
        const auto p = probs_from_lambdas(l);
        if (p[0] < -kTolProb || p[1] < -kTolProb || p[2] < -kTolProb || p[3] < -kTolProb)
          continue;
        const double h = -xlog2x(p[0]) - xlog2x(p[1]) - xlog2x(p[2]) - xlog2x(p[3]);
        visit(l, 2.0 * l.max_abs(), h);
      }
    }
  }
}

}  // namespace

std::size_t FrontierCurve::bin_count() const {
  return static_cast<std::size_t>(std::ceil(2.0 / bin_width - 1e-9));
}

std::size_t FrontierCurve::bin_index(double epsilon) const {
  const auto k = static_cast<std::size_t>(std::max(0.0, epsilon / bin_width + 1e-9));
  return std::min(k, bin_count() - 1);
}

double epsilon_full_sphere(const PauliDiagonal& l) {
  if (!is_completely_positive(l)) throw CpViolation("lambda triple is not completely positive");
  return std::min(2.0, 2.0 * l.max_abs());
}

double epsilon_for_set(const RandomUnitaryChannel& ch, const PlaintextSet& set) {
  std::vector<DensityOperator> images;
  images.reserve(set.states.size());
  for (const auto& s : set.states) images.push_back(apply(ch, bloch_to_density(s)));
  double eps = 0.0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      eps = std::max(eps, trace_distance(images[i], images[j]));
  return eps;
}

double entropy_depolarizing(double lambda) {
  if (!(lambda >= -1.0 / 3.0 - kDomainTol && lambda <= 1.0 + kDomainTol))
    throw CpViolation("depolarizing channel is physical only for -1/3 <= lambda <= 1");
  lambda = std::clamp(lambda, -1.0 / 3.0, 1.0);
  return 2.0 - 0.25 * (xlog2x(1.0 + 3.0 * lambda) + 3.0 * xlog2x(1.0 - lambda));
}

double entropy_phase_family(double lambda) {
  if (!(lambda >= 1.0 / 3.0 - kDomainTol && lambda <= 1.0 + kDomainTol))
    throw InvalidArgument("phase family is defined for 1/3 <= lambda <= 1");
  lambda = std::clamp(lambda, 1.0 / 3.0, 1.0);
  return 0.5 * (3.0 + lambda - xlog2x(1.0 - lambda) - xlog2x(1.0 + lambda));
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw InvalidArgument("bisection bracket has no sign change");
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Crossover crossover() {
  // Both branches equal log2(3) at 1/3; the difference is negative just
  // above 1/3 and positive well before 1.
  const double l = bisect(
      [](double x) { return entropy_depolarizing(x) - entropy_phase_family(x); }, 0.35, 0.9);
  return {l, 2.0 * l};
}

double depolarizing_plateau_end() {
  return bisect([](double x) { return entropy_depolarizing(x) - kLog2Three; }, 1.0 / 3.0, 1.0);
}

double analytic_frontier(double epsilon) {
  if (!(epsilon >= -kDomainTol && epsilon <= 2.0 + kDomainTol))
    throw InvalidArgument("epsilon must lie in [0, 2]");
  epsilon = std::clamp(epsilon, 0.0, 2.0);
  static const double kEpsStar = crossover().epsilon_star;
  if (epsilon <= 2.0 / 3.0) return entropy_depolarizing(-0.5 * epsilon);
  if (epsilon <= kEpsStar) return entropy_phase_family(0.5 * epsilon);
  return entropy_depolarizing(0.5 * epsilon);
}

std::size_t cp_grid_size(double step) {
  if (!(step > 0.0)) throw InvalidArgument("grid step must be positive");
  return static_cast<std::size_t>(std::floor(2.0 / step + 1e-9)) + 1;
}

void visit_cp_grid(double step, std::size_t x_begin, std::size_t x_end,
                   const std::function<void(const PauliDiagonal&, double, double)>& visit) {
  for_each_cp_point(step, x_begin, x_end, visit);
}

FrontierCurve brute_force_frontier(double step, double bin_width) {
  if (!(step > 0.0 && step <= 0.02 + 1e-12))
    throw InvalidArgument("brute-force step must lie in (0, 0.02]");
  if (!(bin_width > 0.0)) throw InvalidArgument("bin width must be positive");
  FrontierCurve curve;
  curve.bin_width = bin_width;
  const std::size_t nbins = curve.bin_count();
  const std::size_t n = cp_grid_size(step);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, n);

  using Bins = std::vector<std::optional<FrontierPoint>>;
  std::vector<Bins> partial(workers, Bins(nbins));
  auto work = [&](std::size_t w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    Bins& bins = partial[w];
    for_each_cp_point(step, begin, end, [&](const PauliDiagonal& l, double eps, double h) {
      const std::size_t k = curve.bin_index(eps);
      const FrontierPoint pt{eps, h, l};
      if (!bins[k] || better(pt, *bins[k])) bins[k] = pt;
    });
  };
  std::vector<std::thread> threads;
  for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(work, w);
  work(0);
  for (auto& t : threads) t.join();

  for (std::size_t k = 0; k < nbins; ++k) {
    std::optional<FrontierPoint> best;
    for (const auto& bins : partial)
      if (bins[k] && (!best || better(*bins[k], *best))) best = bins[k];
    if (best) curve.points.push_back(*best);
  }
  return curve;
}

std::vector<std::pair<double, double>> depolarizing_curve(const std::vector<double>& epsilon_grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(epsilon_grid.size());
  for (double eps : epsilon_grid) {
    if (!(eps >= -kDomainTol && eps <= 2.0 + kDomainTol))
      throw InvalidArgument("epsilon must lie in [0, 2]");
    const double half = std::clamp(0.5 * eps, 0.0, 1.0);
    double h = entropy_depolarizing(half);
    if (half <= 1.0 / 3.0 + kDomainTol) h = std::min(h, entropy_depolarizing(-half));
    if (eps >= 2.0 / 3.0 - kDomainTol) h = std::min(h, entropy_depolarizing(-1.0 / 3.0));
    out.emplace_back(eps, h);
  }
  return out;
}

}  // namespace qpqc
