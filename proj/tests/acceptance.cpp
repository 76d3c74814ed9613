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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero when any of them fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qpqc/apqc.hpp"
#include "qpqc/cli.hpp"
#include "qpqc/protocol.hpp"
#include "support.hpp"

using namespace qpqc;
using namespace qpqc::testing;

namespace {

const double kLog2Of3 = std::log2(3.0);

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// Every solution built along the way, for the ciphertext bound.
std::vector<PqcSolution> solutions;

PlaintextSet flat_set(int dim, double delta) {
  const Vec3 a = random_unit();
  Vec3 d1 = random_unit();
  d1 = d1 - dot(d1, a) * a;
  d1 = (1.0 / norm(d1)) * d1;
  const Vec3 d2 = cross(a, d1);
  const double room = std::sqrt(1.0 - delta * delta) / std::sqrt(2.0);
  PlaintextSet set;
  for (int i = 0; i < 4; ++i) {
    const double s = uniform(-room, room);
    const double t = dim == 2 ? uniform(-room, room) : 0.0;
    set.states.emplace_back(delta * a + s * d1 + t * d2);
  }
  return set;
}

void full_ball() {
  const double h = 1.0 / std::sqrt(3.0);
  const PlaintextSet tetra{{BlochVector(h, h, h), BlochVector(h, -h, -h), BlochVector(-h, h, -h),
                            BlochVector(-h, -h, h)}};
  const auto hull = classify(tetra);
  const auto t0 = Clock::now();
  const auto sol = optimal_pqc(hull, 0.0);
  const double dt = seconds_since(t0);
  solutions.push_back(sol);
  report(1, hull.affine_dim == 3 && std::abs(sol.key_entropy - 2.0) < 1e-9 && dt < 1e-3,
         fmt("dim 3, H = %.12f, optimal_pqc took %.3g ms", sol.key_entropy, dt * 1e3));
}

void line_and_plane() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  bool dims_ok = true;
  for (int dim : {1, 2}) {
    for (int i = 0; i < 50; ++i) {
      const auto hull = classify(flat_set(dim, uniform(0.05, 0.9)));
      dims_ok = dims_ok && hull.affine_dim == dim;
      double best = 1e9;
      for (int k = 0; k <= 10; ++k) {
        const auto sol = optimal_pqc(hull, hull.delta * k / 10.0);
        best = std::min(best, sol.key_entropy);
        // Lines reach one bit at every admissible theta.
        if (dim == 1) worst = std::max(worst, std::abs(sol.key_entropy - 1.0));
        solutions.push_back(sol);
      }
      worst = std::max(worst, std::abs(best - 1.0));
    }
  }
  const double dt = seconds_since(t0);
  report(2, dims_ok && worst < 1e-9 && dt < 1.0,
         fmt("50 lines + 50 planes, max |min H - 1| = %.3g, %.3g s", worst, dt));
}

void plane_curve() {
  const double delta = 0.7;
  std::vector<double> thetas;
  for (int k = 0; k <= 100; ++k) thetas.push_back(delta * k / 100.0);
  const auto curve = optimal_entropy_curve(HullKind::plane, delta, thetas);
  double worst = 0.0;
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    const double x = k / 100.0;
    // 2 - h(x)/2 written out from the two logarithms.
    double hx = 0.0;
    if (1 + x > 0) hx += (1 + x) * std::log2(1 + x);
    if (1 - x > 0) hx += (1 - x) * std::log2(1 - x);
    worst = std::max(worst, std::abs(curve[k].second - (2.0 - 0.5 * hx)));
  }
  const double first = curve.front().second, last = curve.back().second;
  report(3,
         curve.size() == 101 && worst < 1e-12 && std::abs(first - 2.0) < 1e-12 &&
             std::abs(last - 1.0) < 1e-12,
         fmt("max deviation %.3g over 101 points, H(0) = %.12f, H(delta) = %.12f", worst, first,
             last));
}

void universal_not() {
  const double h = entropy_depolarizing(-1.0 / 3.0);
  report(4, std::abs(h - kLog2Of3) < 1e-9 && std::abs(h - 1.585) < 5e-4,
         fmt("H(-1/3) = %.15f, log2 3 = %.15f", h, kLog2Of3));
}

void crossover_point() {
  const auto c = crossover();
  const double gap = entropy_depolarizing(c.lambda_star) - entropy_phase_family(c.lambda_star);
  report(5,
         std::abs(c.lambda_star - 0.4913) < 5e-4 && std::abs(c.epsilon_star - 0.9826) < 1e-3 &&
             std::abs(gap) < 1e-9,
         fmt("lambda* = %.6f, eps* = %.6f, branch gap %.3g", c.lambda_star, c.epsilon_star, gap));
}

void plateau() {
  const double lam = depolarizing_plateau_end();
  const double residual = entropy_depolarizing(lam) - kLog2Of3;
  report(6, std::abs(2 * lam - 0.958) < 2e-3 && std::abs(residual) < 1e-9,
         fmt("2 lambda = %.6f, residual %.3g", 2 * lam, residual));
}

void frontier_oracle() {
  const double step = 0.005, bin = 0.01;
  const auto t0 = Clock::now();
  const auto curve = brute_force_frontier(step, bin);
  const double dt = seconds_since(t0);

  double worst_bin = 0.0, worst_at = 0.0;
  bool all_bins = curve.points.size() == curve.bin_count();
  for (const auto& p : curve.points) {
    const double c = std::min(2.0, curve.bin_center(curve.bin_index(p.epsilon)));
    const double gap = p.entropy - analytic_frontier(c);
    if (gap > worst_bin) worst_bin = gap, worst_at = c;
  }

  double below = 0.0, below_eps = 0.0;
  std::size_t count = 0, visited = 0;
  visit_cp_grid(step, 0, cp_grid_size(step), [&](const PauliDiagonal&, double eps, double h) {
    ++visited;
    const double d = analytic_frontier(eps) - h;
    if (d > 1e-6) ++count;
    if (d > below) below = d, below_eps = eps;
  });

  const bool ok = all_bins && worst_bin <= 0.02 && below <= 1e-6 && dt < 300.0;
  report(7, ok,
         fmt("bins above analytic by at most %.4f (at eps %.3f); enumeration %.3g s", worst_bin,
             worst_at, dt) +
             fmt("; %.0f of %.0f grid points below analytic by > 1e-6, worst %.4f at eps %.3f",
                 static_cast<double>(count), static_cast<double>(visited), below, below_eps));
}

void continuity() {
  const double es = crossover().epsilon_star;
  const double e1 = 2.0 / 3.0;
  const double left1 = analytic_frontier(std::nextafter(e1, 0.0));
  const double right1 = analytic_frontier(std::nextafter(e1, 2.0));
  const double left2 = analytic_frontier(std::nextafter(es, 0.0));
  const double right2 = analytic_frontier(std::nextafter(es, 2.0));
  const double at_star = entropy_depolarizing(es / 2);
  const bool ok = std::abs(left1 - right1) < 1e-9 && std::abs(left2 - right2) < 1e-9 &&
                  std::abs(analytic_frontier(e1) - kLog2Of3) < 1e-9 &&
                  std::abs(analytic_frontier(es) - at_star) < 1e-9;
  report(8, ok,
         fmt("jump %.3g at 2/3, %.3g at eps*; H(eps*) = %.9f", std::abs(left1 - right1),
             std::abs(left2 - right2), analytic_frontier(es)));
}

void saturation() {
  const auto mixed = DensityOperator::maximally_mixed();
  double worst = 0.0, worst_mixed = 0.0, above = -1.0;
  std::vector<PauliDiagonal> lambdas;
  for (int i = 0; i < 1000; ++i) {
    const auto l = random_cp_lambda();
    lambdas.push_back(l);
    const auto ch = pauli_decomposition(l);
    const double h = shannon_entropy(probs_from_lambdas(l));
    worst_mixed = std::max(worst_mixed, std::abs(entropy_exchange(ch, mixed) - h));
    for (int j = 0; j < 10; ++j) {
      const double s = entropy_exchange(ch, random_density());
      worst = std::max(worst, std::abs(s - h));
      above = std::max(above, s - h);
    }
  }
  double excess = -1.0;
  int nonorthogonal = 0;
  for (int i = 0; i < 200; ++i) {
    const auto ch = remix(probs_from_lambdas(lambdas[i]), random_orthogonal4());
    if (!check_orthogonal_terms(ch)) ++nonorthogonal;
    const double key = shannon_entropy(ch.probabilities());
    excess = std::max(excess, entropy_exchange(ch, mixed) - key);
    excess = std::max(excess, entropy_exchange(ch, random_density()) - key);
  }
  report(9, worst < 1e-9 && excess <= 1e-9 && nonorthogonal == 200,
         fmt("random rho: max |S_ex - H(p)| = %.3g, max S_ex - H(p) = %.3g; at I/2: max |S_ex - "
             "H(p)| = %.3g",
             worst, above, worst_mixed) +
             fmt("; %.0f non-orthogonal re-mixings, max S_ex - H = %.3g", nonorthogonal, excess));
}

void ciphertext_bound() {
  double excess = -1e9;
  for (const auto& s : solutions)
    excess = std::max(excess, von_neumann_entropy(bloch_to_density(s.ciphertext)) - s.key_entropy);
  report(10, !solutions.empty() && excess <= 1e-9,
         fmt("%.0f solutions, max S(rho0) - H = %.3g", static_cast<double>(solutions.size()),
             excess));
}

void protocol() {
  double roundtrip = 0.0, mismatch = 0.0;
  std::size_t slots = 0;
  bool reproducible = true;
  for (int m = 0; m < 100; ++m) {
    const UnitalChannel u{random_rotation(), random_cp_lambda(), random_rotation()};
    const auto ch = u.decomposition();
    Message msg;
    PlaintextSet set;
    for (int i = 0; i < 100; ++i) {
      msg.slots.push_back(random_bloch());
      set.states.push_back(msg.slots.back());
    }
    const std::uint64_t seed = 1000 + m;
    const auto key = generate_key(ch, msg.slots.size(), seed);
    const auto back = decrypt(encrypt(msg, key, ch), key, ch);
    for (std::size_t i = 0; i < msg.slots.size(); ++i)
      roundtrip = std::max(roundtrip, norm(back.slots[i].r() - msg.slots[i].r()));
    const auto rep = audit(msg, ch, key);
    roundtrip = std::max(roundtrip, rep.max_roundtrip_error);
    mismatch = std::max(mismatch, std::abs(rep.max_eavesdropper_deviation - epsilon_for_set(ch, set)));
    const auto again = audit(msg, ch, generate_key(ch, msg.slots.size(), seed));
    reproducible = reproducible && cli::to_json(rep).dump() == cli::to_json(again).dump();
    slots += msg.slots.size();
  }
  report(11, slots == 10000 && roundtrip < 1e-12 && mismatch < 1e-9 && reproducible,
         fmt("%.0f slots, max round-trip error %.3g, max deviation mismatch %.3g", slots,
             roundtrip, mismatch) +
             (reproducible ? ", reports reproducible" : ", reports differ"));
}

std::vector<std::vector<double>> parse_csv(const std::string& body, std::string& header) {
  std::istringstream in(body);
  std::string line;
  std::getline(in, header);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

void figures() {
  std::string h1, h2, h3;
  const auto f1 = parse_csv(cli::figure_csv(1), h1);
  const auto f2 = parse_csv(cli::figure_csv(2), h2);
  const auto f3 = parse_csv(cli::figure_csv(3), h3);
  const double plateau_end = 2 * depolarizing_plateau_end();
  std::vector<std::string> problems;

  if (h1 != "theta_over_delta,H_line,H_plane") problems.push_back("figure 1 header");
  if (std::abs(f1.front()[2] - 2.0) > 1e-9 || std::abs(f1.back()[2] - 1.0) > 1e-9)
    problems.push_back("figure 1 plane endpoints");
  for (std::size_t i = 0; i < f1.size(); ++i) {
    if (std::abs(f1[i][1] - 1.0) > 1e-9) problems.push_back("figure 1 line not constant");
    if (i > 0 && !(f1[i][2] < f1[i - 1][2])) problems.push_back("figure 1 plane not decreasing");
  }

  if (h2 != "epsilon,H") problems.push_back("figure 2 header");
  for (std::size_t i = 0; i < f2.size(); ++i) {
    const double e = f2[i][0];
    if (e >= 2.0 / 3.0 + 1e-9 && e <= plateau_end - 1e-9 && std::abs(f2[i][1] - kLog2Of3) > 1e-9)
      problems.push_back("figure 2 plateau");
    if (i > 0 && f2[i][1] > f2[i - 1][1] + 1e-12) problems.push_back("figure 2 increasing");
  }

  if (h3 != "epsilon,H") problems.push_back("figure 3 header");
  std::size_t flat = 0;
  for (std::size_t i = 1; i < f3.size(); ++i) {
    if (f3[i][1] > f3[i - 1][1] + 1e-12) problems.push_back("figure 3 increasing");
    if (f3[i][0] > f3[i - 1][0] && std::abs(f3[i][1] - f3[i - 1][1]) < 1e-9) {
      ++flat;
      if (f3[i - 1][0] < 2.0 / 3.0 - 1e-9 || f3[i][0] > plateau_end + 1e-9)
        problems.push_back("figure 3 flat outside plateau window");
    }
  }
  if (std::abs(f3.front()[1] - 2.0) > 1e-9 || std::abs(f3.back()[1]) > 1e-9)
    problems.push_back("figure 3 endpoints");

  std::sort(problems.begin(), problems.end());
  problems.erase(std::unique(problems.begin(), problems.end()), problems.end());
  std::string detail = fmt("rows %.0f/%.0f/%.0f, %.0f flat steps in figure 3",
                           static_cast<double>(f1.size()), static_cast<double>(f2.size()),
                           static_cast<double>(f3.size()), static_cast<double>(flat));
  for (const auto& p : problems) detail += "; " + p;
  report(12, problems.empty(), detail);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> checks = {
      full_ball, line_and_plane, plane_curve, universal_not, crossover_point, plateau,
      frontier_oracle, continuity, saturation, ciphertext_bound, protocol, figures};
  for (std::size_t i = 0; i < checks.size(); ++i) {
    try {
      checks[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i) + 1, false, std::string("threw: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, checks.size());
  return failures == 0 ? 0 : 1;
}
