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

#include "qpqc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <ostream>
#include <sstream>

#include "qpqc/apqc.hpp"

namespace qpqc::cli {

using nlohmann::json;

namespace {

Mat3 parse_mat3(const json& j, const char* name) {
  if (!j.is_array() || j.size() != 3) throw ParseError(std::string(name) + " must be a 3x3 array");
  Mat3 m{};
  for (std::size_t r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3)
      throw ParseError(std::string(name) + " must be a 3x3 array");
    for (std::size_t c = 0; c < 3; ++c) m[r][c] = j[r][c].get<double>();
  }
  return m;
}

json mat3_json(const Mat3& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back({row[0], row[1], row[2]});
  return out;
}

std::ostringstream csv_stream() {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(12);
  return os;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open output file: " + path);
  f << body;
  if (!f) throw Error("failed writing output file: " + path);
}

std::vector<double> grid(double lo, double hi, std::size_t n, std::vector<double> extra = {}) {
  std::vector<double> g;
  for (std::size_t k = 0; k <= n; ++k)
    g.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n));
  g.insert(g.end(), extra.begin(), extra.end());
  std::sort(g.begin(), g.end());
  return g;
}

}  // namespace

PlaintextSet parse_states(const json& doc) {
  if (!doc.is_object() || !doc.contains("states") || !doc["states"].is_array())
    throw ParseError("state file needs a \"states\" array");
  PlaintextSet set;
  for (const auto& s : doc["states"]) {
    if (!s.is_array() || s.size() != 3) throw ParseError("each state must be [rx, ry, rz]");
    set.states.emplace_back(Vec3{s[0].get<double>(), s[1].get<double>(), s[2].get<double>()});
  }
  if (set.states.empty()) throw ParseError("state file lists no states");
  return set;
}

RandomUnitaryChannel parse_channel(const json& doc, double tol) {
  if (!doc.is_object()) throw ParseError("channel file must be a JSON object");
  if (doc.contains("channel")) return parse_channel(doc["channel"], tol);
  if (doc.contains("terms")) {
    std::vector<ChannelTerm> terms;
    for (const auto& t : doc["terms"]) {
      const auto& u = t.at("u");
      if (!u.is_array() || u.size() != 4) throw ParseError("unitary must list 4 [re, im] pairs");
      Mat2 m;
      for (std::size_t i = 0; i < 4; ++i) m.a[i] = Complex(u[i].at(0).get<double>(), u[i].at(1).get<double>());
      try {
        terms.push_back({t.at("p").get<double>(), QubitUnitary(m)});
      } catch (const InvalidArgument& e) {
        throw CpViolation(std::string("channel term is not unitary: ") + e.what());
      }
    }
    return RandomUnitaryChannel(std::move(terms), tol);
  }
  if (doc.contains("lambdas")) {
    const auto& l = doc["lambdas"];
    if (!l.is_array() || l.size() != 3) throw ParseError("lambdas must be [lx, ly, lz]");
    UnitalChannel ch;
    ch.diag = {l[0].get<double>(), l[1].get<double>(), l[2].get<double>()};
    if (doc.contains("rot_left")) ch.rot_left = parse_mat3(doc["rot_left"], "rot_left");
    if (doc.contains("rot_right")) ch.rot_right = parse_mat3(doc["rot_right"], "rot_right");
    return ch.decomposition(tol);
  }
  throw ParseError("channel file needs \"lambdas\" or \"terms\"");
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json to_json(const TpHullDescriptor& hull) {
  json basis = json::array();
  for (const auto& b : hull.basis) basis.push_back(to_json(b));
  return {{"dim", hull.affine_dim},
          {"delta", hull.delta},
          {"anchor", to_json(hull.anchor.r())},
          {"basis", basis}};
}

json to_json(const UnitalChannel& ch) {
  return {{"lambdas", {ch.diag.x, ch.diag.y, ch.diag.z}},
          {"rot_left", mat3_json(ch.rot_left)},
          {"rot_right", mat3_json(ch.rot_right)}};
}

json to_json(const RandomUnitaryChannel& ch) {
  json terms = json::array();
  for (const auto& t : ch.terms()) {
    json u = json::array();
    for (const auto& z : t.u.matrix().a) u.push_back({z.real(), z.imag()});
    terms.push_back({{"p", t.p}, {"u", u}});
  }
  return {{"terms", terms}};
}

json to_json(const TransmissionReport& rep) {
  return {{"n_slots", rep.n_slots},
          {"max_roundtrip_error", rep.max_roundtrip_error},
          {"eavesdropper_ciphertext", to_json(rep.eavesdropper_ciphertext.r())},
          {"max_eavesdropper_deviation", rep.max_eavesdropper_deviation}};
}

void cmd_classify(const ClassifyOptions& opt, std::ostream& out) {
  const auto hull = classify(parse_states(read_json_file(opt.states)), opt.tol);
  out << to_json(hull).dump() << '\n';
}

void cmd_optimal(const OptimalOptions& opt, std::ostream& out) {
  const auto hull = classify(parse_states(read_json_file(opt.states)), opt.tol);
  const auto sol = optimal_pqc(hull, opt.theta);
  const json report = {{"channel", to_json(sol.channel)},
                       {"terms", to_json(sol.decomposition)["terms"]},
                       {"entropy", sol.key_entropy},
                       {"ciphertext", to_json(sol.ciphertext.r())},
                       {"theta", sol.theta},
                       {"dim", hull.affine_dim},
                       {"delta", hull.delta}};
  out << report.dump() << '\n';
}

void cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const auto ch = parse_channel(read_json_file(opt.channel));
  const auto set = parse_states(read_json_file(opt.states));
  const auto res = verify_pqc(ch, set, opt.tol);
  const double eps = epsilon_for_set(ch, set);
  const bool ok = opt.epsilon ? eps <= *opt.epsilon : res.ok;
  const json report = {{"ok", ok},
                       {"ciphertext", to_json(res.ciphertext.r())},
                       {"max_deviation", res.max_deviation},
                       {"epsilon", eps}};
  out << report.dump() << '\n';
}

std::string frontier_csv(const FrontierOptions& opt) {
  if (!(opt.step > 0.0 && opt.step <= 0.02 + 1e-12))
    throw InvalidArgument("--step must lie in (0, 0.02]");
  if (!(opt.bin >= opt.step - 1e-12)) throw InvalidArgument("--bin must be at least --step");
  auto os = csv_stream();
  if (!opt.brute) {
    os << "epsilon,H_analytic\n";
    const auto n = static_cast<std::size_t>(std::ceil(2.0 / opt.bin - 1e-9));
    for (std::size_t k = 0; k <= n; ++k) {
      const double eps = std::min(2.0, static_cast<double>(k) * opt.bin);
      os << eps << ',' << analytic_frontier(eps) << '\n';
    }
    return os.str();
  }
  const auto curve = brute_force_frontier(opt.step, opt.bin);
  os << "epsilon,H_analytic,H_brute,lx,ly,lz\n";
  for (const auto& p : curve.points) {
    const double center = std::min(2.0, curve.bin_center(curve.bin_index(p.epsilon)));
    os << center << ',' << analytic_frontier(center) << ',' << p.entropy << ','
       << p.lambda.x << ',' << p.lambda.y << ',' << p.lambda.z << '\n';
  }
  return os.str();
}

void cmd_frontier(const FrontierOptions& opt, std::ostream& out) {
  const std::string body = frontier_csv(opt);
  write_file(opt.out, body);
  out << json{{"out", opt.out}, {"rows", std::count(body.begin(), body.end(), '\n') - 1}}.dump()
      << '\n';
}

std::string figure_csv(int which) {
  auto os = csv_stream();
  switch (which) {
    case 1: {
      const auto t = grid(0.0, 1.0, 100);
      const auto line = optimal_entropy_curve(HullKind::line, 1.0, t);
      const auto plane = optimal_entropy_curve(HullKind::plane, 1.0, t);
      os << "theta_over_delta,H_line,H_plane\n";
      for (std::size_t i = 0; i < t.size(); ++i)
        os << t[i] << ',' << line[i].second << ',' << plane[i].second << '\n';
      break;
    }
    case 2: {
      const auto rows =
          depolarizing_curve(grid(0.0, 2.0, 2000, {2.0 / 3.0, 2.0 * depolarizing_plateau_end()}));
      os << "epsilon,H\n";
      for (const auto& [eps, h] : rows) os << eps << ',' << h << '\n';
      break;
    }
    case 3: {
      os << "epsilon,H\n";
      for (double eps : grid(0.0, 2.0, 2000, {2.0 / 3.0, crossover().epsilon_star}))
        os << eps << ',' << analytic_frontier(eps) << '\n';
      break;
    }
    default:
      throw InvalidArgument("--which must be 1, 2 or 3");
  }
  return os.str();
}

void cmd_figure(const FigureOptions& opt, std::ostream& out) {
  const std::string body = figure_csv(opt.which);
  write_file(opt.out, body);
  out << json{{"out", opt.out}, {"rows", std::count(body.begin(), body.end(), '\n') - 1}}.dump()
      << '\n';
}

void cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
  const auto ch = parse_channel(read_json_file(opt.channel), opt.tol);
  const auto set = parse_states(read_json_file(opt.states));
  Message msg;
  msg.slots.reserve(opt.n);
  for (std::size_t i = 0; i < opt.n; ++i) msg.slots.push_back(set.states[i % set.states.size()]);
  const auto key = generate_key(ch, opt.n, opt.seed);
  json report = to_json(audit(msg, ch, key));
  report["seed"] = opt.seed;
  out << report.dump() << '\n';
}

int run_command(const std::function<void()>& fn, std::ostream& err) {
  try {
    fn();
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidState& e) {
    err << "invalid state: " << e.what() << '\n';
    return kInvalidState;
  } catch (const InfeasibleTheta& e) {
    err << "infeasible theta: " << e.what() << '\n';
    return kInfeasibleTheta;
  } catch (const CpViolation& e) {
    err << "not completely positive: " << e.what() << '\n';
    return kCpViolation;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace qpqc::cli
