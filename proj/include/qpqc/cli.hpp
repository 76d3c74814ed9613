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

// JSON/CSV front end shared by the qpqc executable and its tests. Each
// command writes its report to `out` and throws on failure; run_command maps
// the exception to the documented exit code.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "qpqc/channels.hpp"
#include "qpqc/errors.hpp"
#include "qpqc/pqc.hpp"
#include "qpqc/protocol.hpp"

namespace qpqc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParse = 2,
  kInvalidState = 3,
  kInfeasibleTheta = 4,
  kCpViolation = 5,
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// {"states": [[rx, ry, rz], ...]}
PlaintextSet parse_states(const nlohmann::json& doc);
/// {"lambdas": [lx, ly, lz], "rot_left": 3x3, "rot_right": 3x3} with
/// optional rotations, or {"terms": [{"p": p, "u": [[re, im] x 4]}, ...]}.
/// A document with a "channel" member is read through that member, so the
/// output of `optimal` can be fed back in.
RandomUnitaryChannel parse_channel(const nlohmann::json& doc, double tol = kTolProb);
nlohmann::json read_json_file(const std::string& path);

nlohmann::json to_json(const Vec3& v);
nlohmann::json to_json(const TpHullDescriptor& hull);
nlohmann::json to_json(const UnitalChannel& ch);
nlohmann::json to_json(const RandomUnitaryChannel& ch);
nlohmann::json to_json(const TransmissionReport& rep);

struct ClassifyOptions {
  std::string states;
  double tol = kTolRank;
};

struct OptimalOptions {
  std::string states;
  double theta = 0.0;
  double tol = kTolRank;
};

struct VerifyOptions {
  std::string channel;
  std::string states;
  std::optional<double> epsilon;
  double tol = kTolState;
};

struct FrontierOptions {
  double step = 0.005;
  double bin = 0.01;
  std::string out;
  bool brute = false;
};

struct FigureOptions {
  int which = 1;
  std::string out;
};

struct SimulateOptions {
  std::string channel;
  std::string states;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  double tol = kTolProb;
};

void cmd_classify(const ClassifyOptions& opt, std::ostream& out);
void cmd_optimal(const OptimalOptions& opt, std::ostream& out);
void cmd_verify(const VerifyOptions& opt, std::ostream& out);
void cmd_frontier(const FrontierOptions& opt, std::ostream& out);
void cmd_figure(const FigureOptions& opt, std::ostream& out);
void cmd_simulate(const SimulateOptions& opt, std::ostream& out);

/// CSV bodies written by cmd_frontier and cmd_figure.
std::string frontier_csv(const FrontierOptions& opt);
std::string figure_csv(int which);

/// Runs fn, printing any error to err; returns the exit code.
int run_command(const std::function<void()>& fn, std::ostream& err);

}  // namespace qpqc::cli
