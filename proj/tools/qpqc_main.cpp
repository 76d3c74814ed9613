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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qpqc/cli.hpp"

int main(int argc, char** argv) {
  using namespace qpqc::cli;

  CLI::App app{"qpqc: single-qubit private quantum channel toolkit"};
  app.require_subcommand(1);

  ClassifyOptions classify;
  auto* c = app.add_subcommand("classify", "Affine dimension and distance delta of a plaintext set");
  c->add_option("--states", classify.states, "State file")->required();
  c->add_option("--tol", classify.tol, "Rank threshold");

  OptimalOptions optimal;
  auto* o = app.add_subcommand("optimal", "Minimum-entropy PQC for a plaintext set");
  o->add_option("--states", optimal.states, "State file")->required();
  o->add_option("--theta", optimal.theta, "Ciphertext distance from I/2")->required();
  o->add_option("--tol", optimal.tol, "Rank threshold");

  VerifyOptions verify;
  double epsilon = 0.0;
  auto* v = app.add_subcommand("verify", "Check a channel against a plaintext set");
  v->add_option("--channel", verify.channel, "Channel file")->required();
  v->add_option("--states", verify.states, "State file")->required();
  auto* eps_opt = v->add_option("--epsilon", epsilon, "Accept pairwise distance up to this value");
  v->add_option("--tol", verify.tol, "Perfect-secrecy tolerance");

  FrontierOptions frontier;
  auto* f = app.add_subcommand("frontier", "Entropy/security trade-off as CSV");
  f->add_option("--step", frontier.step, "Lambda grid step for --brute");
  f->add_option("--bin", frontier.bin, "Epsilon bin width");
  f->add_option("--out", frontier.out, "Output CSV")->required();
  f->add_flag("--brute", frontier.brute, "Add brute-force minima over the CP tetrahedron");

  FigureOptions figure;
  auto* g = app.add_subcommand("figure", "Data series for the three trade-off figures");
  g->add_option("--which", figure.which, "1, 2 or 3")->required();
  g->add_option("--out", figure.out, "Output CSV")->required();

  SimulateOptions simulate;
  auto* s = app.add_subcommand("simulate", "Encrypt, decrypt and audit a message");
  s->add_option("--channel", simulate.channel, "Channel file")->required();
  s->add_option("--states", simulate.states, "State file; slots cycle through it")->required();
  s->add_option("--n", simulate.n, "Number of slots");
  s->add_option("--seed", simulate.seed, "Key stream seed");
  s->add_option("--tol", simulate.tol, "Probability tolerance");

  CLI11_PARSE(app, argc, argv);

  return run_command(
      [&] {
        if (*c) cmd_classify(classify, std::cout);
        if (*o) cmd_optimal(optimal, std::cout);
        if (*v) {
          if (*eps_opt) verify.epsilon = epsilon;
          cmd_verify(verify, std::cout);
        }
        if (*f) cmd_frontier(frontier, std::cout);
        if (*g) cmd_figure(figure, std::cout);
        if (*s) cmd_simulate(simulate, std::cout);
      },
      std::cerr);
}
