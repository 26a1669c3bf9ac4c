// Copyright 2026 The cmnash Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

int emit(const cmnash::cli::CommandResult& result) {
  if (!result.report.is_null()) {
    std::cout << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for complete indifference and "
               "completely mixed Nash equilibria"};
  app.require_subcommand(1);

  std::string file;
  std::string output_path;
  int player = 0;
  std::string resolution = "1/8";
  cmnash::cli::SamplerConfig config;

  CLI::App* analyze = app.add_subcommand("analyze",
      "Indifference, half-space cover and Corollary-1 report");
  analyze->add_option("file", file, "JSON game file")->required();
  analyze->add_option("--player", player, "Restrict to player 1 or 2");

  CLI::App* classify = app.add_subcommand("classify",
      "Six-class taxonomy of a symmetric 3x3 game");
  classify->add_option("file", file, "JSON game file")->required();

  CLI::App* equilibria = app.add_subcommand("equilibria",
      "Support-enumeration equilibrium oracle");
  equilibria->add_option("file", file, "JSON game file")->required();

  CLI::App* sample = app.add_subcommand("sample",
      "Seeded random cross-checks of classifier, oracle and cover test");
  sample->add_option("--n", config.n, "Game size");
  sample->add_option("--count", config.count, "Number of games");
  sample->add_option("--seed", config.seed, "64-bit seed");
  sample->add_option("--denominator", config.denominator_bound,
                     "Denominator bound");
  sample->add_flag("--exhaustive", config.exhaustive,
                   "Enumerate all {0,1,2}-entry games (n=2)");

  CLI::App* render = app.add_subcommand("render",
      "Deterministic SVG of the half-space diagram");
  render->add_option("file", file, "JSON game file")->required();
  render->add_option("--output", output_path, "Output SVG path")->required();

  CLI::App* adjacency = app.add_subcommand("adjacency",
      "Class-closure adjacency graph with boundary witnesses");
  adjacency->add_option("--resolution", resolution, "Grid step, e.g. 1/8");

  CLI11_PARSE(app, argc, argv);

  try {
    using namespace cmnash::cli;
    if (analyze->parsed()) {
      std::optional<int> p;
      if (player != 0) p = player;
      return emit(cmd_analyze(load_game_file(file), p));
    }
    if (classify->parsed()) return emit(cmd_classify(load_game_file(file)));
    if (equilibria->parsed()) return emit(cmd_equilibria(load_game_file(file)));
    if (sample->parsed()) return emit(cmd_sample(config));
    if (render->parsed()) {
      return emit(cmd_render(load_game_file(file), output_path));
    }
    if (adjacency->parsed()) {
      return emit(cmd_adjacency(cmnash::parse_rational(resolution)));
    }
  } catch (const cmnash::cli::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
