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

#include "commands.hpp"

#include <fstream>
#include <map>

#include "cmnash/classify.hpp"
#include "cmnash/indifference.hpp"
#include "cmnash/oracle.hpp"
#include "cmnash/render.hpp"
#include "cmnash/sampler.hpp"
#include "report.hpp"

namespace cmnash::cli {
namespace {

namespace ind = cmnash::indifference;

bool is_indifferent(const ind::IndifferenceOutcome& out) {
  return std::holds_alternative<ind::Indifferent>(out);
}

bool cover_flag(const GameMatrix& a) {
  if (a.rows() < 2) return true;  // no row differences to separate
  return ind::half_space_cover(ind::difference_matrix(a)).covered;
}

nlohmann::json analyze_player(const GameMatrix& a) {
  nlohmann::json j;
  j["indifference"] = indifference_json(ind::solve_indifference(a));
  j["covered"] = cover_flag(a);
  nlohmann::json pos;
  if (auto p = ind::positive_indifference(a)) {
    pos["present"] = true;
    pos["x"] = strategy_json(p->x);
    pos["min_weight"] = to_string(p->min_weight);
  } else {
    pos["present"] = false;
  }
  j["positive"] = std::move(pos);
  return j;
}

std::optional<GameMatrix> player2_matrix(const GameFile& game) {
  if (game.b) return *game.b;
  if (game.symmetric) return game.a;
  return std::nullopt;
}

// True iff the oracle certifies the Proposition-1 property: exactly one
// symmetric equilibrium, completely mixed.
bool unique_completely_mixed(const oracle::EquilibriumSet& set) {
  return set.equilibria.size() == 1 && set.equilibria[0].completely_mixed;
}

}  // namespace

CommandResult cmd_analyze(const GameFile& game, std::optional<int> player) {
  if (player && *player != 1 && *player != 2) {
    throw std::invalid_argument("--player must be 1 or 2");
  }
  const std::optional<GameMatrix> a2 = player2_matrix(game);
  nlohmann::json report = make_report("analyze", game_file_json(game));
  nlohmann::json players;
  const bool want1 = !player || *player == 1;
  const bool want2 = (player && *player == 2) || (!player && a2.has_value());
  if (want1) players["player1"] = analyze_player(game.a);
  if (want2) {
    if (!a2) {
      throw DomainError("player 2 requires \"B\" or the symmetric flag");
    }
    players["player2"] = analyze_player(*a2);
  }
  report["players"] = std::move(players);
  if (want1 && want2 && a2) {
    nlohmann::json cor;
    const ind::NecessaryConditionReport nec =
        ind::necessary_condition(game.a, *a2);
    cor["player1_covered"] = nec.player1;
    cor["player2_covered"] = nec.player2;
    if (auto eq = ind::completely_mixed_equilibrium(game.a, *a2)) {
      cor["completely_mixed_equilibrium"] = {
          {"present", true},
          {"x", strategy_json(eq->first)},
          {"y", strategy_json(eq->second)}};
    } else {
      cor["completely_mixed_equilibrium"] = {{"present", false}};
    }
    report["corollary"] = std::move(cor);
  }
  return CommandResult{std::move(report), 0};
}

CommandResult cmd_classify(const GameFile& game) {
  if (game.a.rows() != 3 || game.a.cols() != 3 || !game.symmetric) {
    throw DomainError("classify requires a symmetric 3x3 game file");
  }
  const classify::ClassificationReport rep = classify::classify(game.a);
  nlohmann::json report = make_report("classify", game_file_json(game));
  report["classification"] = classification_json(rep);
  int code = 0;
  if (const auto* rej = std::get_if<classify::Rejected>(&rep.outcome)) {
    if (rej->reason == classify::RejectReason::kNonGeneric) code = 2;
  }
  return CommandResult{std::move(report), code};
}

CommandResult cmd_equilibria(const GameFile& game) {
  constexpr int kCap = 4;
  if (game.a.rows() > kCap || game.a.cols() > kCap) {
    throw DomainError("equilibria: game exceeds the oracle size cap (4)");
  }
  oracle::EquilibriumSet set{{}, false};
  if (game.symmetric) {
    set = oracle::symmetric_equilibria(game.a);
  } else if (game.b) {
    set = oracle::bimatrix_equilibria(game.a, *game.b);
  } else {
    throw DomainError("equilibria requires \"B\" or the symmetric flag");
  }
  nlohmann::json report = make_report("equilibria", game_file_json(game));
  report["equilibria"] = equilibrium_set_json(set);
  // Degeneracy still reports partial results, but with exit code 2.
  return CommandResult{std::move(report), set.degenerate ? 2 : 0};
}

CommandResult cmd_sample(const SamplerConfig& config) {
  if (config.count < 1 || config.denominator_bound < 1 || config.n < 1 ||
      config.n > 5) {
    throw std::invalid_argument("sample: invalid config");
  }
  if (config.exhaustive && config.n != 2) {
    throw std::invalid_argument("sample: --exhaustive requires n=2");
  }
  nlohmann::json input;
  input["n"] = config.n;
  input["count"] = config.count;
  input["seed"] = config.seed;
  input["denominator_bound"] = config.denominator_bound;
  input["exhaustive"] = config.exhaustive;
  nlohmann::json report = make_report("sample", std::move(input));

  long mismatches = 0;
  long degenerate_skipped = 0;
  std::map<std::string, long> tally;
  long games = 0;

  const auto check_equivalence = [&](const GameMatrix& g) {
    const bool covered = cover_flag(g);
    const bool feasible = is_indifferent(ind::solve_indifference(g));
    if (covered != feasible) ++mismatches;
  };

  if (config.exhaustive) {
    // All {0,1,2}-entry 2x2 games: Theorem 1 equivalence on each.
    for (int mask = 0; mask < 81; ++mask) {
      int v = mask;
      std::vector<std::vector<Rational>> rows(2, std::vector<Rational>(2));
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          rows[i][j] = v % 3;
          v /= 3;
        }
      }
      check_equivalence(GameMatrix(std::move(rows)));
      ++games;
    }
  } else {
    SplitMix64 rng(config.seed);
    for (int k = 0; k < config.count; ++k) {
      const bool symmetric = config.n == 3;
      const GameMatrix g = random_game(rng, config.n, config.n,
                                       config.denominator_bound, symmetric);
      ++games;
      check_equivalence(g);
      if (!symmetric) continue;
      // Classifier vs oracle (Proposition 1 both directions).
      const classify::ClassificationReport rep = classify::classify(g);
      bool non_generic = false;
      if (const auto* cls = std::get_if<classify::Classified>(&rep.outcome)) {
        ++tally[class_name(cls->game_class)];
      } else {
        const auto& rej = std::get<classify::Rejected>(rep.outcome);
        non_generic = rej.reason == classify::RejectReason::kNonGeneric;
        ++tally[non_generic ? "NonGeneric" : "Rejected"];
      }
      if (non_generic) continue;  // taxonomy only speaks to generic games
      const oracle::EquilibriumSet set = oracle::symmetric_equilibria(g);
      if (set.degenerate) {
        ++degenerate_skipped;
        continue;
      }
      const bool classified =
          std::holds_alternative<classify::Classified>(rep.outcome);
      if (classified != unique_completely_mixed(set)) ++mismatches;
    }
  }
  report["games"] = games;
  nlohmann::json per_class;
  for (const auto& [name, count] : tally) per_class[name] = count;
  report["per_class"] = std::move(per_class);
  report["degenerate_skipped"] = degenerate_skipped;
  report["mismatches"] = mismatches;
  return CommandResult{std::move(report), mismatches == 0 ? 0 : 2};
}

CommandResult cmd_render(const GameFile& game, const std::string& output_path) {
  if (game.a.rows() != 3) {
    throw DomainError("render requires a three-strategy game");
  }
  const std::string svg = render_halfspace_svg(game.a);
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write: " + output_path);
  out << svg;
  if (!out.good()) throw std::invalid_argument("write failed: " + output_path);
  return CommandResult{nlohmann::json(), 0};
}

CommandResult cmd_adjacency(const Rational& resolution) {
  const classify::AdjacencyGraph graph = classify::adjacency(resolution);
  nlohmann::json input;
  input["resolution"] = to_string(resolution);
  nlohmann::json report = make_report("adjacency", std::move(input));
  report["adjacency"] = adjacency_json(graph);
  return CommandResult{std::move(report), 0};
}

}  // namespace cmnash::cli
