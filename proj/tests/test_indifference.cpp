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

#include <doctest.h>

#include <variant>

#include "cmnash/indifference.hpp"
#include "cmnash/sampler.hpp"

namespace cmnash::indifference {
namespace {

// Independent recheck of a NotPossible witness: w'd > 0 for every column d.
bool witness_separates(const std::vector<Rational>& w,
                       const DifferenceMatrix& d) {
  const int rows = static_cast<int>(d.d.size());
  if (static_cast<int>(w.size()) != rows) return false;
  for (int j = 0; j < d.source_cols; ++j) {
    Rational dot = 0;
    for (int i = 0; i < rows; ++i) dot += w[i] * d.d[i][j];
    if (dot <= 0) return false;
  }
  return true;
}

TEST_CASE("difference_matrix and augment shapes") {
  const GameMatrix a({{frac(1), frac(2), frac(3)}, {frac(0), frac(0), frac(0)}});
  const DifferenceMatrix d = difference_matrix(a);
  REQUIRE(d.d.size() == 1);
  CHECK(d.d[0] == std::vector<Rational>{frac(1), frac(2), frac(3)});
  const AugmentedSystem aug = augment(d);
  REQUIRE(aug.dbar.size() == 2);
  CHECK(aug.dbar[1] == std::vector<Rational>{frac(1), frac(1), frac(1)});
  CHECK(aug.b == std::vector<Rational>{frac(0), frac(1)});
}

TEST_CASE("matching pennies is indifferent at the uniform mix") {
  const GameMatrix a({{frac(1), frac(-1)}, {frac(-1), frac(1)}});
  const IndifferenceOutcome out = solve_indifference(a);
  REQUIRE(std::holds_alternative<Indifferent>(out));
  const auto& ind = std::get<Indifferent>(out);
  CHECK(ind.x.weights() == std::vector<Rational>{frac(1, 2), frac(1, 2)});
  CHECK(ind.common_payoff == 0);
}

TEST_CASE("rock-paper-scissors is indifferent at the uniform mix") {
  const GameMatrix a({{frac(0), frac(-1), frac(1)},
                      {frac(1), frac(0), frac(-1)},
                      {frac(-1), frac(1), frac(0)}},
                     /*symmetric=*/true);
  const IndifferenceOutcome out = solve_indifference(a);
  REQUIRE(std::holds_alternative<Indifferent>(out));
  const auto& ind = std::get<Indifferent>(out);
  CHECK(ind.x.weights() ==
        std::vector<Rational>{frac(1, 3), frac(1, 3), frac(1, 3)});
  CHECK(ind.common_payoff == 0);
}

TEST_CASE("a dominant row yields a verified witness") {
  const GameMatrix a({{frac(1), frac(1)}, {frac(0), frac(0)}});
  const IndifferenceOutcome out = solve_indifference(a);
  REQUIRE(std::holds_alternative<NotPossible>(out));
  const auto& np = std::get<NotPossible>(out);
  CHECK(np.witness == std::vector<Rational>{frac(1)});
  CHECK(witness_separates(np.witness, difference_matrix(a)));
}

TEST_CASE("witness leading nonzero is normalized to +-1") {
  const GameMatrix a({{frac(0), frac(0), frac(0)},
                      {frac(0), frac(0), frac(0)},
                      {frac(3), frac(5), frac(7)}});
  // D rows: (0,0,0) and (-3,-5,-7); any witness has w2 < 0.
  const IndifferenceOutcome out = solve_indifference(a);
  REQUIRE(std::holds_alternative<NotPossible>(out));
  const auto& np = std::get<NotPossible>(out);
  CHECK(witness_separates(np.witness, difference_matrix(a)));
  Rational leading = 0;
  for (const Rational& w : np.witness) {
    if (w != 0) {
      leading = w;
      break;
    }
  }
  CHECK(abs(leading) == 1);
}

TEST_CASE("single-row games are trivially indifferent") {
  const GameMatrix a({{frac(3), frac(7)}});
  const IndifferenceOutcome out = solve_indifference(a);
  REQUIRE(std::holds_alternative<Indifferent>(out));
  CHECK(std::get<Indifferent>(out).x.weights().size() == 2);
}

TEST_CASE("half_space_cover examples") {
  // Columns 1 and -1 cover the line.
  const GameMatrix covered({{frac(1), frac(-1)}, {frac(0), frac(0)}});
  CHECK(half_space_cover(difference_matrix(covered)).covered);
  // Columns 1 and 1 leave the positive ray uncovered; w = 1 certifies it.
  const GameMatrix uncovered({{frac(1), frac(2)}, {frac(0), frac(0)}});
  const CoverReport rep = half_space_cover(difference_matrix(uncovered));
  CHECK_FALSE(rep.covered);
  REQUIRE(rep.witness.has_value());
  CHECK(witness_separates(*rep.witness, difference_matrix(uncovered)));
  // A zero column lies in every half space: all-zero D is covered.
  const GameMatrix zero({{frac(1), frac(1)}, {frac(1), frac(1)}});
  CHECK(half_space_cover(difference_matrix(zero)).covered);
}

TEST_CASE("positive_indifference requires interior solutions") {
  // Equalizing mixes exist but all sit on the boundary: x = (0, 1/2, 1/2).
  const GameMatrix boundary({{frac(1), frac(1), frac(0)},
                             {frac(0), frac(1), frac(0)},
                             {frac(0), frac(0), frac(1)}});
  CHECK_FALSE(positive_indifference(boundary).has_value());

  const GameMatrix rps({{frac(0), frac(-1), frac(1)},
                        {frac(1), frac(0), frac(-1)},
                        {frac(-1), frac(1), frac(0)}},
                       /*symmetric=*/true);
  const auto pos = positive_indifference(rps);
  REQUIRE(pos.has_value());
  CHECK(pos->x.weights() ==
        std::vector<Rational>{frac(1, 3), frac(1, 3), frac(1, 3)});
  CHECK(pos->min_weight == frac(1, 3));
}

TEST_CASE("necessary condition and equilibrium for battle of the sexes") {
  const GameMatrix a1({{frac(2), frac(0)}, {frac(0), frac(1)}});
  const GameMatrix a2({{frac(1), frac(0)}, {frac(0), frac(2)}});
  const NecessaryConditionReport nec = necessary_condition(a1, a2);
  CHECK(nec.player1);
  CHECK(nec.player2);
  const auto eq = completely_mixed_equilibrium(a1, a2);
  REQUIRE(eq.has_value());
  CHECK(eq->first.weights() == std::vector<Rational>{frac(2, 3), frac(1, 3)});
  CHECK(eq->second.weights() == std::vector<Rational>{frac(1, 3), frac(2, 3)});
}

TEST_CASE("no completely mixed equilibrium under dominance") {
  const GameMatrix a1({{frac(1), frac(1)}, {frac(0), frac(0)}});
  const GameMatrix a2({{frac(0), frac(1)}, {frac(1), frac(0)}});
  const NecessaryConditionReport nec = necessary_condition(a1, a2);
  CHECK_FALSE(nec.player1);  // player 1's top row dominates
  CHECK(nec.player2);
  CHECK_FALSE(completely_mixed_equilibrium(a1, a2).has_value());
}

TEST_CASE("cover condition and feasibility agree on random games") {
  SplitMix64 rng(31337);
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + static_cast<int>(rng.next_below(3));
    const int m = 2 + static_cast<int>(rng.next_below(3));
    const GameMatrix g = random_game(rng, n, m, 4);
    const bool feasible =
        std::holds_alternative<Indifferent>(solve_indifference(g));
    const bool covered = half_space_cover(difference_matrix(g)).covered;
    CHECK(feasible == covered);
  }
}

}  // namespace
}  // namespace cmnash::indifference
