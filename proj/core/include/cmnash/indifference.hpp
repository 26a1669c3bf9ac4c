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

#ifndef CMNASH_INDIFFERENCE_HPP_
#define CMNASH_INDIFFERENCE_HPP_

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cmnash/matrix.hpp"
#include "cmnash/rational.hpp"

namespace cmnash::indifference {

// Consecutive-row payoff differences: row k = (row k of A) - (row k+1 of A).
struct DifferenceMatrix {
  std::vector<std::vector<Rational>> d;  // (n-1) x m
  int source_rows = 0;                   // n
  int source_cols = 0;                   // m
};

// D stacked over an all-ones row, with b = (0, ..., 0, 1): the equal-payoff
// condition. x solves it iff the opponent mix x makes every own pure
// strategy earn the same payoff.
struct AugmentedSystem {
  std::vector<std::vector<Rational>> dbar;  // n x m
  std::vector<Rational> b;                  // length n
};

struct Indifferent {
  MixedStrategy x;
  Rational common_payoff;  // c with A x = (c, ..., c)
};

// w'D > 0 componentwise: no opponent mix can equalize all payoffs. w is
// scaled by the reciprocal of the absolute value of its first nonzero entry
// (positive scaling only — it must preserve the strict inequalities), so the
// leading nonzero is +-1.
struct NotPossible {
  std::vector<Rational> witness;  // length n-1
};

using IndifferenceOutcome = std::variant<Indifferent, NotPossible>;

struct CoverReport {
  bool covered = false;
  // Present iff covered == false; w'd > 0 for every column d of D.
  std::optional<std::vector<Rational>> witness;
};

struct PositiveIndifference {
  MixedStrategy x;      // strictly positive, equalizes all payoffs
  Rational min_weight;  // t* = max over indifference points of min_i x_i
};

struct NecessaryConditionReport {
  bool player1 = false;
  bool player2 = false;
};

DifferenceMatrix difference_matrix(const GameMatrix& a);  // requires n >= 2
AugmentedSystem augment(const DifferenceMatrix& d);

// Decides the equal-payoff condition for the row player of A. The common
// payoff c is recovered as the row-1 payoff at the solution. A single-row
// player (n == 1) is trivially Indifferent.
IndifferenceOutcome solve_indifference(const GameMatrix& a);

// Theorem-of-the-alternative view: covered iff the half spaces
// {v : v'd <= 0} of the columns d of D cover the whole space, decided by
// infeasibility of the homogenized system w'D >= 1. Zero columns lie in
// every half space and need no special casing.
CoverReport half_space_cover(const DifferenceMatrix& d);

// max t s.t. Dx = 0, sum x = 1, x_i >= t. Present iff t* > 0, i.e. some
// strictly positive mix equalizes all payoffs.
std::optional<PositiveIndifference> positive_indifference(const GameMatrix& a);

// Corollary test: flag i is the cover condition for player i's difference
// matrix. a1 is n1 x n2; a2 is n2 x n1 (each player's own payoff matrix).
NecessaryConditionReport necessary_condition(const GameMatrix& a1,
                                             const GameMatrix& a2);

// Present iff positive_indifference succeeds for both players; the returned
// (x, y) profile is then a completely mixed Nash equilibrium (x is player
// 1's strategy, computed from player 2's matrix, and vice versa).
std::optional<std::pair<MixedStrategy, MixedStrategy>>
completely_mixed_equilibrium(const GameMatrix& a1, const GameMatrix& a2);

}  // namespace cmnash::indifference

#endif  // CMNASH_INDIFFERENCE_HPP_
