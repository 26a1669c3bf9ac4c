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

#ifndef CMNASH_ORACLE_HPP_
#define CMNASH_ORACLE_HPP_

#include <optional>
#include <vector>

#include "cmnash/matrix.hpp"
#include "cmnash/rational.hpp"

namespace cmnash::oracle {

// Strategy `dominated` earns strictly less than the mixture `dominator`
// (over the remaining rows, in original order with the dominated row
// skipped) against every opponent column, by at least `margin` > 0.
struct DominanceResult {
  int dominated = 0;
  MixedStrategy dominator;
  Rational margin;
};

struct Equilibrium {
  std::vector<int> support;                 // player 1 support (sorted)
  std::optional<std::vector<int>> support2; // player 2 support (bimatrix)
  MixedStrategy x;
  std::optional<MixedStrategy> y;           // present for bimatrix games
  bool completely_mixed = false;
};

// Equilibria from exhaustive support enumeration, ordered by support size
// then lexicographically. `degenerate` is set when a support system is
// singular (solution continuum skipped, not enumerated) or an off-support
// payoff ties the support payoff; uniqueness is then not certified.
struct EquilibriumSet {
  std::vector<Equilibrium> equilibria;
  bool degenerate = false;
};

// LP over mixtures of the other rows with a homogenized margin variable:
// present iff max margin > 0. Index i is 0-based.
std::optional<DominanceResult> strictly_dominated(const GameMatrix& a, int i);

// True iff no pure deviation of either player strictly improves. a2 is
// player 2's own n2 x n1 payoff matrix.
bool best_reply_check(const GameMatrix& a1, const GameMatrix& a2,
                      const MixedStrategy& x, const MixedStrategy& y);

// Symmetric-profile equilibria of a symmetric game (both players play x).
// Requires a.symmetric() and n <= 4.
EquilibriumSet symmetric_equilibria(const GameMatrix& a);

// Support-pair enumeration for general bimatrix games, n1, n2 <= 4.
EquilibriumSet bimatrix_equilibria(const GameMatrix& a1, const GameMatrix& a2);

}  // namespace cmnash::oracle

#endif  // CMNASH_ORACLE_HPP_
