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

#ifndef CMNASH_CLASSIFY_HPP_
#define CMNASH_CLASSIFY_HPP_

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "cmnash/matrix.hpp"
#include "cmnash/rational.hpp"

namespace cmnash::classify {

// The six canonical classes of symmetric 3x3 games whose unique symmetric
// equilibrium is completely mixed.
enum class GameClass { kA1, kA2, kA3, kA4, kA5, kA6 };

int class_index(GameClass c);        // 1..6
GameClass class_from_index(int idx); // 1..6

// Per-column affine transform e -> (e - shift) * scale with scale > 0,
// mapping the column onto [0, 1] with min 0 and max 1.
struct ColumnTransform {
  Rational shift;
  Rational scale;
};

struct NormalizedMatrix {
  GameMatrix matrix;
  std::vector<ColumnTransform> transforms;
};

struct Classified {
  GameClass game_class;
  Permutation sigma;  // relabel(normalize(A), sigma) == pattern(params)
  std::array<Rational, 3> params;
};

enum class RejectReason {
  kNonGeneric,
  kPureSymmetricEquilibrium,
  kDominatedStrategy,
  kConditionViolated,
};

struct Rejected {
  RejectReason reason;
  // For kConditionViolated: classes whose pattern matched structurally but
  // whose strict inequality failed. Empty when the matrix is generic,
  // undominated and has no pure symmetric equilibrium, yet matches no
  // pattern at all (these games have an extra non-pure mixed equilibrium).
  std::vector<GameClass> candidates;
  // For kNonGeneric: 0-based indices of columns with repeated entries.
  std::vector<int> offending_columns;
  // For kDominatedStrategy: 0-based index of a strictly dominated row.
  std::optional<int> dominated_strategy;
};

struct ClassificationReport {
  std::variant<Classified, Rejected> outcome;
  // Absent only when the input is non-generic (normalization undefined).
  std::optional<NormalizedMatrix> normalized;
};

struct AdjacencyEdge {
  GameClass a;  // class_index(a) < class_index(b)
  GameClass b;
  GameMatrix witness;  // lies in the closure of both classes
};

struct AdjacencyGraph {
  std::vector<AdjacencyEdge> edges;
};

// True iff every column of A has pairwise distinct entries.
bool check_generic(const GameMatrix& a);

// Column-wise affine map onto min 0 / max 1. Requires check_generic (in
// particular, nonzero column range). Idempotent on normalized input.
NormalizedMatrix normalize(const GameMatrix& a);

// The canonical pattern matrix of a class at given parameters.
GameMatrix pattern_matrix(GameClass c, const std::array<Rational, 3>& params);

// The class's parameter condition (A1, A3: none). `strict` selects strict
// inequalities (classification) vs non-strict (closures).
bool class_condition(GameClass c, const std::array<Rational, 3>& params,
                     bool strict);

// Matches `m` (already normalized) against the closed class region: some
// relabeling of m equals pattern_matrix(c, p) with p in [0,1]^3 and the
// non-strict condition. Returns the match with lexicographically smallest
// permutation.
std::optional<Classified> closure_membership(const GameMatrix& m, GameClass c);

// Full classification per the six-class taxonomy. Requires 3x3 symmetric.
ClassificationReport classify(const GameMatrix& a);

// Grid search for boundary matrices shared by two class closures: for each
// class, every parameter triple with entries in {0, resolution, ..., 1}
// satisfying the non-strict condition is tested for membership in every
// other class's closure (any relabeling). Deterministic; the first witness
// found per pair (scan order: class index, then lexicographic triple) is
// recorded.
AdjacencyGraph adjacency(const Rational& resolution);

}  // namespace cmnash::classify

#endif  // CMNASH_CLASSIFY_HPP_
