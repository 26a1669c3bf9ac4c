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

#include "cmnash/classify.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "cmnash/oracle.hpp"

namespace cmnash::classify {
namespace {

// Cell codes: '0', '1' literal; 'a', 'b', 'c' are parameters a1, a2, a3.
constexpr const char* kPatterns[6][3] = {
    {"01c", "a01", "1b0"},  // A1
    {"011", "a0c", "1b0"},  // A2  with a1 + a3 > 1
    {"a10", "0b1", "10c"},  // A3
    {"011", "100", "abc"},  // A4  with a3 < 1 - a1 < a2
    {"0b1", "100", "a1c"},  // A5  with a1 + a3 < 1
    {"010", "ab1", "10c"},  // A6  with a1 + a2 < 1
};

bool in_unit_interval(const Rational& v, bool strict) {
  return strict ? (v > 0 && v < 1) : (v >= 0 && v <= 1);
}

// Matches `m` against class `c` under permutation `sigma`. Literal cells
// must match exactly; parameter cells must land in (0,1) (strict) or [0,1]
// (closure), and the class condition must hold accordingly.
std::optional<std::array<Rational, 3>> match_pattern(const GameMatrix& m,
                                                     GameClass c,
                                                     const Permutation& sigma,
                                                     bool strict) {
  const GameMatrix r = relabel(m, sigma);
  const int ci = class_index(c) - 1;
  std::array<Rational, 3> params{Rational(0), Rational(0), Rational(0)};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const char cell = kPatterns[ci][i][j];
      const Rational& v = r.at(i, j);
      if (cell == '0') {
        if (v != 0) return std::nullopt;
      } else if (cell == '1') {
        if (v != 1) return std::nullopt;
      } else {
        if (!in_unit_interval(v, strict)) return std::nullopt;
        params[cell - 'a'] = v;
      }
    }
  }
  if (!class_condition(c, params, strict)) return std::nullopt;
  return params;
}

std::vector<int> repeated_entry_columns(const GameMatrix& a) {
  std::vector<int> cols;
  for (int j = 0; j < a.cols(); ++j) {
    bool repeated = false;
    for (int i = 0; i < a.rows() && !repeated; ++i) {
      for (int k = i + 1; k < a.rows(); ++k) {
        if (a.at(i, j) == a.at(k, j)) {
          repeated = true;
          break;
        }
      }
    }
    if (repeated) cols.push_back(j);
  }
  return cols;
}

void require_3x3_symmetric(const GameMatrix& a, const char* who) {
  if (a.rows() != 3 || a.cols() != 3 || !a.symmetric()) {
    throw std::invalid_argument(std::string(who) +
                                ": requires a symmetric 3x3 game");
  }
}

}  // namespace

int class_index(GameClass c) { return static_cast<int>(c) + 1; }

GameClass class_from_index(int idx) {
  if (idx < 1 || idx > 6) throw std::out_of_range("class_from_index");
  return static_cast<GameClass>(idx - 1);
}

bool check_generic(const GameMatrix& a) {
  return repeated_entry_columns(a).empty();
}

NormalizedMatrix normalize(const GameMatrix& a) {
  std::vector<std::vector<Rational>> rows(a.rows(),
                                          std::vector<Rational>(a.cols()));
  std::vector<ColumnTransform> transforms;
  for (int j = 0; j < a.cols(); ++j) {
    Rational lo = a.at(0, j);
    Rational hi = a.at(0, j);
    for (int i = 1; i < a.rows(); ++i) {
      if (a.at(i, j) < lo) lo = a.at(i, j);
      if (a.at(i, j) > hi) hi = a.at(i, j);
    }
    if (lo == hi) {
      throw std::invalid_argument("normalize: constant column (non-generic)");
    }
    const Rational scale = Rational(1) / (hi - lo);
    for (int i = 0; i < a.rows(); ++i) rows[i][j] = (a.at(i, j) - lo) * scale;
    transforms.push_back(ColumnTransform{lo, scale});
  }
  return NormalizedMatrix{GameMatrix(std::move(rows), a.symmetric()),
                          std::move(transforms)};
}

GameMatrix pattern_matrix(GameClass c, const std::array<Rational, 3>& params) {
  const int ci = class_index(c) - 1;
  std::vector<std::vector<Rational>> rows(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const char cell = kPatterns[ci][i][j];
      if (cell == '0') {
        rows[i][j] = 0;
      } else if (cell == '1') {
        rows[i][j] = 1;
      } else {
        rows[i][j] = params[cell - 'a'];
      }
    }
  }
  return GameMatrix(std::move(rows), true);
}

bool class_condition(GameClass c, const std::array<Rational, 3>& p,
                     bool strict) {
  const auto less = [strict](const Rational& x, const Rational& y) {
    return strict ? x < y : x <= y;
  };
  switch (c) {
    case GameClass::kA1:
    case GameClass::kA3:
      return true;
    case GameClass::kA2:
      return less(Rational(1), p[0] + p[2]);
    case GameClass::kA4:
      return less(p[2], 1 - p[0]) && less(1 - p[0], p[1]);
    case GameClass::kA5:
      return less(p[0] + p[2], Rational(1));
    case GameClass::kA6:
      return less(p[0] + p[1], Rational(1));
  }
  return false;
}

std::optional<Classified> closure_membership(const GameMatrix& m, GameClass c) {
  for (const Permutation& sigma : Permutation::all(3)) {
    if (auto params = match_pattern(m, c, sigma, /*strict=*/false)) {
      return Classified{c, sigma, *params};
    }
  }
  return std::nullopt;
}

ClassificationReport classify(const GameMatrix& a) {
  require_3x3_symmetric(a, "classify");
  const std::vector<int> bad_cols = repeated_entry_columns(a);
  if (!bad_cols.empty()) {
    return ClassificationReport{
        Rejected{RejectReason::kNonGeneric, {}, bad_cols}, std::nullopt};
  }
  NormalizedMatrix norm = normalize(a);
  const GameMatrix& n = norm.matrix;
  // A diagonal 1 in normalized form is a diagonal column maximum: a strict
  // symmetric pure equilibrium.
  for (int i = 0; i < 3; ++i) {
    if (n.at(i, i) == 1) {
      return ClassificationReport{
          Rejected{RejectReason::kPureSymmetricEquilibrium, {}, {}},
          std::move(norm)};
    }
  }
  std::vector<GameClass> candidates;
  for (int ci = 1; ci <= 6; ++ci) {
    const GameClass c = class_from_index(ci);
    bool structural = false;
    for (const Permutation& sigma : Permutation::all(3)) {
      if (auto params = match_pattern(n, c, sigma, /*strict=*/true)) {
        return ClassificationReport{Classified{c, sigma, *params},
                                    std::move(norm)};
      }
      // Distinguish "matched but condition failed": re-try the cells with
      // the condition dropped (closure cell match is the same for interior
      // entries of a generic normalized matrix).
      if (!structural) {
        if (auto loose = match_pattern(n, c, sigma, /*strict=*/false)) {
          structural = true;
        }
      }
    }
    if (structural) candidates.push_back(c);
  }
  if (!candidates.empty()) {
    return ClassificationReport{
        Rejected{RejectReason::kConditionViolated, std::move(candidates), {}},
        std::move(norm)};
  }
  for (int i = 0; i < 3; ++i) {
    if (oracle::strictly_dominated(n, i)) {
      return ClassificationReport{
          Rejected{RejectReason::kDominatedStrategy, {}, {}, i},
          std::move(norm)};
    }
  }
  // Generic, undominated, no pure symmetric equilibrium, no pattern: these
  // games carry an additional non-pure symmetric equilibrium (so uniqueness
  // fails); reported as a condition violation with no candidate class.
  return ClassificationReport{
      Rejected{RejectReason::kConditionViolated, {}, {}}, std::move(norm)};
}

AdjacencyGraph adjacency(const Rational& resolution) {
  if (resolution <= 0 || resolution > 1) {
    throw std::invalid_argument("adjacency: resolution must be in (0, 1]");
  }
  std::vector<Rational> grid;
  for (Rational v = 0; v <= 1; v += resolution) grid.push_back(v);
  if (grid.back() != 1) grid.push_back(Rational(1));
  AdjacencyGraph graph;
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      const GameClass ca = class_from_index(i);
      const GameClass cb = class_from_index(j);
      bool found = false;
      for (const Rational& a1 : grid) {
        for (const Rational& a2 : grid) {
          for (const Rational& a3 : grid) {
            const std::array<Rational, 3> p{a1, a2, a3};
            if (!class_condition(ca, p, /*strict=*/false)) continue;
            GameMatrix m = pattern_matrix(ca, p);
            if (closure_membership(m, cb)) {
              assert(closure_membership(m, ca));
              graph.edges.push_back(AdjacencyEdge{ca, cb, std::move(m)});
              found = true;
            }
            if (found) break;
          }
          if (found) break;
        }
        if (found) break;
      }
    }
  }
  return graph;
}

}  // namespace cmnash::classify
