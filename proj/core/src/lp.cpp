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

#include "cmnash/lp.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>

namespace cmnash::lp {
namespace {

// Internal standard form: maximize cost'z subject to T z = rhs, z >= 0,
// rhs >= 0. Free variables of the caller are split into z+ - z-; one
// artificial column per row provides the initial basis.
struct Tableau {
  // rows[k] has nstruct + nrows + 1 entries; the last one is the rhs.
  std::vector<std::vector<Rational>> rows;
  std::vector<int> basis;       // basis[k] = column basic in row k
  std::vector<int> row_sign;    // +-1 applied to the caller's row k
  std::vector<int> art_col;     // artificial column index for original row k
  int nstruct = 0;              // structural columns (entering candidates)

  int ncols() const { return nstruct + static_cast<int>(art_col.size()); }
  Rational& rhs(int k) { return rows[k].back(); }
  const Rational& rhs(int k) const { return rows[k].back(); }
};

// Maps caller variables to structural columns (free vars use two columns).
struct ColumnMap {
  std::vector<int> first_col;   // column of x_j (positive part for free vars)
  std::vector<bool> split;      // true if x_j has a negative-part column
};

void pivot(Tableau& t, int row, int col) {
  const Rational p = t.rows[row][col];
  assert(p != 0);
  for (auto& e : t.rows[row]) e /= p;
  for (int k = 0; k < static_cast<int>(t.rows.size()); ++k) {
    if (k == row) continue;
    const Rational f = t.rows[k][col];
    if (f == 0) continue;
    for (std::size_t j = 0; j < t.rows[k].size(); ++j) {
      t.rows[k][j] -= f * t.rows[row][j];
    }
  }
  t.basis[row] = col;
}

// Bland's rule simplex on a tableau already holding a feasible basis.
// `cost` has one entry per column (artificials included, never entering).
// Returns false on unboundedness.
bool run_simplex(Tableau& t, const std::vector<Rational>& cost) {
  const int nrows = static_cast<int>(t.rows.size());
  std::vector<bool> in_basis(t.ncols(), false);
  for (int b : t.basis) in_basis[b] = true;
  for (;;) {
    // Reduced profit of column j: cost[j] - cost_B' (B^-1 A_j).
    int enter = -1;
    for (int j = 0; j < t.nstruct; ++j) {
      if (in_basis[j]) continue;
      Rational red = cost[j];
      for (int k = 0; k < nrows; ++k) red -= cost[t.basis[k]] * t.rows[k][j];
      if (red > 0) {
        enter = j;
        break;  // Bland: least index
      }
    }
    if (enter < 0) return true;  // optimal
    int leave = -1;
    Rational best_ratio;
    for (int k = 0; k < nrows; ++k) {
      if (t.rows[k][enter] <= 0) continue;
      Rational ratio = t.rhs(k) / t.rows[k][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[k] < t.basis[leave])) {
        leave = k;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded
    in_basis[t.basis[leave]] = false;
    in_basis[enter] = true;
    pivot(t, leave, enter);
  }
}

ColumnMap build_columns(const LinearSystem& sys) {
  ColumnMap map;
  map.first_col.resize(sys.cols());
  map.split.resize(sys.cols());
  int col = 0;
  for (int j = 0; j < sys.cols(); ++j) {
    map.first_col[j] = col;
    map.split[j] = !sys.nonneg[j];
    col += map.split[j] ? 2 : 1;
  }
  return map;
}

Tableau build_tableau(const LinearSystem& sys, const ColumnMap& map) {
  Tableau t;
  const int r = sys.rows();
  int nstruct = 0;
  for (int j = 0; j < sys.cols(); ++j) nstruct += map.split[j] ? 2 : 1;
  t.nstruct = nstruct;
  t.row_sign.resize(r);
  t.art_col.resize(r);
  t.basis.resize(r);
  t.rows.assign(r, std::vector<Rational>(nstruct + r + 1, Rational(0)));
  for (int i = 0; i < r; ++i) {
    t.row_sign[i] = (sys.rhs[i] < 0) ? -1 : 1;
    for (int j = 0; j < sys.cols(); ++j) {
      Rational v = sys.coeffs[i][j] * t.row_sign[i];
      t.rows[i][map.first_col[j]] = v;
      if (map.split[j]) t.rows[i][map.first_col[j] + 1] = -v;
    }
    t.art_col[i] = nstruct + i;
    t.rows[i][t.art_col[i]] = 1;
    t.basis[i] = t.art_col[i];
    t.rows[i].back() = sys.rhs[i] * t.row_sign[i];
  }
  return t;
}

std::vector<Rational> phase1_cost(const Tableau& t) {
  std::vector<Rational> cost(t.ncols(), Rational(0));
  for (int a : t.art_col) cost[a] = -1;
  return cost;
}

// Farkas certificate from the optimal phase-I tableau: y = cost_B' B^-1 is
// read from the artificial columns (they hold B^-1), then unsigned back to
// the caller's row orientation and negated so that y'M <= 0, y'rhs > 0.
std::vector<Rational> read_certificate(const Tableau& t,
                                       const std::vector<Rational>& cost) {
  const int r = static_cast<int>(t.row_sign.size());
  std::vector<Rational> y(r, Rational(0));
  for (int i = 0; i < r; ++i) {
    Rational yi = 0;
    for (int k = 0; k < static_cast<int>(t.rows.size()); ++k) {
      yi += cost[t.basis[k]] * t.rows[k][t.art_col[i]];
    }
    y[i] = -yi * t.row_sign[i];
  }
  return y;
}

// Pivots artificials out of the basis (they all sit at value 0 once phase I
// succeeds); rows with no structural support are redundant and dropped.
void clean_basis(Tableau& t) {
  for (int k = static_cast<int>(t.rows.size()) - 1; k >= 0; --k) {
    if (t.basis[k] < t.nstruct) continue;
    int col = -1;
    for (int j = 0; j < t.nstruct; ++j) {
      if (t.rows[k][j] != 0) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      pivot(t, k, col);
    } else {
      t.rows.erase(t.rows.begin() + k);
      t.basis.erase(t.basis.begin() + k);
    }
  }
}

std::vector<Rational> extract_solution(const Tableau& t, const ColumnMap& map,
                                       const LinearSystem& sys) {
  std::vector<Rational> z(t.ncols(), Rational(0));
  for (int k = 0; k < static_cast<int>(t.rows.size()); ++k) {
    z[t.basis[k]] = t.rhs(k);
  }
  std::vector<Rational> x(sys.cols(), Rational(0));
  for (int j = 0; j < sys.cols(); ++j) {
    x[j] = z[map.first_col[j]];
    if (map.split[j]) x[j] -= z[map.first_col[j] + 1];
  }
  return x;
}

std::set<int> extract_basis(const Tableau& t, const ColumnMap& map,
                            const LinearSystem& sys) {
  std::set<int> basis;
  for (int b : t.basis) {
    for (int j = 0; j < sys.cols(); ++j) {
      if (b == map.first_col[j] || (map.split[j] && b == map.first_col[j] + 1)) {
        basis.insert(j);
      }
    }
  }
  return basis;
}

// Runs phase I; returns a certificate on infeasibility, otherwise leaves the
// tableau feasible with all artificials nonbasic.
std::optional<std::vector<Rational>> phase1(Tableau& t) {
  const std::vector<Rational> cost = phase1_cost(t);
  const bool bounded = run_simplex(t, cost);
  assert(bounded);  // phase-I objective is bounded above by 0
  (void)bounded;
  Rational value = 0;
  for (int k = 0; k < static_cast<int>(t.rows.size()); ++k) {
    value += cost[t.basis[k]] * t.rhs(k);
  }
  if (value < 0) return read_certificate(t, cost);
  clean_basis(t);
  return std::nullopt;
}

}  // namespace

void LinearSystem::validate() const {
  if (rhs.size() != coeffs.size()) {
    throw std::invalid_argument("LinearSystem: rhs/row count mismatch");
  }
  for (const auto& row : coeffs) {
    if (row.size() != nonneg.size()) {
      throw std::invalid_argument("LinearSystem: row width mismatch");
    }
  }
}

FeasibilityOutcome solve_feasibility(const LinearSystem& sys) {
  sys.validate();
  const ColumnMap map = build_columns(sys);
  Tableau t = build_tableau(sys, map);
  if (auto cert = phase1(t)) return Infeasible{std::move(*cert)};
  return Feasible{extract_solution(t, map, sys), extract_basis(t, map, sys)};
}

OptimizationOutcome maximize(const std::vector<Rational>& objective,
                             const LinearSystem& sys) {
  sys.validate();
  if (objective.size() != sys.nonneg.size()) {
    throw std::invalid_argument("maximize: objective size mismatch");
  }
  const ColumnMap map = build_columns(sys);
  Tableau t = build_tableau(sys, map);
  if (auto cert = phase1(t)) return Infeasible{std::move(*cert)};
  std::vector<Rational> cost(t.ncols(), Rational(0));
  for (int j = 0; j < sys.cols(); ++j) {
    cost[map.first_col[j]] = objective[j];
    if (map.split[j]) cost[map.first_col[j] + 1] = -objective[j];
  }
  if (!run_simplex(t, cost)) return Unbounded{};
  std::vector<Rational> x = extract_solution(t, map, sys);
  Rational value = 0;
  for (int j = 0; j < sys.cols(); ++j) value += objective[j] * x[j];
  return Optimal{std::move(x), std::move(value)};
}

bool verify_certificate(const LinearSystem& sys, const FeasibilityOutcome& out) {
  sys.validate();
  if (const auto* feas = std::get_if<Feasible>(&out)) {
    if (feas->x.size() != sys.nonneg.size()) return false;
    for (int j = 0; j < sys.cols(); ++j) {
      if (sys.nonneg[j] && feas->x[j] < 0) return false;
    }
    for (int i = 0; i < sys.rows(); ++i) {
      Rational lhs = 0;
      for (int j = 0; j < sys.cols(); ++j) lhs += sys.coeffs[i][j] * feas->x[j];
      if (lhs != sys.rhs[i]) return false;
    }
    return true;
  }
  const auto& y = std::get<Infeasible>(out).certificate;
  if (y.size() != sys.rhs.size()) return false;
  for (int j = 0; j < sys.cols(); ++j) {
    Rational dot = 0;
    for (int i = 0; i < sys.rows(); ++i) dot += y[i] * sys.coeffs[i][j];
    if (sys.nonneg[j] ? dot > 0 : dot != 0) return false;
  }
  Rational rhs_dot = 0;
  for (int i = 0; i < sys.rows(); ++i) rhs_dot += y[i] * sys.rhs[i];
  return rhs_dot > 0;
}

LinearSystem farkas_alternative(const LinearSystem& sys) {
  sys.validate();
  const int r = sys.rows();
  const int c = sys.cols();
  // Variables: y (r, free), one slack per sign-constrained column, one slack
  // for the homogenized positivity row.
  int nslack = 0;
  for (int j = 0; j < c; ++j) nslack += sys.nonneg[j] ? 1 : 0;
  LinearSystem alt;
  alt.nonneg.assign(r, false);
  alt.nonneg.insert(alt.nonneg.end(), nslack + 1, true);
  int slack = r;
  for (int j = 0; j < c; ++j) {
    std::vector<Rational> row(r + nslack + 1, Rational(0));
    for (int i = 0; i < r; ++i) row[i] = sys.coeffs[i][j];
    if (sys.nonneg[j]) row[slack++] = 1;  // y'M_j + s = 0  =>  y'M_j <= 0
    alt.coeffs.push_back(std::move(row));
    alt.rhs.push_back(Rational(0));
  }
  std::vector<Rational> pos(r + nslack + 1, Rational(0));
  for (int i = 0; i < r; ++i) pos[i] = sys.rhs[i];
  pos[r + nslack] = -1;  // y'rhs - s0 = 1  =>  y'rhs >= 1
  alt.coeffs.push_back(std::move(pos));
  alt.rhs.push_back(Rational(1));
  return alt;
}

}  // namespace cmnash::lp
