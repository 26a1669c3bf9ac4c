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

#include "cmnash/indifference.hpp"

#include <cassert>
#include <stdexcept>

#include "cmnash/lp.hpp"

namespace cmnash::indifference {
namespace {

std::vector<Rational> normalize_witness(std::vector<Rational> w) {
  for (const auto& e : w) {
    if (e != 0) {
      Rational scale = abs(e);
      for (auto& v : w) v /= scale;
      break;
    }
  }
  return w;
}

lp::LinearSystem equal_payoff_system(const AugmentedSystem& aug) {
  lp::LinearSystem sys;
  sys.coeffs = aug.dbar;
  sys.rhs = aug.b;
  sys.nonneg.assign(aug.dbar.empty() ? 0 : aug.dbar[0].size(), true);
  return sys;
}

Rational row_payoff(const GameMatrix& a, int i, const std::vector<Rational>& x) {
  Rational c = 0;
  for (int j = 0; j < a.cols(); ++j) c += a.at(i, j) * x[j];
  return c;
}

}  // namespace

DifferenceMatrix difference_matrix(const GameMatrix& a) {
  if (a.rows() < 2) {
    throw std::invalid_argument("difference_matrix: need at least two rows");
  }
  DifferenceMatrix d;
  d.source_rows = a.rows();
  d.source_cols = a.cols();
  d.d.assign(a.rows() - 1, std::vector<Rational>(a.cols()));
  for (int k = 0; k + 1 < a.rows(); ++k) {
    for (int j = 0; j < a.cols(); ++j) {
      d.d[k][j] = a.at(k, j) - a.at(k + 1, j);
    }
  }
  return d;
}

AugmentedSystem augment(const DifferenceMatrix& d) {
  AugmentedSystem aug;
  aug.dbar = d.d;
  const int m = d.source_cols;
  aug.dbar.push_back(std::vector<Rational>(m, Rational(1)));
  aug.b.assign(aug.dbar.size(), Rational(0));
  aug.b.back() = 1;
  return aug;
}

IndifferenceOutcome solve_indifference(const GameMatrix& a) {
  AugmentedSystem aug;
  if (a.rows() == 1) {
    // A single-row player is indifferent by definition; pick any opponent
    // strategy deterministically via the same LP machinery.
    aug.dbar = {std::vector<Rational>(a.cols(), Rational(1))};
    aug.b = {Rational(1)};
  } else {
    aug = augment(difference_matrix(a));
  }
  const lp::LinearSystem sys = equal_payoff_system(aug);
  lp::FeasibilityOutcome out = lp::solve_feasibility(sys);
  assert(lp::verify_certificate(sys, out));
  if (auto* feas = std::get_if<lp::Feasible>(&out)) {
    MixedStrategy x(feas->x);
    Rational c = row_payoff(a, 0, feas->x);
    // Substitution check: every row earns exactly c.
    for (int i = 1; i < a.rows(); ++i) assert(row_payoff(a, i, feas->x) == c);
    return Indifferent{std::move(x), std::move(c)};
  }
  // Farkas certificate y on (D | ones; b): y'dbar <= 0 per column with
  // y_n = y'b > 0, so w = -y_{1..n-1} has w'd_j >= y_n > 0 for every column.
  const auto& y = std::get<lp::Infeasible>(out).certificate;
  std::vector<Rational> w(y.begin(), y.end() - 1);
  for (auto& e : w) e = -e;
  return NotPossible{normalize_witness(std::move(w))};
}

CoverReport half_space_cover(const DifferenceMatrix& d) {
  const int dim = static_cast<int>(d.d.size());
  if (dim == 0) return CoverReport{true, std::nullopt};
  const int m = d.source_cols;
  // w free (dim vars), slack u_j >= 0: d_j'w - u_j = 1 for every column j.
  // Feasible iff some w has w'D > 0 (homogenized), i.e. iff NOT covered.
  lp::LinearSystem sys;
  sys.nonneg.assign(dim, false);
  sys.nonneg.insert(sys.nonneg.end(), m, true);
  for (int j = 0; j < m; ++j) {
    std::vector<Rational> row(dim + m, Rational(0));
    for (int k = 0; k < dim; ++k) row[k] = d.d[k][j];
    row[dim + j] = -1;
    sys.coeffs.push_back(std::move(row));
    sys.rhs.push_back(Rational(1));
  }
  lp::FeasibilityOutcome out = lp::solve_feasibility(sys);
  assert(lp::verify_certificate(sys, out));
  if (auto* feas = std::get_if<lp::Feasible>(&out)) {
    std::vector<Rational> w(feas->x.begin(), feas->x.begin() + dim);
    return CoverReport{false, normalize_witness(std::move(w))};
  }
  return CoverReport{true, std::nullopt};
}

std::optional<PositiveIndifference> positive_indifference(const GameMatrix& a) {
  const int m = a.cols();
  // Variables: x (m, >= 0), t (free), s (m, >= 0).
  // Rows: Dx = 0; sum x = 1; x_j - t - s_j = 0. Maximize t.
  lp::LinearSystem sys;
  const int nvars = 2 * m + 1;
  sys.nonneg.assign(m, true);
  sys.nonneg.push_back(false);
  sys.nonneg.insert(sys.nonneg.end(), m, true);
  if (a.rows() >= 2) {
    const DifferenceMatrix d = difference_matrix(a);
    for (const auto& drow : d.d) {
      std::vector<Rational> row(nvars, Rational(0));
      for (int j = 0; j < m; ++j) row[j] = drow[j];
      sys.coeffs.push_back(std::move(row));
      sys.rhs.push_back(Rational(0));
    }
  }
  {
    std::vector<Rational> row(nvars, Rational(0));
    for (int j = 0; j < m; ++j) row[j] = 1;
    sys.coeffs.push_back(std::move(row));
    sys.rhs.push_back(Rational(1));
  }
  for (int j = 0; j < m; ++j) {
    std::vector<Rational> row(nvars, Rational(0));
    row[j] = 1;
    row[m] = -1;
    row[m + 1 + j] = -1;
    sys.coeffs.push_back(std::move(row));
    sys.rhs.push_back(Rational(0));
  }
  std::vector<Rational> objective(nvars, Rational(0));
  objective[m] = 1;
  lp::OptimizationOutcome out = lp::maximize(objective, sys);
  const auto* opt = std::get_if<lp::Optimal>(&out);
  if (opt == nullptr || opt->value <= 0) return std::nullopt;
  std::vector<Rational> x(opt->x.begin(), opt->x.begin() + m);
  return PositiveIndifference{MixedStrategy(std::move(x)), opt->value};
}

NecessaryConditionReport necessary_condition(const GameMatrix& a1,
                                             const GameMatrix& a2) {
  if (a1.rows() != a2.cols() || a1.cols() != a2.rows()) {
    throw std::invalid_argument("necessary_condition: dimension mismatch");
  }
  NecessaryConditionReport report;
  report.player1 =
      a1.rows() < 2 || half_space_cover(difference_matrix(a1)).covered;
  report.player2 =
      a2.rows() < 2 || half_space_cover(difference_matrix(a2)).covered;
  return report;
}

std::optional<std::pair<MixedStrategy, MixedStrategy>>
completely_mixed_equilibrium(const GameMatrix& a1, const GameMatrix& a2) {
  if (a1.rows() != a2.cols() || a1.cols() != a2.rows()) {
    throw std::invalid_argument(
        "completely_mixed_equilibrium: dimension mismatch");
  }
  // positive_indifference(a1) yields player 2's strategy (it equalizes
  // player 1's rows) and vice versa.
  auto y = positive_indifference(a1);
  if (!y) return std::nullopt;
  auto x = positive_indifference(a2);
  if (!x) return std::nullopt;
  return std::make_pair(x->x, y->x);
}

}  // namespace cmnash::indifference
