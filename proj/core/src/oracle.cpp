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

#include "cmnash/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "cmnash/lp.hpp"

namespace cmnash::oracle {
namespace {

constexpr int kSupportCap = 4;

enum class SolveStatus { kUnique, kNone, kInfinite };

// Exact Gaussian elimination for a general r x c system M z = rhs.
SolveStatus solve_linear(std::vector<std::vector<Rational>> m,
                         std::vector<Rational> rhs,
                         std::vector<Rational>* solution) {
  const int r = static_cast<int>(m.size());
  const int c = r == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<int> pivot_col_of_row(r, -1);
  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int p = -1;
    for (int k = row; k < r; ++k) {
      if (m[k][col] != 0) {
        p = k;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    std::swap(rhs[p], rhs[row]);
    const Rational d = m[row][col];
    for (int j = col; j < c; ++j) m[row][j] /= d;
    rhs[row] /= d;
    for (int k = 0; k < r; ++k) {
      if (k == row || m[k][col] == 0) continue;
      const Rational f = m[k][col];
      for (int j = col; j < c; ++j) m[k][j] -= f * m[row][j];
      rhs[k] -= f * rhs[row];
    }
    pivot_col_of_row[row] = col;
    ++row;
  }
  for (int k = row; k < r; ++k) {
    if (rhs[k] != 0) return SolveStatus::kNone;
  }
  if (row < c) return SolveStatus::kInfinite;
  solution->assign(c, Rational(0));
  for (int k = 0; k < row; ++k) (*solution)[pivot_col_of_row[k]] = rhs[k];
  return SolveStatus::kUnique;
}

// All non-empty subsets of {0..n-1}, sorted by size then lexicographically.
std::vector<std::vector<int>> all_supports(int n) {
  std::vector<std::vector<int>> out;
  for (int size = 1; size <= n; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      out.push_back(idx);
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

// Solves for the opponent mix (over columns `cols`) that equalizes the
// payoffs of rows `rows` of `a`: consecutive row differences plus the
// probability constraint.
SolveStatus support_system(const GameMatrix& a, const std::vector<int>& rows,
                           const std::vector<int>& cols,
                           std::vector<Rational>* solution) {
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(cols.size());
  std::vector<std::vector<Rational>> m;
  std::vector<Rational> rhs;
  for (int k = 0; k + 1 < nr; ++k) {
    std::vector<Rational> row(nc);
    for (int j = 0; j < nc; ++j) {
      row[j] = a.at(rows[k], cols[j]) - a.at(rows[k + 1], cols[j]);
    }
    m.push_back(std::move(row));
    rhs.push_back(Rational(0));
  }
  m.push_back(std::vector<Rational>(nc, Rational(1)));
  rhs.push_back(Rational(1));
  return solve_linear(std::move(m), std::move(rhs), solution);
}

std::vector<Rational> expand(const std::vector<Rational>& packed,
                             const std::vector<int>& support, int n) {
  std::vector<Rational> full(n, Rational(0));
  for (std::size_t k = 0; k < support.size(); ++k) full[support[k]] = packed[k];
  return full;
}

bool strictly_positive(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& e) { return e > 0; });
}

// Checks the rows outside `support` against the common support payoff.
// Returns false when some outside row strictly improves; sets *tie when an
// outside row exactly matches.
bool off_support_ok(const GameMatrix& a, const std::vector<int>& support,
                    const std::vector<Rational>& y, const Rational& payoff,
                    bool* tie) {
  for (int i = 0; i < a.rows(); ++i) {
    if (std::binary_search(support.begin(), support.end(), i)) continue;
    Rational p = 0;
    for (int j = 0; j < a.cols(); ++j) p += a.at(i, j) * y[j];
    if (p > payoff) return false;
    if (p == payoff) *tie = true;
  }
  return true;
}

Rational row_payoff(const GameMatrix& a, int i, const std::vector<Rational>& y) {
  Rational p = 0;
  for (int j = 0; j < a.cols(); ++j) p += a.at(i, j) * y[j];
  return p;
}

}  // namespace

std::optional<DominanceResult> strictly_dominated(const GameMatrix& a, int i) {
  if (a.rows() < 2) {
    throw std::invalid_argument("strictly_dominated: need at least two rows");
  }
  if (i < 0 || i >= a.rows()) {
    throw std::out_of_range("strictly_dominated: index out of range");
  }
  const int n = a.rows();
  const int m = a.cols();
  std::vector<int> others;
  for (int k = 0; k < n; ++k) {
    if (k != i) others.push_back(k);
  }
  // Variables: lambda (n-1, >= 0), margin t (free), slack per column (>= 0).
  // sum lambda = 1;  lambda'A_other[.][j] - t - s_j = A[i][j] for each j.
  const int nvars = (n - 1) + 1 + m;
  lp::LinearSystem sys;
  sys.nonneg.assign(n - 1, true);
  sys.nonneg.push_back(false);
  sys.nonneg.insert(sys.nonneg.end(), m, true);
  {
    std::vector<Rational> row(nvars, Rational(0));
    for (int k = 0; k < n - 1; ++k) row[k] = 1;
    sys.coeffs.push_back(std::move(row));
    sys.rhs.push_back(Rational(1));
  }
  for (int j = 0; j < m; ++j) {
    std::vector<Rational> row(nvars, Rational(0));
    for (int k = 0; k < n - 1; ++k) row[k] = a.at(others[k], j);
    row[n - 1] = -1;
    row[n + j] = -1;
    sys.coeffs.push_back(std::move(row));
    sys.rhs.push_back(a.at(i, j));
  }
  std::vector<Rational> objective(nvars, Rational(0));
  objective[n - 1] = 1;
  lp::OptimizationOutcome out = lp::maximize(objective, sys);
  const auto* opt = std::get_if<lp::Optimal>(&out);
  if (opt == nullptr || opt->value <= 0) return std::nullopt;
  std::vector<Rational> lambda(opt->x.begin(), opt->x.begin() + (n - 1));
  return DominanceResult{i, MixedStrategy(std::move(lambda)), opt->value};
}

bool best_reply_check(const GameMatrix& a1, const GameMatrix& a2,
                      const MixedStrategy& x, const MixedStrategy& y) {
  if (a1.rows() != a2.cols() || a1.cols() != a2.rows() ||
      x.size() != a1.rows() || y.size() != a1.cols()) {
    throw std::invalid_argument("best_reply_check: dimension mismatch");
  }
  Rational value1 = 0;
  std::vector<Rational> payoffs1(a1.rows());
  for (int i = 0; i < a1.rows(); ++i) {
    payoffs1[i] = row_payoff(a1, i, y.weights());
    value1 += x[i] * payoffs1[i];
  }
  for (const auto& p : payoffs1) {
    if (p > value1) return false;
  }
  Rational value2 = 0;
  std::vector<Rational> payoffs2(a2.rows());
  for (int k = 0; k < a2.rows(); ++k) {
    payoffs2[k] = row_payoff(a2, k, x.weights());
    value2 += y[k] * payoffs2[k];
  }
  for (const auto& p : payoffs2) {
    if (p > value2) return false;
  }
  return true;
}

EquilibriumSet symmetric_equilibria(const GameMatrix& a) {
  if (!a.symmetric()) {
    throw std::invalid_argument("symmetric_equilibria: requires symmetric game");
  }
  if (a.rows() > kSupportCap) {
    throw std::invalid_argument("symmetric_equilibria: size exceeds oracle cap");
  }
  const int n = a.rows();
  EquilibriumSet set;
  for (const auto& support : all_supports(n)) {
    std::vector<Rational> packed;
    const SolveStatus status = support_system(a, support, support, &packed);
    if (status == SolveStatus::kInfinite) {
      // Solution continuum: flagged, not resolved.
      set.degenerate = true;
      continue;
    }
    if (status == SolveStatus::kNone) continue;
    if (!strictly_positive(packed)) continue;
    std::vector<Rational> x = expand(packed, support, n);
    const Rational payoff = row_payoff(a, support[0], x);
    bool tie = false;
    if (!off_support_ok(a, support, x, payoff, &tie)) continue;
    if (tie) set.degenerate = true;
    set.equilibria.push_back(Equilibrium{
        support, std::nullopt, MixedStrategy(std::move(x)), std::nullopt,
        static_cast<int>(support.size()) == n});
  }
  return set;
}

EquilibriumSet bimatrix_equilibria(const GameMatrix& a1, const GameMatrix& a2) {
  if (a1.rows() != a2.cols() || a1.cols() != a2.rows()) {
    throw std::invalid_argument("bimatrix_equilibria: dimension mismatch");
  }
  if (a1.rows() > kSupportCap || a1.cols() > kSupportCap) {
    throw std::invalid_argument("bimatrix_equilibria: size exceeds oracle cap");
  }
  const int n1 = a1.rows();
  const int n2 = a1.cols();
  EquilibriumSet set;
  for (const auto& s1 : all_supports(n1)) {
    for (const auto& s2 : all_supports(n2)) {
      // Isolated equilibria require equal support sizes: with |s1| != |s2|
      // one indifference system is structurally underdetermined, so such
      // pairs carry no information about this particular game.
      if (s1.size() != s2.size()) continue;
      // y (over s2) equalizes player 1's rows in s1; x (over s1) equalizes
      // player 2's rows in s2.
      std::vector<Rational> ypacked;
      const SolveStatus ystatus = support_system(a1, s1, s2, &ypacked);
      if (ystatus == SolveStatus::kInfinite) {
        set.degenerate = true;
        continue;
      }
      if (ystatus == SolveStatus::kNone) continue;
      std::vector<Rational> xpacked;
      const SolveStatus xstatus = support_system(a2, s2, s1, &xpacked);
      if (xstatus == SolveStatus::kInfinite) {
        set.degenerate = true;
        continue;
      }
      if (xstatus == SolveStatus::kNone) continue;
      if (!strictly_positive(ypacked) || !strictly_positive(xpacked)) continue;
      std::vector<Rational> y = expand(ypacked, s2, n2);
      std::vector<Rational> x = expand(xpacked, s1, n1);
      bool tie = false;
      const Rational payoff1 = row_payoff(a1, s1[0], y);
      if (!off_support_ok(a1, s1, y, payoff1, &tie)) continue;
      const Rational payoff2 = row_payoff(a2, s2[0], x);
      if (!off_support_ok(a2, s2, x, payoff2, &tie)) continue;
      if (tie) set.degenerate = true;
      set.equilibria.push_back(Equilibrium{
          s1, s2, MixedStrategy(std::move(x)), MixedStrategy(std::move(y)),
          static_cast<int>(s1.size()) == n1 &&
              static_cast<int>(s2.size()) == n2});
    }
  }
  return set;
}

}  // namespace cmnash::oracle
