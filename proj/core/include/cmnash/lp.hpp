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

#ifndef CMNASH_LP_HPP_
#define CMNASH_LP_HPP_

#include <set>
#include <variant>
#include <vector>

#include "cmnash/rational.hpp"

namespace cmnash::lp {

// Equality-constrained system M x = rhs with optional per-variable sign
// constraints (nonneg[j] == true means x_j >= 0; false means x_j is free).
struct LinearSystem {
  std::vector<std::vector<Rational>> coeffs;  // r rows of length c
  std::vector<Rational> rhs;                  // length r
  std::vector<bool> nonneg;                   // length c

  int rows() const { return static_cast<int>(coeffs.size()); }
  int cols() const { return static_cast<int>(nonneg.size()); }
  // Throws std::invalid_argument if dimensions are inconsistent.
  void validate() const;
};

struct Feasible {
  std::vector<Rational> x;  // length c, M x == rhs, sign constraints hold
  std::set<int> basis;      // indices of basic variables at the final vertex
};

// Farkas certificate of infeasibility: y'M <= 0 on sign-constrained columns,
// y'M == 0 on free columns, and y'rhs > 0.
struct Infeasible {
  std::vector<Rational> certificate;  // length r
};

using FeasibilityOutcome = std::variant<Feasible, Infeasible>;

struct Optimal {
  std::vector<Rational> x;
  Rational value;
};
struct Unbounded {};

using OptimizationOutcome = std::variant<Optimal, Unbounded, Infeasible>;

// Decides {M x = rhs, sign constraints} exactly. Exactly one arm is
// returned, both arms satisfy verify_certificate, and the result is
// deterministic (Bland's least-index pivot rule, fixed column order).
FeasibilityOutcome solve_feasibility(const LinearSystem& sys);

// Maximizes objective'x over the system via phase-I/phase-II simplex with
// Bland's rule. Exact optimum, certificate on infeasibility.
OptimizationOutcome maximize(const std::vector<Rational>& objective,
                             const LinearSystem& sys);

// Re-checks the claimed arm by direct arithmetic, independent of the solver.
bool verify_certificate(const LinearSystem& sys, const FeasibilityOutcome& out);

// The Farkas alternative system of `sys`: variables y (one per row of sys,
// free), feasible iff some y satisfies y'M <= 0 on sign-constrained columns,
// y'M == 0 on free columns, and y'rhs >= 1 (homogenized strict positivity).
// Exactly one of sys / farkas_alternative(sys) is feasible.
LinearSystem farkas_alternative(const LinearSystem& sys);

}  // namespace cmnash::lp

#endif  // CMNASH_LP_HPP_
