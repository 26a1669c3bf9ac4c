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

#ifndef CMNASH_MATRIX_HPP_
#define CMNASH_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "cmnash/rational.hpp"

namespace cmnash {

// Dense n x m payoff matrix of a single player. Row i is the payoff of own
// pure strategy i against each opponent pure strategy (columns). A symmetric
// flag marks games where both players share this matrix (requires n == m).
class GameMatrix {
 public:
  GameMatrix(std::vector<std::vector<Rational>> rows, bool symmetric = false);

  int rows() const { return n_; }
  int cols() const { return m_; }
  bool symmetric() const { return symmetric_; }

  const Rational& at(int i, int j) const { return entries_[i * m_ + j]; }
  Rational& at(int i, int j) { return entries_[i * m_ + j]; }

  std::vector<Rational> row(int i) const;
  std::vector<Rational> column(int j) const;
  GameMatrix transpose() const;

  bool operator==(const GameMatrix& other) const;

 private:
  int n_;
  int m_;
  bool symmetric_;
  std::vector<Rational> entries_;
};

// Probability vector: weights >= 0 summing to exactly 1 (validated).
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<Rational> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  const Rational& operator[](int i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const { return weights_; }
  bool fully_mixed() const;  // every weight strictly positive

  bool operator==(const MixedStrategy& other) const {
    return weights_ == other.weights_;
  }

 private:
  std::vector<Rational> weights_;
};

// Bijection on {0, .., k-1}. apply(i) is the new label of old strategy i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> mapping);
  static Permutation identity(int k);
  // All k! permutations of {0..k-1} in lexicographic one-line order.
  static std::vector<Permutation> all(int k);

  int size() const { return static_cast<int>(map_.size()); }
  int apply(int i) const { return map_[i]; }
  Permutation inverse() const;
  // (*this)(tau(i)): apply tau first, then this.
  Permutation compose(const Permutation& tau) const;
  const std::vector<int>& mapping() const { return map_; }

  bool operator==(const Permutation& other) const { return map_ == other.map_; }
  bool operator<(const Permutation& other) const { return map_ < other.map_; }

 private:
  std::vector<int> map_;
};

// Simultaneous row/column relabeling of a symmetric game: old strategy s
// becomes new strategy sigma(s), i.e. result[i][j] = A[sigma^-1(i)][sigma^-1(j)].
// Satisfies relabel(relabel(A, tau), sigma) == relabel(A, sigma o tau).
GameMatrix relabel(const GameMatrix& a, const Permutation& sigma);

// Permutes a strategy vector consistently with relabel: result[sigma(i)] = x[i].
std::vector<Rational> permute(const std::vector<Rational>& x,
                              const Permutation& sigma);

// Exact product A*x: entry j is the expected payoff of pure strategy j
// against the opponent mix x.
std::vector<Rational> mat_vec(const GameMatrix& a, const MixedStrategy& x);

}  // namespace cmnash

#endif  // CMNASH_MATRIX_HPP_
