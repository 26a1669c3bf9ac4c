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

#include "cmnash/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cmnash {

GameMatrix::GameMatrix(std::vector<std::vector<Rational>> rows, bool symmetric)
    : n_(static_cast<int>(rows.size())), symmetric_(symmetric) {
  if (n_ == 0) throw std::invalid_argument("GameMatrix: no rows");
  m_ = static_cast<int>(rows[0].size());
  if (m_ == 0) throw std::invalid_argument("GameMatrix: no columns");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m_) {
      throw std::invalid_argument("GameMatrix: ragged rows");
    }
  }
  if (symmetric_ && n_ != m_) {
    throw std::invalid_argument("GameMatrix: symmetric flag requires square");
  }
  entries_.reserve(static_cast<std::size_t>(n_) * m_);
  for (auto& r : rows) {
    for (auto& e : r) entries_.push_back(std::move(e));
  }
}

std::vector<Rational> GameMatrix::row(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("GameMatrix::row");
  return std::vector<Rational>(entries_.begin() + static_cast<long>(i) * m_,
                               entries_.begin() + static_cast<long>(i + 1) * m_);
}

std::vector<Rational> GameMatrix::column(int j) const {
  if (j < 0 || j >= m_) throw std::out_of_range("GameMatrix::column");
  std::vector<Rational> col;
  col.reserve(n_);
  for (int i = 0; i < n_; ++i) col.push_back(at(i, j));
  return col;
}

GameMatrix GameMatrix::transpose() const {
  std::vector<std::vector<Rational>> rows(m_, std::vector<Rational>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < m_; ++j) rows[j][i] = at(i, j);
  }
  return GameMatrix(std::move(rows), symmetric_ && n_ == m_);
}

bool GameMatrix::operator==(const GameMatrix& other) const {
  return n_ == other.n_ && m_ == other.m_ && entries_ == other.entries_;
}

MixedStrategy::MixedStrategy(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("MixedStrategy: empty");
  Rational sum = 0;
  for (const auto& w : weights_) {
    if (w < 0) throw std::invalid_argument("MixedStrategy: negative weight");
    sum += w;
  }
  if (sum != 1) throw std::invalid_argument("MixedStrategy: weights must sum to 1");
}

bool MixedStrategy::fully_mixed() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Rational& w) { return w > 0; });
}

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= static_cast<int>(map_.size()) || seen[v]) {
      throw std::invalid_argument("Permutation: not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> m(k);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

std::vector<Permutation> Permutation::all(int k) {
  std::vector<int> m(k);
  std::iota(m.begin(), m.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(m));
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& tau) const {
  if (size() != tau.size()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> m(map_.size());
  for (int i = 0; i < size(); ++i) m[i] = map_[tau.map_[i]];
  return Permutation(std::move(m));
}

GameMatrix relabel(const GameMatrix& a, const Permutation& sigma) {
  if (!a.symmetric()) throw std::invalid_argument("relabel: requires symmetric game");
  if (sigma.size() != a.rows()) throw std::invalid_argument("relabel: size mismatch");
  const Permutation inv = sigma.inverse();
  std::vector<std::vector<Rational>> rows(a.rows(),
                                          std::vector<Rational>(a.cols()));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      rows[i][j] = a.at(inv.apply(i), inv.apply(j));
    }
  }
  return GameMatrix(std::move(rows), true);
}

std::vector<Rational> permute(const std::vector<Rational>& x,
                              const Permutation& sigma) {
  if (sigma.size() != static_cast<int>(x.size())) {
    throw std::invalid_argument("permute: size mismatch");
  }
  std::vector<Rational> out(x.size());
  for (int i = 0; i < sigma.size(); ++i) out[sigma.apply(i)] = x[i];
  return out;
}

std::vector<Rational> mat_vec(const GameMatrix& a, const MixedStrategy& x) {
  if (x.size() != a.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<Rational> out(a.rows(), Rational(0));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * x[j];
  }
  return out;
}

}  // namespace cmnash
