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

#include "cmnash/sampler.hpp"

#include <stdexcept>

namespace cmnash {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: zero bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t v = next();
    if (v < limit) return v % bound;
  }
}

SplitMix64 SplitMix64::split() { return SplitMix64(next()); }

Rational random_rational(SplitMix64& rng, long denominator_bound) {
  if (denominator_bound < 1) {
    throw std::invalid_argument("random_rational: bound must be >= 1");
  }
  const std::uint64_t d = static_cast<std::uint64_t>(denominator_bound);
  const long q = static_cast<long>(rng.next_below(d)) + 1;
  const long p = static_cast<long>(rng.next_below(2 * d + 1)) -
                 denominator_bound;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

GameMatrix random_game(SplitMix64& rng, int n, int m, long denominator_bound,
                       bool symmetric) {
  if (n < 1 || m < 1) throw std::invalid_argument("random_game: bad shape");
  if (symmetric && n != m) {
    throw std::invalid_argument("random_game: symmetric requires square");
  }
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) rows[i][j] = random_rational(rng, denominator_bound);
  }
  return GameMatrix(std::move(rows), symmetric);
}

}  // namespace cmnash
