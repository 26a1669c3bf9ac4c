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

#ifndef CMNASH_SAMPLER_HPP_
#define CMNASH_SAMPLER_HPP_

#include <cstdint>

#include "cmnash/matrix.hpp"
#include "cmnash/rational.hpp"

namespace cmnash {

// SplitMix64 (Steele, Lea & Flood 2014; public domain reference constants):
// a fixed, documented 64-bit splittable generator. The same seed always
// produces the same stream on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Unbiased value in [0, bound) via rejection sampling.
  std::uint64_t next_below(std::uint64_t bound);
  // An independent child generator; advances this one by one step.
  SplitMix64 split();

 private:
  std::uint64_t state_;
};

// Random rational p/q with q uniform in [1, denominator_bound] and p
// uniform in [-denominator_bound, denominator_bound].
Rational random_rational(SplitMix64& rng, long denominator_bound);

// Random n x m game with entries from random_rational.
GameMatrix random_game(SplitMix64& rng, int n, int m, long denominator_bound,
                       bool symmetric = false);

}  // namespace cmnash

#endif  // CMNASH_SAMPLER_HPP_
