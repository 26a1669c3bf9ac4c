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

#ifndef CMNASH_RENDER_HPP_
#define CMNASH_RENDER_HPP_

#include <string>

#include "cmnash/matrix.hpp"
#include "cmnash/rational.hpp"

namespace cmnash {

// Fixed decimal rendering for SVG coordinates: exact when the denominator
// divides a power of ten, otherwise rounded to 6 decimal places (half away
// from zero). Trailing zeros stripped.
std::string decimal_string(const Rational& v);

// Deterministic standalone SVG 1.1 document (600x600 user units): the
// columns of the payoff-difference matrix D drawn as arrows from the center
// (colors cycling red/blue/violet), each induced half plane {v : v.d <= 0}
// shaded at fixed opacity. Requires a three-row game (D columns live in the
// plane). Byte-identical output for identical input.
std::string render_halfspace_svg(const GameMatrix& a);

}  // namespace cmnash

#endif  // CMNASH_RENDER_HPP_
