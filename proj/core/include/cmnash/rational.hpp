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

#ifndef CMNASH_RATIONAL_HPP_
#define CMNASH_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cmnash {

// The sole scalar type of the library: an arbitrary-precision fraction,
// always in lowest terms with positive denominator. All arithmetic is exact.
using Rational = mpq_class;

// Parses "p", "p/q" (optional sign on either part, q != 0) into a reduced
// Rational. Throws std::invalid_argument on malformed text or q == 0.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" for integers, "p/q" otherwise (lowest terms,
// q > 0). Round-trips through parse_rational.
std::string to_string(const Rational& value);

// Convenience for literals in tests and tables.
inline Rational frac(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace cmnash

#endif  // CMNASH_RATIONAL_HPP_
