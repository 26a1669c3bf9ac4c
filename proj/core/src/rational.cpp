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

#include "cmnash/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cmnash {
namespace {

bool valid_integer_text(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

// mpz_class's string constructor rejects an explicit '+' sign.
std::string strip_plus(const std::string& s) {
  return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  const std::string num_text = text.substr(0, slash);
  if (!valid_integer_text(num_text)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  mpz_class num(strip_plus(num_text));
  if (slash == std::string::npos) {
    return Rational(num);
  }
  const std::string den_text = text.substr(slash + 1);
  if (!valid_integer_text(den_text)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  mpz_class den(strip_plus(den_text));
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace cmnash
