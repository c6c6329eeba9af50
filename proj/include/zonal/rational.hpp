// Copyright 2026 The zonal authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZONAL_RATIONAL_HPP
#define ZONAL_RATIONAL_HPP

#include <stdexcept>
#include <string>

#include "zonal/integer.hpp"

namespace zonal {

/// Arbitrary-precision rational, always stored canonically: reduced,
/// denominator positive, zero as 0/1. mpq_class maintains this under all
/// arithmetic; make_rational canonicalizes raw pairs.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer numerator(const Rational& r) { return r.get_num(); }
inline Integer denominator(const Rational& r) { return r.get_den(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational rational_pow(const Rational& r, unsigned long e) {
  return make_rational(pow_ui(r.get_num(), e), pow_ui(r.get_den(), e));
}

/// "a" or "a/b", exact decimal.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Integer& n) { return n.get_str(); }

/// Parses "a" or "a/b". Throws on malformed input or zero denominator.
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  if (r.get_den() == 0) throw std::domain_error("parse_rational: zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace zonal

#endif  // ZONAL_RATIONAL_HPP
