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

#ifndef ZONAL_TRIPOLY_HPP
#define ZONAL_TRIPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "zonal/bipoly.hpp"

namespace zonal {

/// Complex number with exact rational real and imaginary parts.
struct ComplexRat {
  Rational re, im;

  ComplexRat() : re(0), im(0) {}
  ComplexRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const ComplexRat& a, const ComplexRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  ComplexRat& operator+=(const ComplexRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend ComplexRat operator*(const ComplexRat& a, const ComplexRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRat operator*(const ComplexRat& a, const Rational& s) {
    return {a.re * s, a.im * s};
  }
};

/// Sparse polynomial in (x, y, z) with complex rational coefficients; the
/// cross-check representation for the zonal forms. Zero coefficients are not
/// stored.
class TriPoly {
 public:
  using Key = std::array<int, 3>;

  TriPoly() = default;

  void add_term(const Key& k, const ComplexRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<Key, ComplexRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

  friend TriPoly operator+(const TriPoly& a, const TriPoly& b) {
    TriPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
  }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    const TriPoly& big = a.terms_.size() >= b.terms_.size() ? a : b;
    const TriPoly& small = a.terms_.size() >= b.terms_.size() ? b : a;
    TriPoly r;
    for (const auto& [ks, cs] : small.terms_)
      for (const auto& [kb, cb] : big.terms_)
        r.add_term({ks[0] + kb[0], ks[1] + kb[1], ks[2] + kb[2]}, cs * cb);
    return r;
  }

  /// Second partial derivative along one axis.
  TriPoly d2(int axis) const {
    TriPoly r;
    for (const auto& [k, c] : terms_) {
      const int e = k[axis];
      if (e < 2) continue;
      Key kk = k;
      kk[axis] = e - 2;
      r.add_term(kk, c * Rational(static_cast<long>(e) * (e - 1)));
    }
    return r;
  }

 private:
  std::map<Key, ComplexRat> terms_;
};

/// Sum of the three second partials, exact.
inline TriPoly laplacian_full(const TriPoly& p) {
  return p.d2(0) + p.d2(1) + p.d2(2);
}

/// (x + yi)^k expanded via a running binomial coefficient.
inline TriPoly zeta_power(long k) {
  if (k < 0) throw std::domain_error("zeta_power: negative exponent");
  TriPoly r;
  Integer binom(1);
  for (long j = 0; j <= k; ++j) {
    // coefficient of x^j y^{k-j} is C(k, j) i^{k-j}
    const long rem = (k - j) % 4;
    ComplexRat c;
    switch (rem) {
      case 0: c = ComplexRat(Rational(binom), Rational(0)); break;
      case 1: c = ComplexRat(Rational(0), Rational(binom)); break;
      case 2: c = ComplexRat(Rational(-binom), Rational(0)); break;
      default: c = ComplexRat(Rational(0), Rational(-binom)); break;
    }
    r.add_term({static_cast<int>(j), static_cast<int>(k - j), 0}, c);
    if (j < k) {
      binom *= k - j;
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j + 1));
    }
  }
  return r;
}

/// Substitutes s -> x^2 + y^2.
inline TriPoly expand_bipoly(const BiPoly& p) {
  TriPoly r;
  for (const auto& [key, c] : p.terms()) {
    const int i = key.first, j = key.second;
    for (int l = 0; l <= i; ++l) {
      const Rational coeff = Rational(binomial(static_cast<unsigned long>(i),
                                               static_cast<unsigned long>(l))) * c;
      r.add_term({2 * (i - l), 2 * l, j}, ComplexRat(coeff, Rational(0)));
    }
  }
  return r;
}

/// Full trivariate expansion of zeta^k * p(x^2 + y^2, z).
inline TriPoly expand_zonal(long k, const BiPoly& p) {
  return zeta_power(k) * expand_bipoly(p);
}

/// Rough size of the expansion of zeta^k * p in bytes (binomial coefficients
/// of zeta^k carry about k bits each). Lets callers refuse expansions that
/// cannot fit in memory.
inline double zonal_expansion_estimate_bytes(long k, const BiPoly& p) {
  double monomials = 0;
  for (const auto& [key, c] : p.terms()) monomials += key.first + 1;
  const double coeff_bytes = static_cast<double>(k) / 8.0 + 64.0;
  return (static_cast<double>(k) + 1.0) * monomials * (2.0 * coeff_bytes + 96.0);
}

}  // namespace zonal

#endif  // ZONAL_TRIPOLY_HPP
