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

#ifndef ZONAL_RATFUNC_HPP
#define ZONAL_RATFUNC_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "zonal/unipoly.hpp"

namespace zonal {

struct PoleAtOriginError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Quotient of two univariate polynomials, kept reduced (gcd of numerator and
/// denominator constant) with the denominator scaled so its lowest nonzero
/// coefficient is 1; in particular the constant term is 1 whenever nonzero.
class RationalFunc {
 public:
  RationalFunc() : num_(), den_(UniPoly::one()) {}
  explicit RationalFunc(const Rational& c) : num_(UniPoly(c)), den_(UniPoly::one()) {}
  explicit RationalFunc(const UniPoly& p) : num_(p), den_(UniPoly::one()) {}
  RationalFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunc operator*(const UniPoly& p, const RationalFunc& r) {
    return RationalFunc(p * r.num_, r.den_);
  }
  friend RationalFunc operator*(const Rational& s, const RationalFunc& r) {
    return RationalFunc(s * r.num_, r.den_);
  }

  /// R(t^k).
  RationalFunc inflate(int k) const { return RationalFunc(num_.inflate(k), den_.inflate(k)); }

  /// First `count` Taylor coefficients at t = 0, exact. The denominator must
  /// not vanish at the origin.
  std::vector<Rational> series(long count) const {
    if (count < 0) throw std::domain_error("RationalFunc::series: negative count");
    const Rational d0 = den_.constant_term();
    if (d0 == 0)
      throw PoleAtOriginError("RationalFunc::series: denominator vanishes at t = 0");
    std::vector<Rational> c(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
      Rational acc = num_.coeff(static_cast<int>(i));
      for (long j = 1; j <= std::min<long>(i, den_.degree()); ++j)
        acc -= den_.coeff(static_cast<int>(j)) * c[static_cast<std::size_t>(i - j)];
      c[static_cast<std::size_t>(i)] = acc / d0;
    }
    return c;
  }

  std::string to_string(const std::string& var = "t") const {
    if (den_ == UniPoly::one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("RationalFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = UniPoly::one();
      return;
    }
    const UniPoly g = gcd(num_, den_);
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
    int low = 0;
    while (den_.coeff(low) == 0) ++low;
    const Rational scale = den_.coeff(low);
    num_ = num_ / scale;
    den_ = den_ / scale;
  }

  UniPoly num_, den_;
};

/// Exact equality as rational functions (cross multiplication).
inline bool rf_equal(const RationalFunc& a, const RationalFunc& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace zonal

#endif  // ZONAL_RATFUNC_HPP
