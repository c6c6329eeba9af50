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

#ifndef ZONAL_UNIPOLY_HPP
#define ZONAL_UNIPOLY_HPP

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zonal/rational.hpp"

namespace zonal {

/// Dense univariate polynomial over the rationals, coefficients stored lowest
/// degree first. The zero polynomial is the empty coefficient list; otherwise
/// the leading coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rational& c) : c_{c} { normalize(); }
  UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  /// The monomial t.
  static UniPoly variable() { return UniPoly({Rational(0), Rational(1)}); }
  static UniPoly one() { return UniPoly(Rational(1)); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational leading() const {
    if (is_zero()) throw std::domain_error("UniPoly::leading: zero polynomial");
    return c_.back();
  }
  Rational constant_term() const { return coeff(0); }
  bool is_monic() const { return !is_zero() && c_.back() == 1; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const Rational& s, const UniPoly& p) {
    UniPoly r = p;
    for (auto& c : r.c_) c *= s;
    r.normalize();
    return r;
  }
  friend UniPoly operator*(const UniPoly& p, const Rational& s) { return s * p; }
  friend UniPoly operator/(const UniPoly& p, const Rational& s) {
    if (s == 0) throw std::domain_error("UniPoly: division by zero scalar");
    return make_rational(s.get_den(), s.get_num()) * p;
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = c_[i] * Rational(static_cast<unsigned long>(i));
    return UniPoly(std::move(d));
  }

  /// Euclidean division; returns (quotient, remainder) with
  /// deg(remainder) < deg(divisor).
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero");
    UniPoly rem = *this;
    std::vector<Rational> q;
    const int dd = divisor.degree();
    if (rem.degree() >= dd) q.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational(0));
    const Rational lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
      const int shift = rem.degree() - dd;
      const Rational f = rem.leading() / lead;
      q[static_cast<std::size_t>(shift)] = f;
      for (int i = 0; i <= dd; ++i)
        rem.c_[static_cast<std::size_t>(shift + i)] -= f * divisor.c_[static_cast<std::size_t>(i)];
      rem.normalize();
    }
    return {UniPoly(std::move(q)), rem};
  }

  /// P(a t + b).
  UniPoly compose_linear(const Rational& a, const Rational& b) const {
    const UniPoly lin({b, a});
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UniPoly(*it);
    return acc;
  }

  /// P(t^k).
  UniPoly inflate(int k) const {
    if (k < 1) throw std::domain_error("UniPoly::inflate: k must be positive");
    if (is_zero()) return UniPoly();
    std::vector<Rational> c(static_cast<std::size_t>(degree() * k) + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * static_cast<std::size_t>(k)] = c_[i];
    return UniPoly(std::move(c));
  }

  /// Divides by (t - r); throws unless r is a root.
  UniPoly deflate_root(const Rational& r) const {
    auto [q, rem] = divmod(UniPoly({-r, Rational(1)}));
    if (!rem.is_zero()) throw std::domain_error("UniPoly::deflate_root: not a root");
    return q;
  }

  UniPoly monic() const {
    if (is_zero()) return UniPoly();
    return *this / leading();
  }

  /// Clears denominators and content: returns the primitive integer
  /// polynomial with the same roots (positive leading coefficient).
  std::vector<Integer> primitive_integer_coeffs() const {
    if (is_zero()) throw std::domain_error("UniPoly: zero polynomial has no primitive part");
    Integer lcm(1);
    for (const auto& c : c_) {
      Integer d = c.get_den();
      Integer g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
      lcm = lcm / g * d;
    }
    std::vector<Integer> z(c_.size());
    Integer content(0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      z[i] = Integer(c_[i].get_num()) * (lcm / Integer(c_[i].get_den()));
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (z.back() < 0) content = -content;
    for (auto& v : z) v /= content;
    return z;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Rational c = coeff(i);
      if (c == 0) continue;
      const bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      if (i == 0 || a != 1) {
        os << to_zonal_string(a);
        if (i > 0) os << " ";
      }
      if (i > 0) {
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  static std::string to_zonal_string(const Rational& r) { return zonal::to_string(r); }

  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

}  // namespace zonal

#endif  // ZONAL_UNIPOLY_HPP
