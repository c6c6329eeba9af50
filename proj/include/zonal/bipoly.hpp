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

#ifndef ZONAL_BIPOLY_HPP
#define ZONAL_BIPOLY_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "zonal/unipoly.hpp"

namespace zonal {

/// Sparse polynomial in (s, z) with exact rational coefficients, where s
/// stands for x^2 + y^2. Zero coefficients are never stored. A homogeneous
/// polynomial of degree d in (x, y, z) has 2i + j = d on every term (i, j).
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (s exponent, z exponent)

  BiPoly() = default;

  static BiPoly term(int i, int j, const Rational& c) {
    BiPoly p;
    p.add_term(i, j, c);
    return p;
  }

  /// z^d * ptilde(s / z^2), the homogeneous form of a dehomogenized factor.
  static BiPoly from_ptilde(const UniPoly& pt, int d) {
    if (pt.degree() * 2 > d)
      throw std::domain_error("BiPoly::from_ptilde: degree exceeds homogeneity budget");
    BiPoly p;
    for (int i = 0; i <= pt.degree(); ++i) p.add_term(i, d - 2 * i, pt.coeff(i));
    return p;
  }

  void add_term(int i, int j, const Rational& c) {
    if (i < 0 || j < 0) throw std::domain_error("BiPoly: negative exponent");
    if (c == 0) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
      terms_.emplace(Key{i, j}, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Degree as a polynomial in (x, y, z); -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, 2 * k.first + k.second);
    return d;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [k, c] : terms_)
      if (2 * k.first + k.second != d) return false;
    return true;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
    return r;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend BiPoly operator*(const Rational& s, const BiPoly& p) {
    BiPoly r;
    if (s == 0) return r;
    for (const auto& [k, c] : p.terms_) r.terms_.emplace(k, s * c);
    return r;
  }

  BiPoly d_s() const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
      if (k.first > 0) r.add_term(k.first - 1, k.second, c * k.first);
    return r;
  }
  BiPoly d_z() const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
      if (k.second > 0) r.add_term(k.first, k.second - 1, c * k.second);
    return r;
  }

  /// Coefficients grouped by s power: map s-degree -> polynomial in z.
  std::map<int, UniPoly> by_s_degree() const {
    std::map<int, std::vector<Rational>> tmp;
    for (const auto& [k, c] : terms_) {
      auto& v = tmp[k.first];
      if (static_cast<int>(v.size()) <= k.second) v.resize(k.second + 1, Rational(0));
      v[k.second] = c;
    }
    std::map<int, UniPoly> out;
    for (auto& [i, v] : tmp) out.emplace(i, UniPoly(std::move(v)));
    return out;
  }

  std::string to_string(const std::string& s = "s", const std::string& z = "z") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      const bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      const bool has_var = k.first > 0 || k.second > 0;
      if (!has_var || a != 1) {
        os << zonal::to_string(a);
        if (has_var) os << " ";
      }
      if (k.first > 0) {
        os << s;
        if (k.first > 1) os << "^" << k.first;
        if (k.second > 0) os << " ";
      }
      if (k.second > 0) {
        os << z;
        if (k.second > 1) os << "^" << k.second;
      }
    }
    return os.str();
  }

 private:
  std::map<Key, Rational> terms_;
};

/// Cofactor h with Delta(zeta^k g) = zeta^k h, where zeta = x + yi and
/// g = g(s, z) with s = x^2 + y^2.
///
/// Derivation: with d/dzeta = (d/dx - i d/dy)/2 and the conjugate operator,
/// the planar Laplacian is 4 d^2/(dzeta dzetabar) and s = zeta zetabar, so
///   d/dzetabar (zeta^k g) = zeta^{k+1} g_s,
///   d/dzeta (zeta^{k+1} g_s) = zeta^k ((k+1) g_s + s g_ss).
/// Adding d^2/dz^2 gives h = 4 s g_ss + 4(k+1) g_s + g_zz.
inline BiPoly laplacian_reduced(const BiPoly& g, long k) {
  if (k < 0) throw std::domain_error("laplacian_reduced: k must be nonnegative");
  const BiPoly gs = g.d_s();
  BiPoly r = BiPoly::term(1, 0, Rational(4)) * gs.d_s();
  r = r + Rational(4 * (k + 1)) * gs;
  r = r + g.d_z().d_z();
  return r;
}

/// Exact quotient p / q, or nullopt when q does not divide p. Division is run
/// in (Q[z])[s]; every leading-coefficient division must come out exact, which
/// is necessary and sufficient for divisibility over an integral domain.
inline std::optional<BiPoly> try_divide(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) throw std::domain_error("try_divide: zero divisor");
  std::map<int, UniPoly> rem = p.by_s_degree();
  const std::map<int, UniPoly> div = q.by_s_degree();
  const auto& [iq, bq] = *div.rbegin();
  BiPoly quot;
  while (!rem.empty()) {
    const auto& [ip, ap] = *rem.rbegin();
    if (ip < iq) return std::nullopt;
    auto [qz, rz] = ap.divmod(bq);
    if (!rz.is_zero()) return std::nullopt;
    const int shift = ip - iq;
    for (int e = 0; e <= qz.degree(); ++e) quot.add_term(shift, e, qz.coeff(e));
    for (const auto& [id, bd] : div) {
      auto it = rem.find(id + shift);
      UniPoly upd = (it == rem.end() ? UniPoly() : it->second) - bd * qz;
      if (upd.is_zero()) {
        if (it != rem.end()) rem.erase(it);
      } else if (it == rem.end()) {
        rem.emplace(id + shift, std::move(upd));
      } else {
        it->second = std::move(upd);
      }
    }
  }
  return quot;
}

/// True iff q divides p exactly over Q. Requires q nonzero.
inline bool poly_divides(const BiPoly& q, const BiPoly& p) {
  return try_divide(p, q).has_value();
}

}  // namespace zonal

#endif  // ZONAL_BIPOLY_HPP
