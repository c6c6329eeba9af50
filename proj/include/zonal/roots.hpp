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

#ifndef ZONAL_ROOTS_HPP
#define ZONAL_ROOTS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zonal/factor.hpp"
#include "zonal/unipoly.hpp"

namespace zonal {
namespace detail {

// Sturm chain of a squarefree polynomial.
inline std::vector<UniPoly> sturm_chain(const UniPoly& q) {
  std::vector<UniPoly> chain{q, q.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

inline int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
  int vars = 0, prev = 0;
  for (const auto& p : chain) {
    const Rational v = p.eval(x);
    const int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
    if (s != 0) {
      if (prev != 0 && s != prev) ++vars;
      prev = s;
    }
  }
  return vars;
}

// Number of distinct real roots in (a, b].
inline int roots_in(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

// A strict bound on the absolute value of every real root.
inline Rational cauchy_bound(const UniPoly& p) {
  Rational m(0);
  const Rational lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = p.coeff(i) / lead;
    if (r < 0) r = -r;
    if (r > m) m = r;
  }
  return m + 1;
}

// One rational root of p (deg >= 1), if any. Candidate denominators are the
// divisors of the cleared leading coefficient; candidate numerators are read
// off from Sturm-isolated intervals narrowed below 1/k, so the constant term
// is never factored.
inline std::optional<Rational> find_rational_root(const UniPoly& p) {
  if (p.degree() == 1) return -p.coeff(0) / p.coeff(1);

  const std::vector<Integer> zc = p.primitive_integer_coeffs();
  const std::vector<Integer> dens = positive_divisors(zc.back());
  const Integer& kmax = dens.back();

  const UniPoly q = p.divmod(gcd(p, p.derivative())).first.monic();
  const std::vector<UniPoly> chain = sturm_chain(q);
  const Rational bound = cauchy_bound(q);

  // (a, b] intervals each holding exactly one root of q.
  std::vector<std::pair<Rational, Rational>> isolated;
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const int count = roots_in(chain, a, b);
    if (count == 0) continue;
    if (count == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    const Rational mid = (a + b) / 2;
    if (q.eval(mid) == 0 && p.eval(mid) == 0) return mid;
    work.emplace_back(a, mid);
    work.emplace_back(mid, b);
  }

  for (auto [a, b] : isolated) {
    while ((b - a) * kmax >= 1) {
      const Rational mid = (a + b) / 2;
      if (q.eval(mid) == 0) {
        if (p.eval(mid) == 0) return mid;
        break;
      }
      if (roots_in(chain, a, mid) == 1)
        b = mid;
      else
        a = mid;
    }
    for (const Integer& k : dens) {
      Integer lo, hi;
      mpz_cdiv_q(lo.get_mpz_t(), Integer(numerator(a) * k).get_mpz_t(),
                 denominator(a).get_mpz_t());
      mpz_fdiv_q(hi.get_mpz_t(), Integer(numerator(b) * k).get_mpz_t(),
                 denominator(b).get_mpz_t());
      for (Integer m = lo; m <= hi; ++m) {
        const Rational cand = make_rational(m, k);
        if (p.eval(cand) == 0) return cand;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// All rational roots with multiplicity, ascending. Multiplicity is
/// established by repeated synthetic division. Throws on the zero polynomial.
inline std::vector<Rational> rational_roots(const UniPoly& poly) {
  if (poly.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  UniPoly p = poly;
  while (!p.is_zero() && p.constant_term() == 0 && p.degree() >= 1) {
    roots.emplace_back(0);
    p = p.divmod(UniPoly::variable()).first;
  }
  while (p.degree() >= 1) {
    const auto r = detail::find_rational_root(p);
    if (!r) break;
    while (p.degree() >= 1 && p.eval(*r) == 0) {
      roots.push_back(*r);
      p = p.deflate_root(*r);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace zonal

#endif  // ZONAL_ROOTS_HPP
