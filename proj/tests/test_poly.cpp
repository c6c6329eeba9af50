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

#include <doctest.h>

#include <random>

#include "zonal/ratfunc.hpp"
#include "zonal/roots.hpp"
#include "zonal/unipoly.hpp"

using namespace zonal;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 2001) - 1000;
  const long den = static_cast<long>(rng() % 50) + 1;
  return make_rational(num, den);
}

UniPoly rand_poly(std::mt19937_64& rng, int max_deg) {
  std::vector<Rational> c(static_cast<std::size_t>(rng() % (max_deg + 1)) + 1);
  for (auto& x : c) x = rand_rational(rng);
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const Rational a = rand_rational(rng), b = rand_rational(rng);
    CHECK(Rational(a + b) - b == a);
    if (b != 0) CHECK(Rational(a * b) / b == a);
  }
  CHECK(to_string(Rational(88, 3)) == "88/3");
  CHECK(to_string(make_rational(4, -2)) == "-2");
  CHECK(parse_rational("7840/3") == make_rational(7840, 3));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("unipoly arithmetic and division") {
  const UniPoly p({Rational(176), Rational(-48), Rational(1)});
  CHECK(p.to_string() == "t^2 - 48 t + 176");
  CHECK(p.eval(4) == 0);
  CHECK(p.eval(44) == 0);
  CHECK(p.eval(1) == 129);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const UniPoly a = rand_poly(rng, 6);
    const UniPoly b = rand_poly(rng, 4);
    if (b.is_zero()) continue;
    const auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("compose and inflate") {
  // (2t + 4)^2 - 3 (2t + 4) + 1 computed two ways
  const UniPoly p({Rational(1), Rational(-3), Rational(1)});
  const UniPoly q = p.compose_linear(2, 4);
  for (long t = -3; t <= 3; ++t)
    CHECK(q.eval(t) == p.eval(Rational(2 * t + 4)));
  const UniPoly r = p.inflate(3);
  CHECK(r.degree() == 6);
  for (long t = -2; t <= 2; ++t)
    CHECK(r.eval(t) == p.eval(Rational(t * t * t)));
}

TEST_CASE("polynomial gcd") {
  const UniPoly a({Rational(-2), Rational(1)});   // t - 2
  const UniPoly b({Rational(1), Rational(1)});    // t + 1
  const UniPoly g = gcd(a * b, b * b);
  CHECK(g == b.monic());
  CHECK(gcd(a, b) == UniPoly::one());
  CHECK(gcd(UniPoly(), UniPoly()).is_zero());
}

TEST_CASE("series expansion matches the tabulated values") {
  const UniPoly den({Rational(1), Rational(-10), Rational(1)});
  const RationalFunc gv(UniPoly({Rational(0), Rational(2)}), den);
  CHECK(gv.series(4) ==
        std::vector<Rational>{Rational(0), Rational(2), Rational(20), Rational(198)});
  const RationalFunc gu(UniPoly({Rational(1), Rational(-5)}), den);
  CHECK(gu.series(3) == std::vector<Rational>{Rational(1), Rational(5), Rational(49)});
  const RationalFunc geo(UniPoly::one(), UniPoly({Rational(1), Rational(-1)}));
  CHECK(geo.series(3) == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
}

TEST_CASE("series coefficients satisfy the denominator recurrence") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    UniPoly num = rand_poly(rng, 3);
    UniPoly den = rand_poly(rng, 3);
    if (den.constant_term() == 0) den = den + UniPoly::one();
    if (den.constant_term() == 0) continue;
    const RationalFunc f(num, den);
    const auto c = f.series(12);
    for (int idx = std::max(f.num().degree() + 1, f.den().degree()); idx < 12; ++idx) {
      Rational acc(0);
      for (int j = 0; j <= f.den().degree(); ++j)
        acc += f.den().coeff(j) * c[static_cast<std::size_t>(idx - j)];
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("series pole detection") {
  const RationalFunc f(UniPoly::one(), UniPoly::variable());
  CHECK_THROWS_AS(f.series(3), PoleAtOriginError);
}

TEST_CASE("rf_equal recognizes common factors") {
  const UniPoly t = UniPoly::variable();
  const UniPoly omt({Rational(1), Rational(-1)});
  const RationalFunc a(t, omt);
  const RationalFunc b(t * omt, omt * omt);
  CHECK(rf_equal(a, b));
  const RationalFunc c(UniPoly::one(), omt);
  const RationalFunc d(UniPoly::one(), UniPoly({Rational(1), Rational(1)}));
  CHECK_FALSE(rf_equal(c, d));
}

TEST_CASE("rf_equal is an equivalence relation") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    UniPoly num = rand_poly(rng, 3);
    UniPoly den = rand_poly(rng, 3);
    if (den.is_zero()) den = UniPoly::one();
    UniPoly m1 = rand_poly(rng, 2);
    UniPoly m2 = rand_poly(rng, 2);
    if (m1.is_zero()) m1 = UniPoly::one();
    if (m2.is_zero()) m2 = UniPoly::one();
    const RationalFunc a(num, den);
    const RationalFunc b(num * m1, den * m1);
    const RationalFunc c(num * m2, den * m2);
    CHECK(rf_equal(a, a));
    CHECK(rf_equal(a, b));
    CHECK(rf_equal(b, a));
    CHECK(rf_equal(b, c));
    CHECK(rf_equal(a, c));
  }
}

TEST_CASE("normalized denominator has unit constant term") {
  const RationalFunc f(UniPoly({Rational(2), Rational(4)}),
                       UniPoly({Rational(5), Rational(10), Rational(15)}));
  CHECK(f.den().constant_term() == 1);
}

TEST_CASE("rational roots on the documented cubics") {
  const UniPoly p1({Rational(-2), Rational(-3), Rational(0), Rational(1)});  // t^3 - 3t - 2
  CHECK((UniPoly({Rational(1), Rational(1)}) * UniPoly({Rational(1), Rational(1)}) *
         UniPoly({Rational(-2), Rational(1)})) == p1);
  CHECK(rational_roots(p1) ==
        std::vector<Rational>{Rational(-1), Rational(-1), Rational(2)});

  const UniPoly p2({Rational(176), Rational(-48), Rational(1)});
  CHECK(rational_roots(p2) == std::vector<Rational>{Rational(4), Rational(44)});

  const UniPoly p3({Rational(1), Rational(0), Rational(1)});  // t^2 + 1
  CHECK(rational_roots(p3).empty());

  CHECK_THROWS_AS(rational_roots(UniPoly()), std::domain_error);
  CHECK(rational_roots(UniPoly(Rational(5))).empty());
}

TEST_CASE("rational roots recovered from constructed factorizations") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<Rational> roots;
    UniPoly p = UniPoly::one();
    const int k = static_cast<int>(rng() % 3) + 1;
    for (int i = 0; i < k; ++i) {
      const Rational r = rand_rational(rng);
      roots.push_back(r);
      p = p * UniPoly({Rational(-r), Rational(1)});
    }
    if (rng() % 2) p = p * UniPoly({Rational(1), Rational(0), Rational(1)});  // t^2 + 1
    const Rational scale = make_rational(static_cast<long>(rng() % 5) + 1,
                                         static_cast<long>(rng() % 7) + 1);
    p = scale * p;
    std::sort(roots.begin(), roots.end());
    CHECK(rational_roots(p) == roots);
  }
}

TEST_CASE("rational roots against a brute-force divisor oracle") {
  // Independent oracle: enumerate all m/k with m | constant, k | leading
  // (feasible here because the random coefficients stay small), then divide
  // out repeatedly for multiplicity.
  const auto oracle = [](UniPoly p) {
    std::vector<Rational> roots;
    while (!p.is_zero() && p.constant_term() == 0 && p.degree() >= 1) {
      roots.emplace_back(0);
      p = p.divmod(UniPoly::variable()).first;
    }
    if (p.degree() >= 1) {
      const auto zc = p.primitive_integer_coeffs();
      std::vector<Rational> candidates;
      for (const Integer& m : positive_divisors(zc.front() == 0 ? Integer(1) : zc.front()))
        for (const Integer& k : positive_divisors(zc.back())) {
          candidates.push_back(make_rational(m, k));
          candidates.push_back(make_rational(-m, k));
        }
      for (const Rational& c : candidates)
        while (p.degree() >= 1 && p.eval(c) == 0) {
          roots.push_back(c);
          p = p.deflate_root(c);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  };

  std::mt19937_64 rng(6);
  for (int iter = 0; iter < 300; ++iter) {
    const int deg = static_cast<int>(rng() % 5) + 1;
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = Rational(static_cast<long>(rng() % 21) - 10);
    UniPoly p{std::move(c)};
    if (p.degree() < 1) continue;
    CAPTURE(p.to_string());
    CHECK(rational_roots(p) == oracle(p));
  }
}

TEST_CASE("rational roots with huge coefficients") {
  // ptilde-shaped cubic near the top of the scan range
  const Rational n(99991);
  const UniPoly q({Rational(-8, 15) * n * (n - 1) * (n - 2), Rational(4) * n * (n - 1),
                   Rational(-6) * n, Rational(1)});
  CHECK(rational_roots(q).empty());
}
