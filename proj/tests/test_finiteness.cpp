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

#include "zonal/finiteness.hpp"

using namespace zonal;

TEST_CASE("valuation basics") {
  CHECK(valuation(2, Rational(300)) == 2);
  CHECK(valuation(5, Rational(8, 15)) == -1);
  CHECK(valuation(7, Rational(49)) == 2);
  CHECK(valuation(3, Rational(1, 27)) == -3);
  CHECK_THROWS_AS(valuation(4, Rational(8)), std::domain_error);
  CHECK_THROWS_AS(valuation(3, Rational(0)), std::domain_error);
}

TEST_CASE("valuation is additive") {
  std::mt19937_64 rng(21);
  const Integer primes[] = {2, 3, 5, 7, 11};
  for (int i = 0; i < 300; ++i) {
    const Rational a = make_rational(static_cast<long>(rng() % 5000) + 1,
                                     static_cast<long>(rng() % 500) + 1);
    const Rational b = make_rational(static_cast<long>(rng() % 5000) + 1,
                                     static_cast<long>(rng() % 500) + 1);
    const Integer& p = primes[rng() % 5];
    CHECK(valuation(p, Rational(a * b)) == valuation(p, a) + valuation(p, b));
  }
}

TEST_CASE("structural filter on documented indices") {
  const auto c12 = structural_filter(12, 6);
  CHECK(c12.pass);
  CHECK(c12.product == 300);

  const auto c3 = structural_filter(3, 6);
  CHECK_FALSE(c3.pass);
  REQUIRE(c3.offender.has_value());
  CHECK(c3.offender->first == 7);
  CHECK(c3.offender->second == 1);

  const auto c37 = structural_filter(3, 7);  // 3 * 9 = 27 = 3^3
  CHECK(c37.pass);

  CHECK_THROWS_AS(structural_filter(2, 6), std::domain_error);
  CHECK_THROWS_AS(structural_filter(12, 5), UnsupportedDegreeError);
}

TEST_CASE("cube split") {
  const auto s = cube_split(2160, {2, 3, 5});
  REQUIRE(s.ok());
  CHECK(s.split->K == 10);
  CHECK(s.split->u == 6);

  const auto one = cube_split(1, {2, 3, 5});
  REQUIRE(one.ok());
  CHECK(one.split->K == 1);
  CHECK(one.split->u == 1);

  // an excluded prime with a cubed exponent moves wholly into u
  const auto s343 = cube_split(343, {2, 3, 5});
  REQUIRE(s343.ok());
  CHECK(s343.split->K == 1);
  CHECK(s343.split->u == 7);

  const auto bad = cube_split(7, {2, 3, 5});
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.offender.has_value());
  CHECK(bad.offender->first == 7);
}

TEST_CASE("cube split round trips on random inputs") {
  std::mt19937_64 rng(22);
  const std::set<Integer> allowed{2, 3, 5};
  for (int i = 0; i < 300; ++i) {
    const Integer m(static_cast<unsigned long>(rng() % 5000000 + 1));
    const auto r = cube_split(m, allowed);
    if (!r.ok()) continue;
    CHECK(r.split->K * r.split->u * r.split->u * r.split->u == m);
    // K stays cube-free
    for (const auto& [p, e] : factorize(r.split->K)) CHECK(e < 3);
  }
}

TEST_CASE("thue enumeration covers the documented degenerate solutions") {
  const auto instances6 = thue_enumerate(6, 40);
  CHECK(instances6.size() == 729);
  bool found11 = false, found01 = false;
  for (const auto& inst : instances6) {
    if (inst.K == 1 && inst.L == 3)
      for (const auto& [u, v] : inst.solutions)
        if (u == 1 && v == 1) found11 = true;
    if (inst.K == 1 && inst.L == 1)
      for (const auto& [u, v] : inst.solutions)
        if (u == 0 && v == 1) found01 = true;
  }
  CHECK(found11);
  CHECK(found01);

  const auto instances7 = thue_enumerate(7, 10);
  CHECK(instances7.size() == 6561);
  bool found15 = false;
  for (const auto& inst : instances7)
    if (inst.K == 1 && inst.L == 5)
      for (const auto& [u, v] : inst.solutions)
        if (u == 1 && v == 1) found15 = true;
  CHECK(found15);
}

TEST_CASE("every listed thue solution satisfies its equation") {
  for (const auto& inst : thue_enumerate(6, 60))
    for (const auto& [u, v] : inst.solutions)
      CHECK(inst.L * v * v * v - 2 * inst.K * u * u * u == inst.rhs);
}

TEST_CASE("approximation inequality by exact cube comparison") {
  // (K, L) = (1, 3), solution (1, 1): 0 < cbrt(3/2) - 1 < 1/(2 a^2)
  const auto c = approximation_inequality(1, 3, 1, 1, 1);
  CHECK(c.lower);
  CHECK(c.upper);
  CHECK_THROWS_AS(approximation_inequality(1, 1, 1, 0, 1), std::domain_error);
}

TEST_CASE("finiteness report at small scale") {
  const FinitenessReport rep = finiteness_report(6, 300, 50);
  CHECK(rep.d == 6);
  CHECK(rep.grid_pairs == 729);
  CHECK(rep.scan_members.empty());
  CHECK(rep.soundness_violations.empty());
  CHECK(rep.degenerate_n1_recovered);
  CHECK(rep.pass);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
  // candidate n = 4 from (K, L) = (4, 9) shows a solution without reducibility
  bool candidate4 = false;
  for (const auto& cand : rep.candidates)
    if (cand.n == 4 && cand.K == 4 && cand.L == 9) {
      candidate4 = true;
      CHECK_FALSE(cand.reducible);
    }
  CHECK(candidate4);
  // both degenerate indices surface as reducible candidates below min_n
  bool n1 = false, n2 = false;
  for (const auto& cand : rep.candidates) {
    if (cand.n == 1 && cand.K == 1 && cand.L == 3) {
      n1 = true;
      CHECK(cand.reducible);
      CHECK(cand.below_min_n);
    }
    if (cand.n == 2 && cand.K == 2 && cand.L == 5) {
      n2 = true;
      CHECK(cand.reducible);
      CHECK(cand.below_min_n);
      CHECK(cand.ptilde_roots.size() == 1);
    }
  }
  CHECK(n1);
  CHECK(n2);
}

TEST_CASE("degenerate d7 candidates carry their roots") {
  const FinitenessReport rep = finiteness_report(7, 100, 10);
  bool n2 = false;
  for (const auto& cand : rep.candidates)
    if (cand.n == 2 && cand.K == 2 && cand.L == 7) {
      n2 = true;
      CHECK(cand.reducible);
    }
  CHECK(n2);
}

TEST_CASE("finiteness report is job-count independent") {
  const FinitenessReport a = finiteness_report(7, 120, 20, 1);
  const FinitenessReport b = finiteness_report(7, 120, 20, 3);
  CHECK(a.scan_members.size() == b.scan_members.size());
  CHECK(a.filter_fail_count == b.filter_fail_count);
  CHECK(a.candidates.size() == b.candidates.size());
  CHECK(a.pass == b.pass);
}
