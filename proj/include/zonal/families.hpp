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

#ifndef ZONAL_FAMILIES_HPP
#define ZONAL_FAMILIES_HPP

#include <array>
#include <optional>
#include <thread>
#include <vector>

#include "zonal/check.hpp"
#include "zonal/pell.hpp"
#include "zonal/zonal_poly.hpp"

namespace zonal {

/// m with 3 m^2 = 2 n^2 + n, when the left side is an exact square times 3;
/// decides reducibility of the degree-4 factor.
inline std::optional<Integer> square_test_d4(const Integer& n) {
  const Integer t = 2 * n * n + n;
  if (!mpz_divisible_ui_p(t.get_mpz_t(), 3)) return std::nullopt;
  return exact_sqrt(t / 3);
}

/// m with 5 m^2 = 2 n^2 + 3 n; the degree-5 analogue.
inline std::optional<Integer> square_test_d5(const Integer& n) {
  const Integer t = 2 * n * n + 3 * n;
  if (!mpz_divisible_ui_p(t.get_mpz_t(), 5)) return std::nullopt;
  return exact_sqrt(t / 5);
}

namespace detail {

inline Integer exact_quotient(const Integer& a, const Integer& b, const char* what) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::logic_error(std::string("families: non-integer ") + what);
  return a / b;
}

}  // namespace detail

/// One member of the reducible degree-4 family: the k-th Pell solution for
/// D = 6 together with the derived indices and quadratic factor constants.
/// Every relation between the fields is revalidated on construction.
struct R4Entry {
  long k = 0;
  Integer u, v;        // u^2 - 6 v^2 = 1
  Integer n, m;        // u = 4n + 1, v = 2m, 2n^2 + n = 3m^2
  Integer a_k, a_k1;   // factor constants: ptilde = (t - a_k)(t - a_k1)
  Integer alpha_k, alpha_k1;

  R4Entry(long k_, const PellSolution& phi) : k(k_), u(phi.u), v(phi.v) {
    if (phi.D != 6 || phi.N != 1 || u * u - 6 * v * v != 1)
      throw std::domain_error("R4Entry: not a Pell solution for u^2 - 6v^2 = 1");
    n = detail::exact_quotient(u - 1, 4, "n = (u-1)/4");
    m = detail::exact_quotient(v, 2, "m = v/2");
    alpha_k = u - 2 * v;
    alpha_k1 = u + 2 * v;
    a_k = detail::exact_quotient(alpha_k - 1, 2, "a_k = (alpha_k-1)/2");
    a_k1 = detail::exact_quotient(alpha_k1 - 1, 2, "a_{k+1} = (alpha_{k+1}-1)/2");
    if (2 * n * n + n != 3 * m * m) throw std::logic_error("R4Entry: 2n^2 + n != 3m^2");
    if (n != detail::exact_quotient(alpha_k + alpha_k1 - 2, 8, "n from alphas"))
      throw std::logic_error("R4Entry: n != (alpha_k + alpha_{k+1} - 2)/8");
    if (a_k + a_k1 != 4 * n) throw std::logic_error("R4Entry: a_k + a_{k+1} != 4n");
    if (3 * a_k * a_k1 != 4 * n * (n - 1))
      throw std::logic_error("R4Entry: a_k a_{k+1} != (4/3) n(n-1)");
    if (a_k < 0 || a_k1 < 0) throw std::logic_error("R4Entry: negative factor constant");
  }
};

/// Entries k = 2 .. count+1 of the degree-4 family, driven by the Pell orbit
/// of (1, 0) for D = 6. The k = 0, 1 solutions do not give polynomials of the
/// right degree and are skipped.
inline std::vector<R4Entry> enumerate_r4(long count) {
  if (count < 1) throw std::domain_error("enumerate_r4: count must be >= 1");
  const OrbitSpec spec = make_orbit_spec(6, 1);
  const std::vector<PellSolution> phis = orbit(PellSolution(1, 0, 6, 1), spec, count + 1);
  std::vector<R4Entry> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long k = 2; k <= count + 1; ++k)
    out.emplace_back(k, phis[static_cast<std::size_t>(k - 1)]);
  return out;
}

/// Raw coordinates of one degree-5 orbit element (valid for any k >= 0,
/// including the base triple whose members fall below the family threshold).
struct R5Values {
  int eps = 0;  // orbit label -1 | 0 | 1
  Integer u, v;
  Integer n, m;
  Rational A, B;
};

/// Base triple of orbit representatives for u^2 - 10 v^2 = 9, with derived
/// (n, m, A, B); the k = 0 column of every degree-5 table.
inline std::array<R5Values, 3> r5_base_triple() {
  const std::vector<PellSolution> reps = representatives(10, 9);
  if (reps.size() != 3) throw std::logic_error("r5_base_triple: expected three orbits");
  std::array<R5Values, 3> out;
  for (int i = 0; i < 3; ++i) {
    const PellSolution& s = reps[static_cast<std::size_t>(i)];
    R5Values w;
    w.eps = i - 1;
    w.u = s.u;
    w.v = s.v;
    w.n = detail::exact_quotient(s.u - 3, 4, "n = (u-3)/4");
    w.m = detail::exact_quotient(s.v, 2, "m = v/2");
    w.A = make_rational(s.u - 2 * s.v - 3, 6);
    w.B = make_rational(s.u + 2 * s.v - 3, 6);
    out[static_cast<std::size_t>(i)] = w;
  }
  return out;
}

/// One member of the reducible degree-5 family, indexed by (k, eps) with
/// k >= 1. All Diophantine relations are revalidated on construction.
struct R5Entry {
  long k = 0;
  int eps = 0;
  Integer u, v;
  Integer n, m;   // u = 4n + 3, v = 2m, 2n^2 + 3n = 5m^2
  Rational A, B;  // ptilde = (t - A)(t - B)

  R5Entry(long k_, int eps_, const PellSolution& s) : k(k_), eps(eps_), u(s.u), v(s.v) {
    if (s.D != 10 || s.N != 9 || u * u - 10 * v * v != 9)
      throw std::domain_error("R5Entry: not a solution of u^2 - 10v^2 = 9");
    if (k < 1) throw std::domain_error("R5Entry: k must be >= 1");
    n = detail::exact_quotient(u - 3, 4, "n = (u-3)/4");
    m = detail::exact_quotient(v, 2, "m = v/2");
    if (n < 2 || m < 2) throw std::logic_error("R5Entry: indices below family threshold");
    if (2 * n * n + 3 * n != 5 * m * m) throw std::logic_error("R5Entry: 2n^2 + 3n != 5m^2");
    A = make_rational(u - 2 * v - 3, 6);
    B = make_rational(u + 2 * v - 3, 6);
    if (A != Rational(2, 3) * Rational(n - m) || B != Rational(2, 3) * Rational(n + m))
      throw std::logic_error("R5Entry: (A, B) disagree with (2/3)(n -+ m)");
  }
};

using R5Triple = std::array<R5Entry, 3>;

/// Triples T_1 .. T_count of the degree-5 family: the base triple advanced by
/// even powers of the automorphism, entries ordered eps = -1, 0, 1.
inline std::vector<R5Triple> enumerate_r5(long count) {
  if (count < 1) throw std::domain_error("enumerate_r5: count must be >= 1");
  const OrbitSpec spec = make_orbit_spec(10, 2);
  const std::vector<PellSolution> reps = representatives(10, 9);
  std::array<std::vector<PellSolution>, 3> lines;
  for (int i = 0; i < 3; ++i)
    lines[static_cast<std::size_t>(i)] = orbit(reps[static_cast<std::size_t>(i)], spec, count);
  std::vector<R5Triple> out;
  for (long k = 1; k <= count; ++k) {
    const std::size_t idx = static_cast<std::size_t>(k - 1);
    out.push_back(R5Triple{R5Entry(k, -1, lines[0][idx]), R5Entry(k, 0, lines[1][idx]),
                           R5Entry(k, 1, lines[2][idx])});
  }
  return out;
}

struct FourABReport {
  bool pass = true;
  std::vector<Check> checks;
};

namespace detail {

inline void add_check(FourABReport& rep, std::string name, bool pass, std::string detail) {
  rep.pass = rep.pass && pass;
  rep.checks.push_back({std::move(name), pass, std::move(detail)});
}

inline std::array<R5Values, 3> r5_values_at(long k, const std::vector<R5Triple>& triples) {
  if (k == 0) return r5_base_triple();
  std::array<R5Values, 3> out;
  const R5Triple& t = triples[static_cast<std::size_t>(k - 1)];
  for (int i = 0; i < 3; ++i) {
    const R5Entry& e = t[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = R5Values{e.eps, e.u, e.v, e.n, e.m, e.A, e.B};
  }
  return out;
}

}  // namespace detail

/// Verifies, for k = 0 .. k_max: the cross equalities A_{k,0} = B_{k,-1} and
/// B_{k,0} = A_{k,1}; integrality of those four values against denominator
/// exactly 3 for A_{k,-1} and B_{k,1}; and replays the affine recurrences for
/// (A, B) and (n, m) against the orbit data. Failures are reported per (k,
/// eps), never thrown.
inline FourABReport verify_fourAB(long k_max) {
  if (k_max < 1) throw std::domain_error("verify_fourAB: k_max must be >= 1");
  FourABReport rep;
  const std::vector<R5Triple> triples = enumerate_r5(k_max);
  std::array<R5Values, 3> prev{};
  for (long k = 0; k <= k_max; ++k) {
    const std::array<R5Values, 3> cur = detail::r5_values_at(k, triples);
    const std::string kk = std::to_string(k);
    detail::add_check(rep, "A[k,0] == B[k,-1] at k=" + kk, cur[1].A == cur[0].B,
                      to_string(cur[1].A) + " vs " + to_string(cur[0].B));
    detail::add_check(rep, "B[k,0] == A[k,1] at k=" + kk, cur[1].B == cur[2].A,
                      to_string(cur[1].B) + " vs " + to_string(cur[2].A));
    detail::add_check(rep, "integrality of shared values at k=" + kk,
                      is_integer(cur[1].A) && is_integer(cur[0].B) && is_integer(cur[1].B) &&
                          is_integer(cur[2].A),
                      "A[k,0], B[k,-1], B[k,0], A[k,1]");
    detail::add_check(rep, "denominator 3 at k=" + kk,
                      denominator(cur[0].A) == 3 && denominator(cur[2].B) == 3,
                      "A[k,-1] = " + to_string(cur[0].A) + ", B[k,1] = " + to_string(cur[2].B));
    if (k > 0) {
      for (int i = 0; i < 3; ++i) {
        const R5Values& p = prev[static_cast<std::size_t>(i)];
        const R5Values& c = cur[static_cast<std::size_t>(i)];
        const std::string tag = "k=" + kk + ", eps=" + std::to_string(c.eps);
        const bool rec_ab = c.A == Rational(-77) * p.A + Rational(342) * p.B + Rational(132) &&
                            c.B == Rational(-342) * p.A + Rational(1519) * p.B + Rational(588);
        detail::add_check(rep, "affine recurrence for (A, B) at " + tag, rec_ab,
                          "A' = -77A + 342B + 132, B' = -342A + 1519B + 588");
        const bool rec_nm =
            c.n == 721 * p.n + 1140 * p.m + 540 && c.m == 456 * p.n + 721 * p.m + 342;
        detail::add_check(rep, "affine recurrence for (n, m) at " + tag, rec_nm,
                          "n' = 721n + 1140m + 540, m' = 456n + 721m + 342");
      }
    }
    prev = cur;
  }
  return rep;
}

/// One hit of a reducibility scan.
struct ScanHit {
  Integer n;
  ReducibilityWitness witness;
};

namespace detail {

inline std::optional<ReducibilityWitness> scan_one(int d, const Integer& n) {
  switch (d) {
    case 4: {
      const auto m = square_test_d4(n);
      if (!m) return std::nullopt;
      ReducibilityWitness w;
      w.reducible = true;
      w.roots = {Rational(2 * (n - *m)), Rational(2 * (n + *m))};
      return w;
    }
    case 5: {
      const auto m = square_test_d5(n);
      if (!m) return std::nullopt;
      ReducibilityWitness w;
      w.reducible = true;
      w.roots = {Rational(2, 3) * Rational(n - *m), Rational(2, 3) * Rational(n + *m)};
      return w;
    }
    default: {
      // d = 6, 7: rational roots of the depressed cubic, pulled back through
      // the affine substitution to roots of ptilde.
      if (!n.fits_slong_p()) throw std::domain_error("scan_one: index out of range");
      const long nl = n.get_si();
      const std::vector<Rational> qroots = rational_roots(depressed_cubic(nl, d));
      if (qroots.empty()) return std::nullopt;
      ReducibilityWitness w;
      w.reducible = true;
      for (const Rational& r : qroots)
        w.roots.push_back(d == 6 ? Rational(Rational(2) * r + Rational(2 * nl))
                                 : Rational(r + Rational(2, 3) * Rational(nl)));
      std::sort(w.roots.begin(), w.roots.end());
      return w;
    }
  }
}

}  // namespace detail

/// Exhaustive reducibility scan over n in [n_lo, n_hi]. Disjoint ranges may
/// run concurrently (jobs > 1); results are merged in index order, so the
/// output is independent of the partitioning.
inline std::vector<ScanHit> brute_scan(int d, long n_lo, long n_hi, int jobs = 1) {
  detail::require_degree(d);
  if (n_lo < min_n(d))
    throw std::domain_error("brute_scan: range starts below the minimal index " +
                            std::to_string(min_n(d)) + " for d=" + std::to_string(d));
  if (n_hi < n_lo) throw std::domain_error("brute_scan: empty range");
  if (jobs < 1) jobs = 1;
  const long span = n_hi - n_lo + 1;
  const int workers = static_cast<int>(std::min<long>(jobs, span));
  std::vector<std::vector<ScanHit>> parts(static_cast<std::size_t>(workers));
  auto run = [&](int w) {
    const long chunk = span / workers, extra = span % workers;
    const long begin = n_lo + w * chunk + std::min<long>(w, extra);
    const long end = begin + chunk + (w < extra ? 1 : 0);
    auto& mine = parts[static_cast<std::size_t>(w)];
    for (long n = begin; n < end; ++n)
      if (auto w5 = detail::scan_one(d, n)) mine.push_back({Integer(n), std::move(*w5)});
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<ScanHit> out;
  for (auto& p : parts)
    for (auto& h : p) out.push_back(std::move(h));
  return out;
}

}  // namespace zonal

#endif  // ZONAL_FAMILIES_HPP
