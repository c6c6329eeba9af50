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

#ifndef ZONAL_FINITENESS_HPP
#define ZONAL_FINITENESS_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "zonal/factor.hpp"
#include "zonal/families.hpp"

namespace zonal {

/// p-adic valuation h(p, r) of a nonzero rational, possibly negative.
inline long valuation(const Integer& p, const Rational& r) {
  if (!is_prime(p)) throw std::domain_error("valuation: " + p.get_str() + " is not prime");
  if (r == 0) throw std::domain_error("valuation: undefined at 0");
  Integer tmp;
  const long vn = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), Integer(r.get_num()).get_mpz_t(), p.get_mpz_t()));
  const long vd = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), Integer(r.get_den()).get_mpz_t(), p.get_mpz_t()));
  return vn - vd;
}

inline const std::set<Integer>& allowed_primes(int d) {
  static const std::set<Integer> p6{2, 3, 5};
  static const std::set<Integer> p7{2, 3, 5, 7};
  if (d == 6) return p6;
  if (d == 7) return p7;
  throw UnsupportedDegreeError("allowed_primes: d must be 6 or 7");
}

/// Outcome of the necessary-condition filter: a factor whose reducibility
/// survives must have every prime outside the allowed set dividing
/// n(2n + 1) (d = 6) or n(2n + 3) (d = 7) to an exponent divisible by 3.
struct FilterCertificate {
  bool pass = false;
  Integer product;                    // n (2n + 1) or n (2n + 3)
  Factorization factors;              // full factorization used as evidence
  std::optional<std::pair<Integer, unsigned>> offender;  // first bad prime, exponent
};

inline FilterCertificate structural_filter(const Integer& n, int d,
                                           const FactorBudget& budget = {}) {
  if (d != 6 && d != 7)
    throw UnsupportedDegreeError("structural_filter: d must be 6 or 7");
  if (n < 3) throw std::domain_error("structural_filter: n must be >= 3");
  FilterCertificate cert;
  const Integer other = d == 6 ? Integer(2 * n + 1) : Integer(2 * n + 3);
  cert.product = n * other;
  // Factor the two halves separately (they stay below the sieve for scan
  // workloads); exponents merge additively, which also covers the shared
  // factor 3 in the d = 7 case.
  std::map<Integer, unsigned> merged;
  for (const auto& [p, e] : factorize(n, budget)) merged[p] += e;
  for (const auto& [p, e] : factorize(other, budget)) merged[p] += e;
  cert.factors.assign(merged.begin(), merged.end());
  const auto& allowed = allowed_primes(d);
  cert.pass = true;
  for (const auto& [p, e] : cert.factors) {
    if (allowed.count(p)) continue;
    if (e % 3 != 0) {
      cert.pass = false;
      cert.offender = {p, e};
      break;
    }
  }
  return cert;
}

/// m = K u^3 with K cube-free. Fails (without an error) when a prime outside
/// the allowed set carries an exponent not divisible by 3; allowed-set primes
/// may remain in K, excluded primes with cubed exponents move entirely into u.
struct CubeSplit {
  Integer m, K, u;
};

struct CubeSplitResult {
  std::optional<CubeSplit> split;
  std::optional<std::pair<Integer, unsigned>> offender;
  bool ok() const { return split.has_value(); }
};

inline CubeSplitResult cube_split(const Integer& m, const std::set<Integer>& allowed,
                                  const FactorBudget& budget = {}) {
  if (m < 1) throw std::domain_error("cube_split: m must be positive");
  CubeSplitResult res;
  Integer K(1), u(1);
  for (const auto& [p, e] : factorize(m, budget)) {
    if (!allowed.count(p) && e % 3 != 0) {
      res.offender = {p, e};
      return res;
    }
    for (unsigned i = 0; i < e / 3; ++i) u *= p;
    for (unsigned i = 0; i < e % 3; ++i) K *= p;
  }
  res.split = CubeSplit{m, K, u};
  return res;
}

/// One bounded search instance of L v^3 - 2 K u^3 = rhs.
struct ThueInstance {
  Integer K, L;
  int rhs = 1;
  Integer bound;
  std::vector<std::pair<Integer, Integer>> solutions;  // (u, v), 0 <= u, v <= bound
};

namespace detail {

inline std::vector<Integer> exponent_grid(const std::set<Integer>& primes) {
  std::vector<Integer> vals{1};
  for (const Integer& p : primes) {
    const std::size_t base = vals.size();
    Integer pk(1);
    for (int e = 1; e <= 2; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) vals.push_back(vals[i] * pk);
    }
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

}  // namespace detail

/// Exhaustive search over u (v recovered by the exact cube-root test) for
/// every (K, L) on the allowed-prime exponent grid with exponents in
/// {0, 1, 2}; rhs is 1 for d = 6 and 3 for d = 7.
inline std::vector<ThueInstance> thue_enumerate(int d, const Integer& bound) {
  const int rhs = d == 6 ? 1 : d == 7 ? 3 : throw UnsupportedDegreeError(
      "thue_enumerate: d must be 6 or 7");
  if (bound < 1) throw std::domain_error("thue_enumerate: bound must be >= 1");
  const std::vector<Integer> grid = detail::exponent_grid(allowed_primes(d));
  std::vector<ThueInstance> out;
  out.reserve(grid.size() * grid.size());
  for (const Integer& K : grid) {
    for (const Integer& L : grid) {
      ThueInstance inst{K, L, rhs, bound, {}};
      const Integer twoK = 2 * K;
      for (Integer u = 0; u <= bound; ++u) {
        const Integer w = twoK * u * u * u + rhs;
        if (!mpz_divisible_p(w.get_mpz_t(), L.get_mpz_t())) continue;
        const auto v = exact_cbrt(w / L);
        if (v && *v <= bound) {
          if (Integer(L * *v * *v * *v - twoK * u * u * u) != rhs)
            throw std::logic_error("thue_enumerate: solution failed revalidation");
          inst.solutions.emplace_back(u, *v);
        }
      }
      out.push_back(std::move(inst));
    }
  }
  return out;
}

/// Exact check of 0 < a - u/v < rhs / (2 K a^2 v^3) with a = cbrt(L / 2K),
/// done entirely on cubes: the lower part is 2K u^3 < L v^3; the upper part
/// is (S - C)^3 < S^2 (u/v)^3 with S = L/2K and C = rhs/(2K v^3). Requires
/// u, v >= 1.
struct ApproximationCheck {
  bool lower = false;
  bool upper = false;
  bool ok() const { return lower && upper; }
};

inline ApproximationCheck approximation_inequality(const Integer& K, const Integer& L,
                                                   int rhs, const Integer& u,
                                                   const Integer& v) {
  if (u < 1 || v < 1)
    throw std::domain_error("approximation_inequality: requires u, v >= 1");
  ApproximationCheck c;
  c.lower = 2 * K * u * u * u < L * v * v * v;
  const Rational S = make_rational(L, 2 * K);
  const Rational C = make_rational(rhs, 2 * K * v * v * v);
  const Rational b = make_rational(u, v);
  c.upper = rational_pow(S - C, 3) < S * S * rational_pow(b, 3);
  return c;
}

/// One Thue solution promoted to a candidate index n = K u^3, with its
/// verification trail.
struct ThueCandidate {
  Integer K, L, u, v;
  int rhs = 1;
  Integer n;                      // K u^3
  bool consistency = false;       // 2n + rhs == L v^3, recomputed
  bool below_min_n = false;
  bool reducible = false;
  std::vector<Rational> ptilde_roots;
  std::optional<ApproximationCheck> approx;  // only for u >= 1
};

struct FinitenessReport {
  int d = 6;
  long scan_bound = 0;
  Integer thue_bound;
  std::size_t grid_pairs = 0;                 // 729 for d = 6, 6561 for d = 7
  std::vector<ScanHit> scan_members;          // reducible n in [min_n, scan_bound]
  long filter_lo = 3, filter_hi = 0;
  std::size_t filter_fail_count = 0;
  std::vector<Integer> soundness_violations;  // filter-fail n that are reducible
  std::vector<ThueInstance> nonempty_instances;
  std::vector<ThueCandidate> candidates;
  bool degenerate_n1_recovered = false;
  std::vector<Check> checks;
  bool pass = false;
};

namespace detail {

inline ReducibilityWitness witness_for(long n, int d) {
  ReducibilityWitness w;
  const std::vector<Rational> qroots = rational_roots(depressed_cubic(n, d));
  w.reducible = !qroots.empty();
  for (const Rational& r : qroots)
    w.roots.push_back(d == 6 ? Rational(Rational(2) * r + Rational(2 * n))
                             : Rational(r + Rational(2, 3) * Rational(n)));
  std::sort(w.roots.begin(), w.roots.end());
  return w;
}

}  // namespace detail

/// Joint desk-scale report for d = 6 or 7: the direct reducibility scan, the
/// exhaustive filter-soundness sweep, the bounded Thue search with candidate
/// verdicts, and the exact approximation-inequality checks.
inline FinitenessReport finiteness_report(int d, long scan_bound, const Integer& thue_bound,
                                          int jobs = 1) {
  if (d != 6 && d != 7) throw UnsupportedDegreeError("finiteness_report: d must be 6 or 7");
  if (scan_bound < min_n(d))
    throw std::domain_error("finiteness_report: scan bound below the minimal index");
  FinitenessReport rep;
  rep.d = d;
  rep.scan_bound = scan_bound;
  rep.thue_bound = thue_bound;

  rep.scan_members = brute_scan(d, min_n(d), scan_bound, jobs);
  std::set<Integer> reducible_set;
  for (const auto& hit : rep.scan_members) reducible_set.insert(hit.n);

  // Exhaustive soundness sweep: a filter failure must imply irreducibility.
  rep.filter_lo = 3;
  rep.filter_hi = scan_bound;
  for (long n = rep.filter_lo; n <= rep.filter_hi; ++n) {
    const FilterCertificate cert = structural_filter(n, d);
    if (!cert.pass) {
      ++rep.filter_fail_count;
      if (reducible_set.count(Integer(n))) rep.soundness_violations.push_back(n);
    }
  }

  const std::vector<ThueInstance> instances = thue_enumerate(d, thue_bound);
  rep.grid_pairs = instances.size();
  const int rhs = d == 6 ? 1 : 3;
  std::set<Integer> candidate_ns;
  for (const ThueInstance& inst : instances) {
    if (inst.solutions.empty()) continue;
    rep.nonempty_instances.push_back(inst);
    for (const auto& [u, v] : inst.solutions) {
      ThueCandidate cand;
      cand.K = inst.K;
      cand.L = inst.L;
      cand.u = u;
      cand.v = v;
      cand.rhs = rhs;
      cand.n = inst.K * u * u * u;
      cand.consistency = 2 * cand.n + rhs == inst.L * v * v * v;
      cand.below_min_n = cand.n < min_n(d);
      if (cand.n >= 1) {
        if (!cand.n.fits_slong_p())
          throw std::domain_error("finiteness_report: candidate index exceeds range");
        const ReducibilityWitness w = detail::witness_for(cand.n.get_si(), d);
        cand.reducible = w.reducible;
        cand.ptilde_roots = w.roots;
        candidate_ns.insert(cand.n);
      }
      if (u >= 1) cand.approx = approximation_inequality(inst.K, inst.L, rhs, u, v);
      if (cand.n == 1 && cand.reducible) rep.degenerate_n1_recovered = true;
      rep.candidates.push_back(std::move(cand));
    }
  }

  const std::string dd = std::to_string(d);
  rep.checks.push_back({"filter_soundness_d" + dd, rep.soundness_violations.empty(),
                        "every filter-fail n in [3, " + std::to_string(scan_bound) +
                            "] is irreducible (" + std::to_string(rep.filter_fail_count) +
                            " filter failures)"});
  bool members_pass_filter = true;
  bool members_among_candidates = true;
  for (const auto& hit : rep.scan_members) {
    if (!structural_filter(hit.n, d).pass) members_pass_filter = false;
    if (!candidate_ns.count(hit.n)) members_among_candidates = false;
  }
  rep.checks.push_back({"scan_members_pass_filter_d" + dd, members_pass_filter,
                        std::to_string(rep.scan_members.size()) + " scan member(s)"});
  rep.checks.push_back({"scan_members_among_thue_candidates_d" + dd, members_among_candidates,
                        "candidates cover every scan member (vacuous when scan is empty)"});
  rep.checks.push_back({"degenerate_n1_recovered_d" + dd, rep.degenerate_n1_recovered,
                        d == 6 ? "n = 1 from (K, L) = (1, 3), rhs 1"
                               : "n = 1 from (K, L) = (1, 5), rhs 3"});
  bool approx_ok = true;
  bool solutions_exact = true;
  for (const auto& cand : rep.candidates) {
    if (cand.approx && !cand.approx->ok()) approx_ok = false;
    if (!cand.consistency) solutions_exact = false;
  }
  rep.checks.push_back({"approximation_inequality_d" + dd, approx_ok,
                        "0 < a - u/v < rhs/(2 K a^2 v^3) for every solution with u >= 1"});
  rep.checks.push_back({"thue_solutions_exact_d" + dd, solutions_exact,
                        "L v^3 - 2 K u^3 = rhs re-verified per solution"});
  rep.pass = all_pass(rep.checks);
  return rep;
}

}  // namespace zonal

#endif  // ZONAL_FINITENESS_HPP
