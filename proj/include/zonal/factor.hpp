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

#ifndef ZONAL_FACTOR_HPP
#define ZONAL_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "zonal/integer.hpp"

namespace zonal {

/// Thrown when a factorization exceeds its configured effort; callers must
/// treat this as "unknown", never as a pass.
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FactorBudget {
  std::uint64_t rho_iterations = 20'000'000;
};

/// Smallest-prime-factor sieve used for deterministic factorization of scan
/// workloads.
class SpfSieve {
 public:
  explicit SpfSieve(std::uint32_t limit) : limit_(limit), spf_(limit + 1, 0) {
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        primes_.push_back(i);
        for (std::uint64_t j = i; j <= limit; j += i)
          if (spf_[j] == 0) spf_[j] = i;
      }
    }
  }

  std::uint32_t limit() const { return limit_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  /// Full factorization of 1 <= n <= limit by SPF walk.
  void factor_into(std::uint64_t n, std::map<Integer, unsigned>& out) const {
    while (n > 1) {
      std::uint32_t p = spf_[n];
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out[Integer(static_cast<unsigned long>(p))] += e;
    }
  }

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

inline const SpfSieve& default_sieve() {
  static const SpfSieve sieve(10'000'000);
  return sieve;
}

using Factorization = std::vector<std::pair<Integer, unsigned>>;  // sorted by prime

namespace detail {

inline Integer pollard_rho(const Integer& n, std::uint64_t& budget) {
  // Brent's cycle variant; n odd composite, no factors below the sieve limit.
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    Integer ys = y, q = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && d == 1; k += m) {
        ys = y;
        const unsigned long steps = std::min(m, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          Integer diff = x - y;
          if (diff < 0) diff = -diff;
          q = q * diff % n;
        }
        if (budget < steps) throw BudgetExceededError("factorize: effort budget exhausted");
        budget -= steps;
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (d == n) {
      // backtrack
      do {
        ys = (ys * ys + c) % n;
        Integer diff = x - ys;
        if (diff < 0) diff = -diff;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

inline void factor_recurse(const Integer& n, std::map<Integer, unsigned>& out,
                           std::uint64_t& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  const Integer d = pollard_rho(n, budget);
  factor_recurse(d, out, budget);
  factor_recurse(n / d, out, budget);
}

}  // namespace detail

/// Deterministic trial division via the prime sieve, Pollard rho beyond it.
/// Requires n >= 1; throws BudgetExceededError instead of returning a partial
/// answer.
inline Factorization factorize(const Integer& n, const FactorBudget& budget = {}) {
  if (n < 1) throw std::domain_error("factorize: argument must be positive");
  std::map<Integer, unsigned> acc;
  const SpfSieve& sieve = default_sieve();
  Integer rem = n;
  if (rem.fits_ulong_p() && rem.get_ui() <= sieve.limit()) {
    sieve.factor_into(rem.get_ui(), acc);
    rem = 1;
  } else {
    for (std::uint32_t p : sieve.primes()) {
      if (Integer(p) * p > rem) break;
      if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
        unsigned e = 0;
        do {
          mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
          ++e;
        } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
        acc[Integer(static_cast<unsigned long>(p))] += e;
      }
      if (rem.fits_ulong_p() && rem.get_ui() <= sieve.limit()) {
        sieve.factor_into(rem.get_ui(), acc);
        rem = 1;
        break;
      }
    }
    if (rem > 1) {
      // Either prime (trial division passed sqrt), or needs rho.
      Integer sieve_sq = Integer(sieve.limit()) * sieve.limit();
      if (rem <= sieve_sq || is_prime(rem)) {
        acc[rem] += 1;
      } else {
        std::uint64_t fuel = budget.rho_iterations;
        detail::factor_recurse(rem, acc, fuel);
      }
    }
  }
  return Factorization(acc.begin(), acc.end());
}

/// All positive divisors of |n|, ascending. Requires n != 0.
inline std::vector<Integer> positive_divisors(const Integer& n,
                                              const FactorBudget& budget = {}) {
  if (n == 0) throw std::domain_error("positive_divisors: zero has no divisor list");
  Integer a = n < 0 ? Integer(-n) : n;
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factorize(a, budget)) {
    const std::size_t base = divs.size();
    Integer pk(1);
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace zonal

#endif  // ZONAL_FACTOR_HPP
