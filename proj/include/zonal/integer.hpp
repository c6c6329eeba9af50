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

#ifndef ZONAL_INTEGER_HPP
#define ZONAL_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace zonal {

using Integer = mpz_class;

/// Floor of the square root. Requires n >= 0.
inline Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Exact square root, or nullopt when n is not a perfect square.
inline std::optional<Integer> exact_sqrt(const Integer& n) {
  if (!is_square(n)) return std::nullopt;
  return isqrt(n);
}

namespace detail {

// Largest m with m^3 <= 2^64 - 1.
inline constexpr std::uint64_t kCbrtMax64 = 2642245u;

inline std::uint64_t icbrt_u64(std::uint64_t n) {
  std::uint64_t lo = 0, hi = kCbrtMax64;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (mid * mid * mid <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace detail

/// Floor of the cube root by binary search with multiply-back; exact for any
/// size of n. Requires n >= 0.
inline Integer icbrt(const Integer& n) {
  if (n < 0) throw std::domain_error("icbrt: negative argument");
  if (n.fits_ulong_p() && sizeof(unsigned long) == 8)
    return Integer(static_cast<unsigned long>(detail::icbrt_u64(n.get_ui())));
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer lo = 0, hi = Integer(1) << (bits / 3 + 1);
  while (lo < hi) {
    Integer mid = lo + (hi - lo + 1) / 2;
    if (mid * mid * mid <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

inline std::optional<Integer> exact_cbrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = icbrt(n);
  if (r * r * r == n) return r;
  return std::nullopt;
}

inline bool is_cube(const Integer& n) { return n >= 0 && exact_cbrt(n).has_value(); }

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

namespace detail {

inline bool miller_rabin_witness(const Integer& a, const Integer& d, unsigned long s,
                                 const Integer& n) {
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness found
}

}  // namespace detail

/// Deterministic Miller-Rabin for n below 3.3e24 (fixed base set), BPSW-style
/// probabilistic fallback above.
inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (int p : small) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) return false;
  }
  static const Integer kDeterministicBound("3317044064679887385961981");
  if (n >= kDeterministicBound) return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  for (int a : small)
    if (detail::miller_rabin_witness(a, d, s, n)) return false;
  return true;
}

}  // namespace zonal

#endif  // ZONAL_INTEGER_HPP
