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

#ifndef ZONAL_ZONAL_POLY_HPP
#define ZONAL_ZONAL_POLY_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zonal/bipoly.hpp"
#include "zonal/roots.hpp"

namespace zonal {

struct UnsupportedDegreeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised for indices where the rotation-invariant factor degenerates (the
/// construction would collapse into a lower-degree family).
struct DegenerateIndexError : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {

inline void require_degree(long d) {
  if (d < 2 || d > 7)
    throw UnsupportedDegreeError("degree d must lie in [2, 7], got " + std::to_string(d));
}

}  // namespace detail

/// Smallest index n for which the degree-d factor is nondegenerate. Below it
/// either the zeta exponent n - floor(d/2) turns negative or the constant
/// term of the factor vanishes.
inline long min_n(long d) {
  detail::require_degree(d);
  switch (d) {
    case 2:
    case 3: return 1;
    case 4:
    case 5: return 2;
    default: return 3;  // 6, 7
  }
}

inline void require_index(long n, long d) {
  detail::require_degree(d);
  if (n < min_n(d)) {
    const long collapsed = std::min(d - 2, 2 * n + (d % 2));
    throw DegenerateIndexError(
        "index n=" + std::to_string(n) + " is degenerate for d=" + std::to_string(d) +
        " (minimum n=" + std::to_string(min_n(d)) + "); the factor collapses to the d=" +
        std::to_string(collapsed < 0 ? 0 : collapsed) + " family");
  }
}

struct ZonalSpec {
  long n;
  long d;
  long zeta_power;  // n - floor(d/2)
};

/// The degree-d rotation-invariant factor: monic dehomogenization ptilde in
/// t = s/z^2 together with its homogeneous (s, z) form. Constructed values
/// always carry a verified harmonicity certificate.
class ZonalPolynomial {
 public:
  ZonalPolynomial(ZonalSpec spec, UniPoly ptilde)
      : spec_(spec), ptilde_(std::move(ptilde)),
        p_(BiPoly::from_ptilde(ptilde_, static_cast<int>(spec.d))) {
    if (!ptilde_.is_monic())
      throw std::logic_error("ZonalPolynomial: dehomogenized factor must be monic");
    if (!laplacian_reduced(p_, spec_.zeta_power).is_zero())
      throw std::logic_error("ZonalPolynomial: harmonicity certificate failed");
  }

  const ZonalSpec& spec() const { return spec_; }
  const UniPoly& ptilde() const { return ptilde_; }
  const BiPoly& p() const { return p_; }

 private:
  ZonalSpec spec_;
  UniPoly ptilde_;
  BiPoly p_;
};

/// Solves the harmonicity condition laplacian_reduced(p, n - floor(d/2)) = 0
/// coefficient by coefficient, from the monic top power of s downward; the
/// system is triangular, so the factor is unique.
inline ZonalPolynomial construct(long n, long d) {
  require_index(n, d);
  const long k = n - d / 2;
  const int top = static_cast<int>(d / 2);
  std::vector<Rational> c(static_cast<std::size_t>(top) + 1, Rational(0));
  c[static_cast<std::size_t>(top)] = 1;
  // Vanishing of the s^j z^{d-2j-2} cofactor term reads
  //   4 (j+1)(j+k+1) c_{j+1} + (d-2j)(d-2j-1) c_j = 0.
  for (int j = top - 1; j >= 0; --j) {
    const Rational numer = Rational(-4) * Rational(j + 1) * Rational(j + k + 1);
    const Rational denom = Rational(d - 2 * j) * Rational(d - 2 * j - 1);
    c[static_cast<std::size_t>(j)] = numer / denom * c[static_cast<std::size_t>(j + 1)];
  }
  return ZonalPolynomial({n, d, k}, UniPoly(std::move(c)));
}

/// The closed-form dehomogenized factor; independent of the linear solver in
/// construct, so the two act as mutual checks.
inline UniPoly closed_form_ptilde(long n, long d) {
  detail::require_degree(d);
  const Rational N(n);
  switch (d) {
    case 2: return UniPoly({Rational(-2) * N, Rational(1)});
    case 3: return UniPoly({Rational(-2, 3) * N, Rational(1)});
    case 4:
      return UniPoly({Rational(4, 3) * N * (N - 1), Rational(-4) * N, Rational(1)});
    case 5:
      return UniPoly({Rational(4, 15) * N * (N - 1), Rational(-4, 3) * N, Rational(1)});
    case 6:
      return UniPoly({Rational(-8, 15) * N * (N - 1) * (N - 2),
                      Rational(4) * N * (N - 1), Rational(-6) * N, Rational(1)});
    default:
      return UniPoly({Rational(-8, 105) * N * (N - 1) * (N - 2),
                      Rational(4, 5) * N * (N - 1), Rational(-2) * N, Rational(1)});
  }
}

/// Depressed (quadratic-term-free) form of the degree-6/7 cubics:
///   q_{n,6}(t) = ptilde_{n,6}(2t + 2n) / 8,
///   q_{n,7}(t) = ptilde_{n,7}(t + 2n/3).
/// Computed from the closed coefficient formulas and verified against the
/// substitution.
inline UniPoly depressed_cubic(long n, long d) {
  if (d != 6 && d != 7)
    throw UnsupportedDegreeError("depressed_cubic: d must be 6 or 7, got " + std::to_string(d));
  if (n < 1) throw std::domain_error("depressed_cubic: n must be positive");
  const Rational N(n);
  UniPoly q;
  UniPoly substituted;
  if (d == 6) {
    q = UniPoly({Rational(-2, 15) * N * (2 * N + 1) * (4 * N + 1),
                 -N * (2 * N + 1), Rational(0), Rational(1)});
    substituted =
        closed_form_ptilde(n, 6).compose_linear(Rational(2), Rational(2) * N) / Rational(8);
  } else {
    q = UniPoly({Rational(-16, 945) * N * (2 * N + 3) * (4 * N + 3),
                 Rational(-4, 15) * N * (2 * N + 3), Rational(0), Rational(1)});
    substituted = closed_form_ptilde(n, 7).compose_linear(Rational(1), Rational(2, 3) * N);
  }
  if (q != substituted)
    throw std::logic_error("depressed_cubic: substitution check failed");
  return q;
}

/// The rational roots of ptilde_{n,d}; for d <= 7 their existence decides
/// reducibility over Q.
struct ReducibilityWitness {
  std::vector<Rational> roots;  // with multiplicity, ascending
  bool reducible = false;
};

inline ReducibilityWitness reducibility(long n, long d) {
  const ZonalPolynomial zp = construct(n, d);
  ReducibilityWitness w;
  w.roots = rational_roots(zp.ptilde());
  w.reducible = !w.roots.empty();
  return w;
}

/// All (n, d) with d in d_set and min_n(d) <= n <= n_max such that t - A
/// divides ptilde_{n,d} (equivalently s - A z^2 divides the homogeneous
/// factor). Sorted by d, then n.
inline std::vector<std::pair<long, long>> quadratic_divisor_search(
    const Rational& A, const std::set<long>& d_set, long n_max) {
  if (n_max < 2) throw std::domain_error("quadratic_divisor_search: n_max must be >= 2");
  std::vector<std::pair<long, long>> out;
  for (long d : d_set) {
    detail::require_degree(d);
    for (long n = min_n(d); n <= n_max; ++n)
      if (closed_form_ptilde(n, d).eval(A) == 0) out.emplace_back(n, d);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return std::tie(a.second, a.first) <
                                                      std::tie(b.second, b.first); });
  return out;
}

}  // namespace zonal

#endif  // ZONAL_ZONAL_POLY_HPP
