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

#ifndef ZONAL_PELL_HPP
#define ZONAL_PELL_HPP

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "zonal/rational.hpp"

namespace zonal {

/// Integer solution of u^2 - D v^2 = N; validated on construction and after
/// every orbit step.
struct PellSolution {
  Integer u, v;
  Integer D;
  Integer N;

  PellSolution(Integer u_, Integer v_, Integer D_, Integer N_)
      : u(std::move(u_)), v(std::move(v_)), D(std::move(D_)), N(std::move(N_)) {
    validate();
  }

  void validate() const {
    if (u * u - D * v * v != N)
      throw std::domain_error("PellSolution: (" + u.get_str() + ", " + v.get_str() +
                              ") does not solve u^2 - " + D.get_str() + " v^2 = " +
                              N.get_str());
  }

  friend bool operator==(const PellSolution& a, const PellSolution& b) {
    return a.u == b.u && a.v == b.v && a.D == b.D && a.N == b.N;
  }
};

/// 2x2 integer matrix in row-major order.
using Mat2 = std::array<Integer, 4>;

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 mat_pow(const Mat2& m, long e) {
  if (e < 0) throw std::domain_error("mat_pow: negative exponent");
  Mat2 r{1, 0, 0, 1};
  Mat2 base = m;
  while (e > 0) {
    if (e & 1) r = mat_mul(r, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return r;
}

inline PellSolution mat_apply(const Mat2& m, const PellSolution& s) {
  return PellSolution(m[0] * s.u + m[1] * s.v, m[2] * s.u + m[3] * s.v, s.D, s.N);
}

/// Minimal positive solution of u^2 - D v^2 = 1, found on the continued
/// fraction convergents of sqrt(D). Throws when D is a perfect square (no
/// nontrivial solution exists).
inline PellSolution fundamental_solution(const Integer& D) {
  if (D <= 0) throw std::domain_error("fundamental_solution: D must be positive");
  const Integer a0 = isqrt(D);
  if (a0 * a0 == D)
    throw std::domain_error("fundamental_solution: D = " + D.get_str() +
                            " is a perfect square; no nontrivial solution");
  // Continued fraction of sqrt(D): a_{k} from the (m, den) recursion, and
  // convergents h_k / q_k tested directly against the equation.
  Integer m = 0, den = 1, a = a0;
  Integer h_prev = 1, h = a0, q_prev = 0, q = 1;
  while (true) {
    if (h * h - D * q * q == 1) return PellSolution(h, q, D, 1);
    m = den * a - m;
    den = (D - m * m) / den;
    a = (a0 + m) / den;
    Integer h_next = a * h + h_prev;
    Integer q_next = a * q + q_prev;
    h_prev = h;
    h = h_next;
    q_prev = q;
    q = q_next;
  }
}

/// Automorphism of the form u^2 - D v^2 built from the fundamental solution;
/// applying it walks solutions along their orbit. Step used by orbit() is
/// M^power.
struct OrbitSpec {
  Integer D;
  Mat2 M;      // [[u1, D v1], [v1, u1]], det 1
  long power;  // step = M^power
};

inline OrbitSpec make_orbit_spec(const Integer& D, long power = 1) {
  if (power < 1) throw std::domain_error("make_orbit_spec: power must be positive");
  const PellSolution f = fundamental_solution(D);
  return OrbitSpec{D, Mat2{f.u, D * f.v, f.v, f.u}, power};
}

/// [M^p s, M^{2p} s, ...] with p = spec.power; `count` terms, each term
/// revalidated against the defining equation.
inline std::vector<PellSolution> orbit(const PellSolution& start, const OrbitSpec& spec,
                                       long count) {
  if (start.D != spec.D)
    throw std::domain_error("orbit: solution and spec disagree on D");
  if (count < 0) throw std::domain_error("orbit: negative count");
  const Mat2 step = mat_pow(spec.M, spec.power);
  std::vector<PellSolution> out;
  out.reserve(static_cast<std::size_t>(count));
  PellSolution cur = start;
  for (long i = 0; i < count; ++i) {
    cur = mat_apply(step, cur);
    cur.validate();
    out.push_back(cur);
  }
  return out;
}

/// Reduces a solution to the canonical point of its orbit: minimal u, ties
/// broken toward minimal v. Walking with M / M^{-1} strictly lowers u until
/// the bottom of the hyperbola branch is reached.
inline PellSolution canonical_representative(const Integer& D, PellSolution s) {
  const PellSolution f = fundamental_solution(D);
  const Mat2 fwd{f.u, D * f.v, f.v, f.u};
  const Mat2 bwd{f.u, -(D * f.v), -f.v, f.u};
  while (true) {
    PellSolution a = mat_apply(fwd, s);
    PellSolution b = mat_apply(bwd, s);
    const PellSolution& best = (a.u < b.u || (a.u == b.u && a.v < b.v)) ? a : b;
    if (best.u < s.u || (best.u == s.u && best.v < s.v))
      s = best;
    else
      return s;
  }
}

/// Orbit representatives of {u > 0 : u^2 - D v^2 = N}, N > 0: scans one
/// fundamental-domain arc (|v| <= v1 (ceil(sqrt(N)) + 1) conservatively
/// over-covers it), reduces every hit to its canonical representative and
/// deduplicates. Sorted by v, then u.
inline std::vector<PellSolution> representatives(const Integer& D, const Integer& N) {
  if (N <= 0) throw std::domain_error("representatives: N must be positive");
  const PellSolution f = fundamental_solution(D);  // also rejects square D
  Integer root = isqrt(N);
  if (root * root < N) root += 1;
  const Integer vbound = f.v * (root + 1);
  std::vector<PellSolution> reps;
  for (Integer v = -vbound; v <= vbound; ++v) {
    const Integer uu = N + D * v * v;
    if (!is_square(uu)) continue;
    const PellSolution canon = canonical_representative(D, PellSolution(isqrt(uu), v, D, N));
    if (std::find(reps.begin(), reps.end(), canon) == reps.end()) reps.push_back(canon);
  }
  std::sort(reps.begin(), reps.end(), [](const PellSolution& a, const PellSolution& b) {
    if (a.v != b.v) return a.v < b.v;
    return a.u < b.u;
  });
  return reps;
}

/// One step of the two-term recurrence X_{k+1} = c X_k - X_{k-1} shared by
/// every coordinate sequence of a Pell orbit (c = trace of the step matrix).
inline Rational linear_recurrence_step(const Rational& x_k, const Rational& x_km1,
                                       const Integer& c) {
  return Rational(c) * x_k - x_km1;
}

}  // namespace zonal

#endif  // ZONAL_PELL_HPP
