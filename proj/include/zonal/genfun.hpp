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

#ifndef ZONAL_GENFUN_HPP
#define ZONAL_GENFUN_HPP

#include <string>
#include <vector>

#include "zonal/families.hpp"
#include "zonal/ratfunc.hpp"

namespace zonal {

/// One catalogued generating function. `prefix` holds the leading sequence
/// values not covered by the series (functions for the triple-indexed series
/// generate from k = 1; the k = 0 value comes from the base triple).
struct GenFunEntry {
  std::string name;
  RationalFunc func;
  std::vector<Rational> prefix;
};

namespace detail {

inline UniPoly up(std::initializer_list<Rational> cs) { return UniPoly(cs); }

}  // namespace detail

/// Exact rational generating functions for every tabulated sequence of the
/// degree-4 and degree-5 families, plus the interleaved G_A, G_B.
inline std::vector<GenFunEntry> genfun_catalog() {
  using detail::up;
  const Rational z(0), o(1);
  const UniPoly den4 = up({o, Rational(-10), o});          // 1 - 10t + t^2
  const UniPoly omt = up({o, Rational(-1)});               // 1 - t
  const UniPoly den4f = omt * den4;
  const UniPoly den5 = up({o, Rational(-1442), o});        // 1 - 1442t + t^2
  const UniPoly den5f = omt * den5;

  std::vector<GenFunEntry> cat;
  cat.push_back({"G_u", RationalFunc(up({o, Rational(-5)}), den4), {}});
  cat.push_back({"G_v", RationalFunc(up({z, Rational(2)}), den4), {}});
  cat.push_back({"G_n", RationalFunc(up({z, o, o}), den4f), {}});
  cat.push_back({"G_a", RationalFunc(up({z, z, Rational(4)}), den4f), {}});

  cat.push_back({"G_n,-1",
                 RationalFunc(up({Rational(121), Rational(958), o}), den5f),
                 {Rational(1)}});
  cat.push_back({"G_n,0", RationalFunc(Rational(540) * up({o, o}), den5f), {Rational(0)}});
  // Numerator sign corrected against the index table: the k = 2 value forces
  // 2401 - 1322 t + t^2 (compare the +t / -t flip between G_{m,-1} and
  // G_{m,1}).
  cat.push_back({"G_n,1",
                 RationalFunc(up({Rational(2401), Rational(-1322), o}), den5f),
                 {Rational(1)}});
  cat.push_back({"G_m,-1", RationalFunc(up({Rational(77), o}), den5), {Rational(-1)}});
  cat.push_back({"G_m,0", RationalFunc(up({Rational(342)}), den5), {Rational(0)}});
  cat.push_back({"G_m,1", RationalFunc(up({Rational(1519), Rational(-1)}), den5),
                 {Rational(1)}});

  const RationalFunc ga_m1(Rational(4, 3) * up({Rational(22), Rational(517), o}), den5f);
  const RationalFunc ga_0(Rational(12) * up({Rational(11), Rational(49)}), den5f);
  const RationalFunc ga_1(Rational(12) * up({Rational(49), Rational(11)}), den5f);
  const RationalFunc gb_m1 = ga_0;
  const RationalFunc gb_0 = ga_1;
  const RationalFunc gb_1(Rational(4, 3) * up({Rational(1960), Rational(-1421), o}), den5f);
  cat.push_back({"G_A,-1", ga_m1, {Rational(4, 3)}});
  cat.push_back({"G_A,0", ga_0, {Rational(0)}});
  cat.push_back({"G_A,1", ga_1, {Rational(0)}});
  cat.push_back({"G_B,-1", gb_m1, {Rational(0)}});
  cat.push_back({"G_B,0", gb_0, {Rational(0)}});
  cat.push_back({"G_B,1", gb_1, {Rational(4, 3)}});

  // Interleavings over the eps-major order A_{1,-1}, A_{1,0}, A_{1,1},
  // A_{2,-1}, ...: G(t) = G_{-1}(t^3) + t G_0(t^3) + t^2 G_1(t^3).
  const UniPoly t = UniPoly::variable();
  const UniPoly t2 = t * t;
  cat.push_back(
      {"G_A", ga_m1.inflate(3) + t * ga_0.inflate(3) + t2 * ga_1.inflate(3), {}});
  cat.push_back(
      {"G_B", gb_m1.inflate(3) + t * gb_0.inflate(3) + t2 * gb_1.inflate(3), {}});
  return cat;
}

inline const GenFunEntry& genfun_lookup(const std::vector<GenFunEntry>& cat,
                                        const std::string& name) {
  for (const auto& e : cat)
    if (e.name == name) return e;
  throw std::domain_error("genfun: unknown name '" + name + "'");
}

/// The index-aligned sequence: prefix values followed by series coefficients.
inline std::vector<Rational> genfun_sequence(const GenFunEntry& e, long terms) {
  std::vector<Rational> out = e.prefix;
  if (static_cast<long>(out.size()) > terms) out.resize(static_cast<std::size_t>(terms));
  const long rest = terms - static_cast<long>(out.size());
  if (rest > 0)
    for (Rational& c : e.func.series(rest)) out.push_back(std::move(c));
  return out;
}

/// The same sequences generated from the orbit data instead of the closed
/// functions; the independent side of the catalog check.
inline std::vector<Rational> reference_sequence(const std::string& name, long terms) {
  std::vector<Rational> out;
  if (name == "G_u" || name == "G_v" || name == "G_n" || name == "G_a") {
    PellSolution cur(1, 0, 6, 1);
    const OrbitSpec spec = make_orbit_spec(6, 1);
    const Mat2 step = mat_pow(spec.M, 1);
    for (long k = 0; k < terms; ++k) {
      if (name == "G_u")
        out.emplace_back(cur.u);
      else if (name == "G_v")
        out.emplace_back(cur.v);
      else if (name == "G_n")
        out.push_back(make_rational(cur.u - 1, 4));
      else
        out.push_back(make_rational(cur.u - 2 * cur.v - 1, 2));
      cur = mat_apply(step, cur);
    }
    return out;
  }
  if (name == "G_A" || name == "G_B") {
    const long triples = (terms + 2) / 3;
    for (const R5Triple& t : enumerate_r5(std::max<long>(triples, 1)))
      for (const R5Entry& e : t) {
        if (static_cast<long>(out.size()) >= terms) break;
        out.push_back(name == "G_A" ? e.A : e.B);
      }
    return out;
  }
  const auto comma = name.find(',');
  if (comma == std::string::npos) throw std::domain_error("reference_sequence: " + name);
  const std::string base = name.substr(0, comma);
  const int eps = std::stoi(name.substr(comma + 1));
  const std::size_t idx = static_cast<std::size_t>(eps + 1);
  const std::vector<R5Triple> ts = terms > 1 ? enumerate_r5(terms - 1) : std::vector<R5Triple>{};
  for (long k = 0; k < terms; ++k) {
    R5Values v;
    if (k == 0) {
      v = r5_base_triple()[idx];
    } else {
      const R5Entry& e = ts[static_cast<std::size_t>(k - 1)][idx];
      v = R5Values{e.eps, e.u, e.v, e.n, e.m, e.A, e.B};
    }
    if (base == "G_n")
      out.emplace_back(v.n);
    else if (base == "G_m")
      out.emplace_back(v.m);
    else if (base == "G_A")
      out.push_back(v.A);
    else if (base == "G_B")
      out.push_back(v.B);
    else
      throw std::domain_error("reference_sequence: " + name);
  }
  return out;
}

/// Right-hand side of the interleaving identity:
/// 4/3 + 28 (1 + t^3) / (1 - 1442 t^3 + t^6).
inline RationalFunc interleaving_identity_rhs() {
  using detail::up;
  const Rational o(1);
  const UniPoly den = up({o, Rational(-1442), o}).inflate(3);
  return RationalFunc(Rational(4, 3)) +
         RationalFunc(Rational(28) * UniPoly({o, o}).inflate(3), den);
}

/// G_A - t G_B equals the closed gap form, as an exact identity of rational
/// functions.
inline bool check_interleaving_identity() {
  const auto cat = genfun_catalog();
  const RationalFunc ga = genfun_lookup(cat, "G_A").func;
  const RationalFunc gb = genfun_lookup(cat, "G_B").func;
  return rf_equal(ga - UniPoly::variable() * gb, interleaving_identity_rhs());
}

}  // namespace zonal

#endif  // ZONAL_GENFUN_HPP
