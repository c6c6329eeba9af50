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

#ifndef ZONAL_SERIALIZE_HPP
#define ZONAL_SERIALIZE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "zonal/check.hpp"
#include "zonal/families.hpp"
#include "zonal/finiteness.hpp"
#include "zonal/genfun.hpp"

namespace zonal {

inline constexpr const char kVersion[] = "1.0.0";

/// Insertion-ordered JSON keeps envelopes byte-deterministic. Every number is
/// serialized as an exact decimal integer or "num/den" string; floating point
/// never appears in a payload.
using Json = nlohmann::ordered_json;

inline Json json_of(const Integer& n) { return n.get_str(); }
inline Json json_of(const Rational& r) { return to_string(r); }

inline Json json_of(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(json_of(r));
  return a;
}

inline Json json_of(const UniPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return Json{{"coefficients", coeffs}, {"display", p.to_string()}};
}

inline Json json_of(const BiPoly& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms())
    terms.push_back(Json{{"s", k.first}, {"z", k.second}, {"coeff", to_string(c)}});
  return Json{{"terms", terms}, {"display", p.to_string()}};
}

inline Json json_of(const RationalFunc& f) {
  return Json{{"num", json_of(f.num())}, {"den", json_of(f.den())},
              {"display", f.to_string()}};
}

inline Json json_of(const Check& c) {
  return Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

inline Json json_of(const std::vector<Check>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(json_of(c));
  return a;
}

inline Json json_of(const PellSolution& s) {
  return Json{{"u", json_of(s.u)}, {"v", json_of(s.v)}, {"D", json_of(s.D)},
              {"N", json_of(s.N)}};
}

inline Json json_of(const ZonalPolynomial& zp) {
  return Json{{"n", zp.spec().n},
              {"d", zp.spec().d},
              {"zeta_power", zp.spec().zeta_power},
              {"ptilde", json_of(zp.ptilde())},
              {"p", json_of(zp.p())}};
}

inline Json json_of(const ReducibilityWitness& w) {
  return Json{{"reducible", w.reducible}, {"roots", json_of(w.roots)}};
}

inline Json json_of(const R4Entry& e) {
  return Json{{"k", e.k},          {"u", json_of(e.u)},
              {"v", json_of(e.v)}, {"n", json_of(e.n)},
              {"m", json_of(e.m)}, {"a_k", json_of(e.a_k)},
              {"a_k1", json_of(e.a_k1)}, {"alpha_k", json_of(e.alpha_k)},
              {"alpha_k1", json_of(e.alpha_k1)}};
}

inline Json json_of(const R5Entry& e) {
  return Json{{"k", e.k},          {"eps", e.eps},      {"u", json_of(e.u)},
              {"v", json_of(e.v)}, {"n", json_of(e.n)}, {"m", json_of(e.m)},
              {"A", json_of(e.A)}, {"B", json_of(e.B)}};
}

inline Json json_of(const R5Values& e) {
  return Json{{"eps", e.eps},      {"u", json_of(e.u)}, {"v", json_of(e.v)},
              {"n", json_of(e.n)}, {"m", json_of(e.m)}, {"A", json_of(e.A)},
              {"B", json_of(e.B)}};
}

inline Json json_of(const ScanHit& h) {
  return Json{{"n", json_of(h.n)}, {"reducible", h.witness.reducible},
              {"roots", json_of(h.witness.roots)}};
}

inline Json json_of(const ThueInstance& t) {
  Json sols = Json::array();
  for (const auto& [u, v] : t.solutions)
    sols.push_back(Json{{"u", json_of(u)}, {"v", json_of(v)}});
  return Json{{"K", json_of(t.K)}, {"L", json_of(t.L)}, {"rhs", t.rhs},
              {"bound", json_of(t.bound)}, {"solutions", sols}};
}

inline Json json_of(const ThueCandidate& c) {
  Json j{{"K", json_of(c.K)},   {"L", json_of(c.L)},   {"u", json_of(c.u)},
         {"v", json_of(c.v)},   {"rhs", c.rhs},        {"n", json_of(c.n)},
         {"consistency", c.consistency}, {"below_min_n", c.below_min_n},
         {"reducible", c.reducible},     {"ptilde_roots", json_of(c.ptilde_roots)}};
  if (c.approx)
    j["approximation_inequality"] =
        Json{{"lower", c.approx->lower}, {"upper", c.approx->upper}};
  return j;
}

inline Json json_of(const FilterCertificate& c) {
  Json factors = Json::array();
  for (const auto& [p, e] : c.factors)
    factors.push_back(Json{{"prime", json_of(p)}, {"exponent", e}});
  Json j{{"pass", c.pass}, {"product", json_of(c.product)}, {"factors", factors}};
  if (c.offender)
    j["offender"] = Json{{"prime", json_of(c.offender->first)},
                         {"exponent", c.offender->second}};
  return j;
}

inline Json json_of(const FinitenessReport& r) {
  Json members = Json::array();
  for (const auto& h : r.scan_members) members.push_back(json_of(h));
  Json insts = Json::array();
  for (const auto& t : r.nonempty_instances) insts.push_back(json_of(t));
  Json cands = Json::array();
  for (const auto& c : r.candidates) cands.push_back(json_of(c));
  Json viol = Json::array();
  for (const auto& n : r.soundness_violations) viol.push_back(json_of(n));
  return Json{{"d", r.d},
              {"scan_bound", r.scan_bound},
              {"thue_bound", json_of(r.thue_bound)},
              {"grid_pairs", r.grid_pairs},
              {"scan_members", members},
              {"filter_range", Json{{"lo", r.filter_lo}, {"hi", r.filter_hi}}},
              {"filter_fail_count", r.filter_fail_count},
              {"soundness_violations", viol},
              {"nonempty_instances", insts},
              {"candidates", cands},
              {"degenerate_n1_recovered", r.degenerate_n1_recovered},
              {"checks", json_of(r.checks)},
              {"pass", r.pass}};
}

/// Payload rows for the csv and table output formats.
struct RowTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string render_csv(const RowTable& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(t.columns[i]);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(row[i]);
    }
    out += '\n';
  }
  return out;
}

inline std::string render_table(const RowTable& t) {
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += "  ";
      out += row[i];
      if (i + 1 < row.size()) out.append(width[i] - row[i].size(), ' ');
    }
    out += '\n';
  };
  emit(t.columns);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.push_back(std::string(w, '-'));
  emit(rule);
  for (const auto& row : t.rows) emit(row);
  return out;
}

/// The uniform CLI output envelope.
inline Json make_envelope(const std::string& command, Json parameters, Json results,
                          const std::vector<Check>& verifications) {
  return Json{{"command", command},
              {"parameters", std::move(parameters)},
              {"results", std::move(results)},
              {"verifications", json_of(verifications)},
              {"version", kVersion}};
}

}  // namespace zonal

#endif  // ZONAL_SERIALIZE_HPP
