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

// Command-line surface of the zonal library. Every subcommand prints one
// output envelope (json) or a row table (csv, table); all numbers are exact
// decimal strings. Exit codes: 0 success, 1 verification failure, 2 usage
// error.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zonal/serialize.hpp"
#include "zonal/verify.hpp"

namespace {

using zonal::Check;
using zonal::Integer;
using zonal::Json;
using zonal::Rational;
using zonal::RowTable;

struct CommandOutput {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  RowTable table;
  std::vector<Check> verifications;
};

int emit(const CommandOutput& out, const std::string& format) {
  if (format == "json") {
    std::cout << zonal::make_envelope(out.command, out.parameters, out.results,
                                      out.verifications)
                     .dump(2)
              << "\n";
  } else if (format == "csv") {
    std::cout << zonal::render_csv(out.table);
  } else {
    std::cout << zonal::render_table(out.table);
  }
  bool ok = true;
  for (const auto& c : out.verifications) {
    if (!c.pass) {
      ok = false;
      std::cerr << "verification failed: " << c.name << " (" << c.detail << ")\n";
    }
  }
  return ok ? 0 : 1;
}

Integer parse_integer(const std::string& s) {
  try {
    return Integer(s);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("expected an integer, got '" + s + "'");
  }
}

// ---------------------------------------------------------------------------

CommandOutput run_construct(long n, long d) {
  CommandOutput out;
  out.command = "construct";
  out.parameters = {{"n", n}, {"d", d}};
  const zonal::ZonalPolynomial zp = zonal::construct(n, d);
  out.results = zonal::json_of(zp);
  out.verifications.push_back(
      {"harmonicity_reduced",
       zonal::laplacian_reduced(zp.p(), zp.spec().zeta_power).is_zero(),
       "reduced operator annihilates the factor"});
  out.verifications.push_back({"closed_form_agreement",
                               zp.ptilde() == zonal::closed_form_ptilde(n, d),
                               "solver output equals the closed coefficient formula"});
  // The trivariate cross-check expands zeta^k; run it whenever the expansion
  // stays small. The threshold depends only on the inputs, so output stays
  // deterministic per invocation.
  if (zonal::zonal_expansion_estimate_bytes(zp.spec().zeta_power, zp.p()) < 6.4e7) {
    out.verifications.push_back(
        {"harmonicity_full",
         zonal::laplacian_full(zonal::expand_zonal(zp.spec().zeta_power, zp.p())).is_zero(),
         "trivariate expansion is annihilated by the full Laplacian"});
  }
  out.table.columns = {"n", "d", "zeta_power", "ptilde", "p"};
  out.table.rows.push_back({std::to_string(n), std::to_string(d),
                            std::to_string(zp.spec().zeta_power), zp.ptilde().to_string(),
                            zp.p().to_string()});
  return out;
}

CommandOutput run_reducible(long n, long d) {
  CommandOutput out;
  out.command = "reducible";
  out.parameters = {{"n", n}, {"d", d}};
  const zonal::ZonalPolynomial zp = zonal::construct(n, d);
  const zonal::ReducibilityWitness w = zonal::reducibility(n, d);
  Json res = zonal::json_of(w);
  res["n"] = n;
  res["d"] = d;
  res["ptilde"] = zonal::json_of(zp.ptilde());
  out.results = std::move(res);
  bool roots_ok = true;
  for (const auto& r : w.roots) roots_ok = roots_ok && zp.ptilde().eval(r) == 0;
  out.verifications.push_back(
      {"roots_are_roots", roots_ok, "every reported root evaluates to zero"});
  if (d == 4 || d == 5) {
    const auto m = d == 4 ? zonal::square_test_d4(n) : zonal::square_test_d5(n);
    out.verifications.push_back({"square_test_agreement", m.has_value() == w.reducible,
                                 "Diophantine square test agrees with the root search"});
  }
  std::string roots;
  for (const auto& r : w.roots) roots += (roots.empty() ? "" : " ") + zonal::to_string(r);
  out.table.columns = {"n", "d", "reducible", "roots"};
  out.table.rows.push_back(
      {std::to_string(n), std::to_string(d), w.reducible ? "true" : "false", roots});
  return out;
}

CommandOutput run_enumerate_r4(long count) {
  CommandOutput out;
  out.command = "enumerate r4";
  out.parameters = {{"count", count}};
  const std::vector<zonal::R4Entry> entries = zonal::enumerate_r4(count);
  Json arr = Json::array();
  for (const auto& e : entries) arr.push_back(zonal::json_of(e));
  out.results = {{"entries", arr}};
  bool chain = true;
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    chain = chain && entries[i].a_k1 == entries[i + 1].a_k;
  out.verifications.push_back({"entries_validated", true,
                               std::to_string(entries.size()) +
                                   " entries revalidated on construction"});
  out.verifications.push_back(
      {"consecutive_common_factor", chain, "a_{k+1} of each entry equals a_k of the next"});
  out.table.columns = {"k", "u", "v", "n", "m", "a_k", "a_k1"};
  for (const auto& e : entries)
    out.table.rows.push_back({std::to_string(e.k), e.u.get_str(), e.v.get_str(),
                              e.n.get_str(), e.m.get_str(), e.a_k.get_str(),
                              e.a_k1.get_str()});
  return out;
}

CommandOutput run_enumerate_r5(long count) {
  CommandOutput out;
  out.command = "enumerate r5";
  out.parameters = {{"count", count}};
  const auto base = zonal::r5_base_triple();
  const std::vector<zonal::R5Triple> triples = zonal::enumerate_r5(count);
  Json t0 = Json::array();
  for (const auto& v : base) t0.push_back(zonal::json_of(v));
  Json arr = Json::array();
  for (const auto& t : triples) {
    Json jt = Json::array();
    for (const auto& e : t) jt.push_back(zonal::json_of(e));
    arr.push_back(Json{{"k", t[0].k}, {"entries", jt}});
  }
  out.results = {{"t0", t0}, {"triples", arr}};
  bool cross = true;
  for (const auto& t : triples) cross = cross && t[1].A == t[0].B && t[1].B == t[2].A;
  out.verifications.push_back({"entries_validated", true,
                               std::to_string(3 * triples.size()) +
                                   " entries revalidated on construction"});
  out.verifications.push_back(
      {"shared_factor_constants", cross, "A[k,0] = B[k,-1] and B[k,0] = A[k,1] per triple"});
  out.table.columns = {"k", "eps", "u", "v", "n", "m", "A", "B"};
  for (const auto& v : base)
    out.table.rows.push_back({"0", std::to_string(v.eps), v.u.get_str(), v.v.get_str(),
                              v.n.get_str(), v.m.get_str(), zonal::to_string(v.A),
                              zonal::to_string(v.B)});
  for (const auto& t : triples)
    for (const auto& e : t)
      out.table.rows.push_back({std::to_string(e.k), std::to_string(e.eps), e.u.get_str(),
                                e.v.get_str(), e.n.get_str(), e.m.get_str(),
                                zonal::to_string(e.A), zonal::to_string(e.B)});
  return out;
}

CommandOutput run_scan(long d, long from, long to, int jobs) {
  CommandOutput out;
  out.command = "scan";
  out.parameters = {{"d", d}, {"from", from}, {"to", to}, {"jobs", jobs}};
  const std::vector<zonal::ScanHit> hits =
      zonal::brute_scan(static_cast<int>(d), from, to, jobs);
  Json arr = Json::array();
  for (const auto& h : hits) arr.push_back(zonal::json_of(h));
  out.results = {{"hits", arr}, {"count", hits.size()}};
  if (d == 4 || d == 5) {
    // Cross-check against the orbit enumerator restricted to the range.
    std::vector<Integer> expected;
    long c = 1;
    if (d == 4) {
      while (zonal::enumerate_r4(c).back().n <= to) ++c;
      for (const auto& e : zonal::enumerate_r4(c))
        if (e.n >= from && e.n <= to) expected.push_back(e.n);
    } else {
      while (zonal::enumerate_r5(c).back()[0].n <= to) ++c;
      for (const auto& t : zonal::enumerate_r5(c))
        for (const auto& e : t)
          if (e.n >= from && e.n <= to) expected.push_back(e.n);
    }
    std::sort(expected.begin(), expected.end());
    bool agree = expected.size() == hits.size();
    for (std::size_t i = 0; agree && i < hits.size(); ++i) agree = hits[i].n == expected[i];
    out.verifications.push_back({"enumerator_agreement", agree,
                                 "scan hits equal the orbit enumerator on the range"});
  } else {
    bool filters = true;
    for (const auto& h : hits)
      if (!zonal::structural_filter(h.n, static_cast<int>(d)).pass) filters = false;
    out.verifications.push_back(
        {"hits_pass_structural_filter", filters,
         "every reducible index passes the necessary-condition filter"});
  }
  out.table.columns = {"n", "roots"};
  for (const auto& h : hits) {
    std::string roots;
    for (const auto& r : h.witness.roots)
      roots += (roots.empty() ? "" : " ") + zonal::to_string(r);
    out.table.rows.push_back({h.n.get_str(), roots});
  }
  return out;
}

CommandOutput run_pell_fundamental(const std::string& D) {
  CommandOutput out;
  out.command = "pell fundamental";
  out.parameters = {{"D", D}};
  const zonal::PellSolution f = zonal::fundamental_solution(parse_integer(D));
  out.results = zonal::json_of(f);
  out.verifications.push_back(
      {"solution_valid", f.u * f.u - f.D * f.v * f.v == 1, "u^2 - D v^2 = 1"});
  out.table.columns = {"D", "u", "v"};
  out.table.rows.push_back({f.D.get_str(), f.u.get_str(), f.v.get_str()});
  return out;
}

CommandOutput run_pell_orbit(const std::string& D, const std::string& N, const std::string& u,
                             const std::string& v, long power, long count) {
  CommandOutput out;
  out.command = "pell orbit";
  out.parameters = {{"D", D}, {"N", N}, {"u", u}, {"v", v}, {"power", power},
                    {"count", count}};
  const Integer Dz = parse_integer(D);
  const zonal::PellSolution start(parse_integer(u), parse_integer(v), Dz, parse_integer(N));
  const zonal::OrbitSpec spec = zonal::make_orbit_spec(Dz, power);
  const std::vector<zonal::PellSolution> orb = zonal::orbit(start, spec, count);
  Json arr = Json::array();
  for (const auto& s : orb) arr.push_back(zonal::json_of(s));
  Json m = Json::array();
  for (const auto& e : spec.M) m.push_back(e.get_str());
  out.results = {{"start", zonal::json_of(start)}, {"matrix", m}, {"orbit", arr}};
  out.verifications.push_back({"orbit_revalidated", true,
                               std::to_string(orb.size()) +
                                   " elements checked against u^2 - D v^2 = N"});
  out.table.columns = {"step", "u", "v"};
  for (std::size_t i = 0; i < orb.size(); ++i)
    out.table.rows.push_back(
        {std::to_string(i + 1), orb[i].u.get_str(), orb[i].v.get_str()});
  return out;
}

CommandOutput run_pell_representatives(const std::string& D, const std::string& N) {
  CommandOutput out;
  out.command = "pell representatives";
  out.parameters = {{"D", D}, {"N", N}};
  const Integer Dz = parse_integer(D);
  const std::vector<zonal::PellSolution> reps =
      zonal::representatives(Dz, parse_integer(N));
  Json arr = Json::array();
  for (const auto& s : reps) arr.push_back(zonal::json_of(s));
  out.results = {{"representatives", arr}};
  bool canonical = true;
  for (const auto& s : reps)
    canonical = canonical && zonal::canonical_representative(Dz, s) == s;
  out.verifications.push_back(
      {"representatives_canonical", canonical, "each element is its own orbit reduction"});
  out.table.columns = {"u", "v"};
  for (const auto& s : reps) out.table.rows.push_back({s.u.get_str(), s.v.get_str()});
  return out;
}

CommandOutput run_genfun_expand(const std::string& name, long terms) {
  CommandOutput out;
  out.command = "genfun expand";
  out.parameters = {{"name", name}, {"terms", terms}};
  const auto cat = zonal::genfun_catalog();
  const zonal::GenFunEntry& entry = zonal::genfun_lookup(cat, name);
  const std::vector<Rational> seq = zonal::genfun_sequence(entry, terms);
  out.results = {{"name", name},
                 {"func", zonal::json_of(entry.func)},
                 {"offset", entry.prefix.size()},
                 {"sequence", zonal::json_of(seq)}};
  out.verifications.push_back({"matches_orbit_data",
                               seq == zonal::reference_sequence(name, terms),
                               "series agrees with the orbit-generated sequence"});
  out.table.columns = {"k", "value"};
  for (std::size_t i = 0; i < seq.size(); ++i)
    out.table.rows.push_back({std::to_string(i), zonal::to_string(seq[i])});
  return out;
}

CommandOutput run_genfun_check_identity() {
  CommandOutput out;
  out.command = "genfun check-identity";
  const auto cat = zonal::genfun_catalog();
  const zonal::RationalFunc ga = zonal::genfun_lookup(cat, "G_A").func;
  const zonal::RationalFunc gb = zonal::genfun_lookup(cat, "G_B").func;
  const zonal::RationalFunc lhs = ga - zonal::UniPoly::variable() * gb;
  const zonal::RationalFunc rhs = zonal::interleaving_identity_rhs();
  const bool exact = zonal::rf_equal(lhs, rhs);
  const auto ls = lhs.series(12), rs = rhs.series(12);
  out.results = {{"lhs", zonal::json_of(lhs)},
                 {"rhs", zonal::json_of(rhs)},
                 {"series_lhs", zonal::json_of(ls)}};
  out.verifications.push_back(
      {"identity_exact", exact, "G_A - t G_B equals the closed gap form as rational functions"});
  out.verifications.push_back({"series_agreement", ls == rs, "first 12 coefficients agree"});
  out.table.columns = {"check", "pass"};
  out.table.rows.push_back({"identity_exact", exact ? "true" : "false"});
  out.table.rows.push_back({"series_agreement", ls == rs ? "true" : "false"});
  return out;
}

CommandOutput run_divisor(const std::string& a, const std::vector<long>& dset, long max_n) {
  CommandOutput out;
  out.command = "divisor";
  std::string ds;
  for (long d : dset) ds += (ds.empty() ? "" : ",") + std::to_string(d);
  out.parameters = {{"a", a}, {"d_set", ds}, {"max_n", max_n}};
  const Rational A = zonal::parse_rational(a);
  const std::set<long> dd(dset.begin(), dset.end());
  const auto hits = zonal::quadratic_divisor_search(A, dd, max_n);
  Json arr = Json::array();
  for (const auto& [n, d] : hits) arr.push_back(Json{{"n", n}, {"d", d}});
  out.results = {{"a", zonal::to_string(A)}, {"hits", arr}};
  bool verified = true;
  for (const auto& [n, d] : hits) {
    const zonal::ZonalPolynomial zp = zonal::construct(n, d);
    verified = verified && zp.ptilde().eval(A) == 0 &&
               zonal::poly_divides(zonal::BiPoly::from_ptilde(
                                       zonal::UniPoly({Rational(-A), Rational(1)}), 2),
                                   zp.p());
  }
  out.verifications.push_back({"divisibility_verified", verified,
                               "t - A divides ptilde and s - A z^2 divides the factor"});
  out.table.columns = {"n", "d"};
  for (const auto& [n, d] : hits)
    out.table.rows.push_back({std::to_string(n), std::to_string(d)});
  return out;
}

CommandOutput run_finiteness(long d, long scan_bound, long thue_bound, int jobs) {
  CommandOutput out;
  out.command = "finiteness";
  out.parameters = {{"d", d}, {"scan_bound", scan_bound}, {"thue_bound", thue_bound},
                    {"jobs", jobs}};
  const zonal::FinitenessReport rep =
      zonal::finiteness_report(static_cast<int>(d), scan_bound, thue_bound, jobs);
  out.results = zonal::json_of(rep);
  out.verifications = rep.checks;
  out.table.columns = {"K", "L", "u", "v", "n", "reducible", "below_min_n"};
  for (const auto& c : rep.candidates)
    out.table.rows.push_back({c.K.get_str(), c.L.get_str(), c.u.get_str(), c.v.get_str(),
                              c.n.get_str(), c.reducible ? "true" : "false",
                              c.below_min_n ? "true" : "false"});
  return out;
}

CommandOutput run_verify_tables() {
  CommandOutput out;
  out.command = "verify paper-tables";
  out.verifications = zonal::verify_reference_tables();
  Json arr = Json::array();
  for (const auto& c : out.verifications) arr.push_back(zonal::json_of(c));
  std::size_t passed = 0;
  for (const auto& c : out.verifications)
    if (c.pass) ++passed;
  out.results = {{"checks", arr},
                 {"passed", passed},
                 {"total", out.verifications.size()}};
  out.table.columns = {"check", "pass", "detail"};
  for (const auto& c : out.verifications)
    out.table.rows.push_back({c.name, c.pass ? "true" : "false", c.detail});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for rotation-invariant harmonic polynomial factors"};
  app.set_version_flag("--version", std::string("zonal ") + zonal::kVersion);
  app.require_subcommand(1);

  std::string format = "json";
  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->default_val("json");
  };

  long n = 0, d = 0, count = 1, from = 0, to = 0, terms = 10, max_n = 100;
  long power = 1, scan_bound = 1000, thue_bound = 1000;
  int jobs = 1;
  std::string Ds = "6", Ns = "1", us = "1", vs = "0", name = "G_u", a = "44";
  std::vector<long> dset;

  CLI::App* c_construct = app.add_subcommand("construct", "build one zonal factor");
  c_construct->add_option("--n", n)->required();
  c_construct->add_option("--d", d)->required();
  add_format(c_construct);

  CLI::App* c_reducible = app.add_subcommand("reducible", "decide rational reducibility");
  c_reducible->add_option("--n", n)->required();
  c_reducible->add_option("--d", d)->required();
  add_format(c_reducible);

  CLI::App* c_enum = app.add_subcommand("enumerate", "list the reducible families");
  c_enum->require_subcommand(1);
  CLI::App* c_r4 = c_enum->add_subcommand("r4", "degree-4 family");
  c_r4->add_option("--count", count)->required();
  add_format(c_r4);
  CLI::App* c_r5 = c_enum->add_subcommand("r5", "degree-5 family");
  c_r5->add_option("--count", count)->required();
  add_format(c_r5);

  CLI::App* c_scan = app.add_subcommand("scan", "exhaustive reducibility scan");
  c_scan->add_option("--d", d)->required();
  c_scan->add_option("--from", from)->required();
  c_scan->add_option("--to", to)->required();
  c_scan->add_option("--jobs", jobs);
  add_format(c_scan);

  CLI::App* c_pell = app.add_subcommand("pell", "Pell equation machinery");
  c_pell->require_subcommand(1);
  CLI::App* c_fund = c_pell->add_subcommand("fundamental", "fundamental solution");
  c_fund->add_option("--D", Ds)->required();
  add_format(c_fund);
  CLI::App* c_orbit = c_pell->add_subcommand("orbit", "orbit of a solution");
  c_orbit->add_option("--D", Ds)->required();
  c_orbit->add_option("--N", Ns)->required();
  c_orbit->add_option("--u", us)->required();
  c_orbit->add_option("--v", vs)->required();
  c_orbit->add_option("--power", power);
  c_orbit->add_option("--count", count)->required();
  add_format(c_orbit);
  CLI::App* c_reps = c_pell->add_subcommand("representatives", "orbit representatives");
  c_reps->add_option("--D", Ds)->required();
  c_reps->add_option("--N", Ns)->required();
  add_format(c_reps);

  CLI::App* c_genfun = app.add_subcommand("genfun", "generating function catalog");
  c_genfun->require_subcommand(1);
  CLI::App* c_expand = c_genfun->add_subcommand("expand", "expand a catalog entry");
  c_expand->add_option("--name", name)->required();
  c_expand->add_option("--terms", terms)->required();
  add_format(c_expand);
  CLI::App* c_ident = c_genfun->add_subcommand("check-identity", "interleaving identity");
  add_format(c_ident);

  CLI::App* c_div = app.add_subcommand("divisor", "search for a shared quadratic divisor");
  c_div->add_option("--a", a, "root as NUM or NUM/DEN")->required();
  c_div->add_option("--d-set", dset, "degrees to search")->required()->delimiter(',');
  c_div->add_option("--max-n", max_n)->required();
  add_format(c_div);

  CLI::App* c_fin = app.add_subcommand("finiteness", "degree 6/7 finiteness machinery");
  c_fin->add_option("--d", d)->required()->check(CLI::IsMember({6, 7}));
  c_fin->add_option("--scan-bound", scan_bound)->required();
  c_fin->add_option("--thue-bound", thue_bound)->required();
  c_fin->add_option("--jobs", jobs);
  add_format(c_fin);

  CLI::App* c_verify = app.add_subcommand("verify", "verification batteries");
  c_verify->require_subcommand(1);
  CLI::App* c_tables = c_verify->add_subcommand("paper-tables", "replay every tabulated value");
  add_format(c_tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CommandOutput out;
    if (*c_construct) {
      out = run_construct(n, d);
    } else if (*c_reducible) {
      out = run_reducible(n, d);
    } else if (*c_r4) {
      out = run_enumerate_r4(count);
    } else if (*c_r5) {
      out = run_enumerate_r5(count);
    } else if (*c_scan) {
      out = run_scan(d, from, to, jobs);
    } else if (*c_fund) {
      out = run_pell_fundamental(Ds);
    } else if (*c_orbit) {
      out = run_pell_orbit(Ds, Ns, us, vs, power, count);
    } else if (*c_reps) {
      out = run_pell_representatives(Ds, Ns);
    } else if (*c_expand) {
      out = run_genfun_expand(name, terms);
    } else if (*c_ident) {
      out = run_genfun_check_identity();
    } else if (*c_div) {
      out = run_divisor(a, dset, max_n);
    } else if (*c_fin) {
      out = run_finiteness(d, scan_bound, thue_bound, jobs);
    } else if (*c_tables) {
      out = run_verify_tables();
    } else {
      std::cerr << "unknown subcommand\n";
      return 2;
    }
    return emit(out, format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
