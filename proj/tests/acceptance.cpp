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

// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance here is exact (the library never rounds);
// the runtime bounds are asserted in wall-clock seconds.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zonal/serialize.hpp"
#include "zonal/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using zonal::Integer;
using zonal::Json;
using zonal::Rational;

std::string g_cli;
int g_failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const std::string& name, bool pass, double elapsed,
            const std::string& note = "") {
  std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), elapsed, note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult res;
  const std::string cmd = g_cli + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

// ---------------------------------------------------------------------------
// 1. degree-4 table reproduction through the CLI, byte-identical values

void criterion_1() {
  const auto start = Clock::now();
  const CliResult r = run_cli("enumerate r4 --count 6 --format json");
  bool ok = r.exit_code == 0;
  std::string note;
  static const char* expected[6][5] = {
      {"49", "20", "12", "10", "4"},
      {"485", "198", "121", "99", "44"},
      {"4801", "1960", "1200", "980", "440"},
      {"47525", "19402", "11881", "9701", "4360"},
      {"470449", "192060", "117612", "96030", "43164"},
      {"4656965", "1901198", "1164241", "950599", "427284"}};
  try {
    const Json env = Json::parse(r.out);
    const Json& entries = env.at("results").at("entries");
    ok = ok && entries.size() == 6;
    for (std::size_t i = 0; ok && i < 6; ++i) {
      const Json& e = entries.at(i);
      ok = e.at("u") == expected[i][0] && e.at("v") == expected[i][1] &&
           e.at("n") == expected[i][2] && e.at("m") == expected[i][3] &&
           e.at("a_k") == expected[i][4];
      if (!ok) note = "value mismatch in column k=" + std::to_string(i + 2);
    }
  } catch (const std::exception& e) {
    ok = false;
    note = e.what();
  }
  const CliResult table = run_cli("enumerate r4 --count 6 --format table");
  ok = ok && table.exit_code == 0 && table.out.find("4656965") != std::string::npos;
  const double elapsed = seconds_since(start);
  report(1, "degree-4 table, 30 byte-identical values via the CLI",
         ok && elapsed < 1.0, elapsed, note);
}

// ---------------------------------------------------------------------------
// 2. degree-5 tables: 12 index values, base and first triples, factor pairs

void criterion_2() {
  const auto start = Clock::now();
  const CliResult r = run_cli("enumerate r5 --count 4 --format json");
  bool ok = r.exit_code == 0;
  std::string note;
  static const char* n_table[3][4] = {
      {"121", "175561", "253159921", "365056431601"},
      {"540", "779760", "1124414460", "1621404872640"},
      {"2401", "3463321", "4994107561", "7201499640721"}};
  try {
    const Json env = Json::parse(r.out);
    const Json& t0 = env.at("results").at("t0");
    ok = ok && t0.size() == 3 && t0.at(0).at("u") == "7" && t0.at(0).at("v") == "-2" &&
         t0.at(1).at("u") == "3" && t0.at(1).at("v") == "0" && t0.at(2).at("u") == "7" &&
         t0.at(2).at("v") == "2";
    if (!ok) note = "base triple mismatch";
    const Json& triples = env.at("results").at("triples");
    ok = ok && triples.size() == 4;
    for (std::size_t k = 0; ok && k < 4; ++k)
      for (std::size_t e = 0; ok && e < 3; ++e) {
        const Json& entry = triples.at(k).at("entries").at(e);
        ok = entry.at("n") == n_table[e][k];
        if (!ok) note = "index table mismatch at k=" + std::to_string(k + 1);
      }
    if (ok) {
      const Json& t1 = triples.at(0).at("entries");
      ok = t1.at(0).at("u") == "487" && t1.at(0).at("v") == "154" &&
           t1.at(1).at("u") == "2163" && t1.at(1).at("v") == "684" &&
           t1.at(2).at("u") == "9607" && t1.at(2).at("v") == "3038" &&
           t1.at(0).at("m") == "77" && t1.at(1).at("m") == "342" &&
           t1.at(2).at("m") == "1519" && t1.at(0).at("A") == "88/3" &&
           t1.at(0).at("B") == "132" && t1.at(1).at("A") == "132" &&
           t1.at(1).at("B") == "588" && t1.at(2).at("A") == "588" &&
           t1.at(2).at("B") == "7840/3";
      if (!ok) note = "first-triple data mismatch";
    }
  } catch (const std::exception& e) {
    ok = false;
    note = e.what();
  }
  const double elapsed = seconds_since(start);
  report(2, "degree-5 tables with exact factor constants via the CLI",
         ok && elapsed < 1.0, elapsed, note);
}

// ---------------------------------------------------------------------------
// 3. harmonicity certificates by BOTH operators for the listed entries

void criterion_3() {
  const auto start = Clock::now();
  // Expansions whose estimated size exceeds the budget cannot run in this
  // environment; they are reported as failures with the estimate, never
  // silently skipped.
  const double memory_budget_bytes = 1.5e9;
  bool ok = true;
  std::string note;
  std::vector<std::pair<long, long>> jobs;  // (n, d)
  for (const auto& e : zonal::enumerate_r4(4)) jobs.emplace_back(e.n.get_si(), 4);
  for (const auto& t : zonal::enumerate_r5(2))
    for (const auto& e : t) jobs.emplace_back(e.n.get_si(), 5);
  int certified = 0;
  for (const auto& [n, d] : jobs) {
    const zonal::ZonalPolynomial zp = zonal::construct(n, d);
    const bool reduced_ok =
        zonal::laplacian_reduced(zp.p(), zp.spec().zeta_power).is_zero();
    bool full_ok = false;
    const double estimate =
        zonal::zonal_expansion_estimate_bytes(zp.spec().zeta_power, zp.p());
    if (estimate <= memory_budget_bytes) {
      full_ok = zonal::laplacian_full(zonal::expand_zonal(zp.spec().zeta_power, zp.p()))
                    .is_zero();
    } else {
      std::ostringstream os;
      os << "full-oracle expansion for (n=" << n << ", d=" << d << ") needs ~"
         << static_cast<long long>(estimate / 1e9) << " GB, over the "
         << memory_budget_bytes / 1e9 << " GB budget";
      note = note.empty() ? os.str() : note + "; " + os.str();
    }
    if (reduced_ok && full_ok) ++certified;
    else ok = false;
  }
  const double elapsed = seconds_since(start);
  std::printf("    %d of %zu entries certified by both operators; the reduced operator "
              "certifies all %zu\n", certified, jobs.size(), jobs.size());
  report(3, "harmonicity certificates by both operators (r4 k<=5, r5 k<=2)",
         ok && elapsed < 30.0, elapsed, note);
}

// ---------------------------------------------------------------------------
// 4. theorem <-> exhaustive scan agreement

void criterion_4() {
  const auto start = Clock::now();
  const auto s4 = zonal::brute_scan(4, 2, 20000);
  bool ok = s4.size() == 4 && s4[0].n == 12 && s4[1].n == 121 && s4[2].n == 1200 &&
            s4[3].n == 11881;
  const auto s5 = zonal::brute_scan(5, 2, 3000);
  ok = ok && s5.size() == 3 && s5[0].n == 121 && s5[1].n == 540 && s5[2].n == 2401;
  // the enumerators give exactly the same index sets on these ranges
  std::vector<Integer> e4;
  for (const auto& e : zonal::enumerate_r4(6))
    if (e.n <= 20000) e4.push_back(e.n);
  ok = ok && e4.size() == 4;
  for (std::size_t i = 0; ok && i < 4; ++i) ok = e4[i] == s4[i].n;
  std::vector<Integer> e5;
  for (const auto& t : zonal::enumerate_r5(2))
    for (const auto& e : t)
      if (e.n <= 3000) e5.push_back(e.n);
  std::sort(e5.begin(), e5.end());
  ok = ok && e5.size() == 3;
  for (std::size_t i = 0; ok && i < 3; ++i) ok = e5[i] == s5[i].n;
  const double elapsed = seconds_since(start);
  report(4, "scan(4, <=20000) = {12, 121, 1200, 11881}; scan(5, <=3000) = {121, 540, 2401}",
         ok && elapsed < 10.0, elapsed);
}

// ---------------------------------------------------------------------------
// 5. construction solver equals the closed forms across the whole range

void criterion_5() {
  const auto start = Clock::now();
  long checked = 0;
  bool ok = true;
  for (long d = 2; d <= 7; ++d)
    for (long n = zonal::min_n(d); n <= 60; ++n) {
      ok = ok && zonal::construct(n, d).ptilde() == zonal::closed_form_ptilde(n, d);
      ++checked;
    }
  ok = ok && checked >= 300;
  const double elapsed = seconds_since(start);
  report(5, "construct == closed form for " + std::to_string(checked) + " (n, d) pairs", ok,
         elapsed);
}

// ---------------------------------------------------------------------------
// 6. generating function suite

void criterion_6() {
  const auto start = Clock::now();
  const auto cat = zonal::genfun_catalog();
  bool ok = cat.size() == 18;
  std::string note;
  for (const auto& entry : cat) {
    if (zonal::genfun_sequence(entry, 10) != zonal::reference_sequence(entry.name, 10)) {
      ok = false;
      note += " " + entry.name;
    }
  }
  ok = ok && zonal::check_interleaving_identity();
  const double elapsed = seconds_since(start);
  report(6, "18 catalog series match for 10 terms; G_A - t G_B identity exact",
         ok && elapsed < 1.0, elapsed, note);
}

// ---------------------------------------------------------------------------
// 7. the four-distinct-constants theorem through k = 10

void criterion_7() {
  const auto start = Clock::now();
  const zonal::FourABReport rep = zonal::verify_fourAB(10);
  std::string note;
  for (const auto& c : rep.checks)
    if (!c.pass) note += " " + c.name;
  report(7, "A/B equalities, integrality split, affine recurrences (k <= 10)", rep.pass,
         seconds_since(start), note);
}

// ---------------------------------------------------------------------------
// 8. finiteness machinery for d = 6 and d = 7

void criterion_8() {
  const auto start = Clock::now();
  bool ok = true;
  std::string note;
  for (int d : {6, 7}) {
    const zonal::FinitenessReport rep = zonal::finiteness_report(d, 10000, 1000, 2);
    for (const auto& c : rep.checks) {
      if (!c.pass) {
        ok = false;
        note += " " + c.name;
      }
    }
    // the degenerate index must come from the documented instance
    bool degenerate_from_documented = false;
    for (const auto& cand : rep.candidates)
      if (cand.n == 1 && cand.K == 1 && cand.L == (d == 6 ? 3 : 5) && cand.u == 1 &&
          cand.v == 1 && cand.reducible)
        degenerate_from_documented = true;
    if (!degenerate_from_documented) {
      ok = false;
      note += " degenerate_candidate_missing_d" + std::to_string(d);
    }
  }
  const double elapsed = seconds_since(start);
  report(8, "finiteness reports d=6,7: filter soundness on [3, 10^4], Thue search, inequalities",
         ok && elapsed < 300.0, elapsed, note);
}

// ---------------------------------------------------------------------------
// 9. shared quadratic divisors, with the documented index discrepancy

void criterion_9() {
  const auto start = Clock::now();
  const auto has = [](const std::vector<std::pair<long, long>>& v, long n, long d) {
    for (const auto& [nn, dd] : v)
      if (nn == n && dd == d) return true;
    return false;
  };
  const auto h44 = zonal::quadratic_divisor_search(44, {2, 3, 4}, 300);
  bool ok = has(h44, 22, 2) && has(h44, 66, 3);
  const auto h132 = zonal::quadratic_divisor_search(132, {2, 3, 5}, 600);
  ok = ok && has(h132, 66, 2) && has(h132, 198, 3) && has(h132, 540, 5);
  // oracle-corrected indices recorded next to the published ones
  const auto h44d4 = zonal::quadratic_divisor_search(44, {4}, 300);
  ok = ok && h44d4.size() == 2 && has(h44d4, 12, 4) && has(h44d4, 121, 4) &&
       !has(h44d4, 10, 4) && !has(h44d4, 99, 4);
  const auto h132d5 = zonal::quadratic_divisor_search(132, {5}, 600);
  ok = ok && h132d5.size() == 2 && has(h132d5, 121, 5) && has(h132d5, 540, 5) &&
       !has(h132d5, 77, 5);
  std::printf("    documented discrepancy: published d=4 indices for A=44 are 10, 99 "
              "(m-column values); exact search gives 12, 121\n");
  std::printf("    documented discrepancy: published d=5 index for A=132 is 77 "
              "(an m-column value); exact search gives 121 (and confirms 540)\n");
  report(9, "s - 44 z^2 and s - 132 z^2 divisor checks with corrected indices", ok,
         seconds_since(start));
}

// ---------------------------------------------------------------------------
// 10. property suites

void criterion_10() {
  const auto start = Clock::now();
  bool ok = true;
  std::string note;
  std::mt19937_64 rng(99);

  // valuation additivity
  const Integer primes[] = {2, 3, 5, 7, 13};
  for (int i = 0; i < 500 && ok; ++i) {
    const Rational a = zonal::make_rational(static_cast<long>(rng() % 100000) + 1,
                                            static_cast<long>(rng() % 3000) + 1);
    const Rational b = zonal::make_rational(static_cast<long>(rng() % 100000) + 1,
                                            static_cast<long>(rng() % 3000) + 1);
    const Integer& p = primes[rng() % 5];
    if (zonal::valuation(p, Rational(a * b)) !=
        zonal::valuation(p, a) + zonal::valuation(p, b)) {
      ok = false;
      note += " valuation_additivity";
    }
  }

  // cube split round trip
  for (int i = 0; i < 500 && ok; ++i) {
    const Integer m(static_cast<unsigned long>(rng() % 10000000 + 1));
    const auto r = zonal::cube_split(m, zonal::allowed_primes(6));
    if (!r.ok()) continue;
    if (r.split->K * r.split->u * r.split->u * r.split->u != m) {
      ok = false;
      note += " cube_split_roundtrip";
    }
    for (const auto& [p, e] : zonal::factorize(r.split->K))
      if (e >= 3) {
        ok = false;
        note += " cube_split_cubefree";
      }
  }

  // orbit revalidation
  try {
    const zonal::OrbitSpec spec = zonal::make_orbit_spec(10, 2);
    for (const auto& s : zonal::orbit(zonal::PellSolution(9607, 3038, 10, 9), spec, 10))
      if (s.u * s.u - 10 * s.v * s.v != 9) ok = false;
  } catch (const std::exception&) {
    ok = false;
    note += " orbit_revalidation";
  }

  // desk-scale orbit cover of the degree-5 solution set
  const zonal::Check cover = zonal::orbit_cover_check(1000000);
  if (!cover.pass) {
    ok = false;
    note += " " + cover.name;
  }

  // CLI payloads are independent of --jobs (the parameter echo differs, the
  // results and verifications must not)
  const CliResult j1 = run_cli("scan --d 4 --from 2 --to 4000 --jobs 1 --format json");
  const CliResult j3 = run_cli("scan --d 4 --from 2 --to 4000 --jobs 3 --format json");
  try {
    const Json e1 = Json::parse(j1.out), e3 = Json::parse(j3.out);
    if (j1.exit_code != 0 || j3.exit_code != 0 || e1.at("results") != e3.at("results") ||
        e1.at("verifications") != e3.at("verifications")) {
      ok = false;
      note += " jobs_determinism";
    }
  } catch (const std::exception&) {
    ok = false;
    note += " jobs_determinism_parse";
  }
  // and identical invocations are byte-deterministic
  const CliResult again = run_cli("scan --d 4 --from 2 --to 4000 --jobs 3 --format json");
  if (again.out != j3.out) {
    ok = false;
    note += " byte_determinism";
  }

  report(10, "property suites: valuation, cube split, orbits, cover, job determinism", ok,
         seconds_since(start), note);
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
  if (g_cli.empty()) {
    std::cerr << "usage: acceptance_tests --cli <path to zonal binary>\n";
    return 2;
  }
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
