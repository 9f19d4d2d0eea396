// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cctype>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "infw/analytic.hpp"
#include "infw/bijections.hpp"
#include "infw/cli.hpp"
#include "infw/enumerate.hpp"
#include "infw/moments.hpp"
#include "infw/partition.hpp"
#include "infw/standard.hpp"
#include "infw/montecarlo.hpp"
#include "infw/verify.hpp"

using namespace infw;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string trim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  return s;
}

std::string num(double x, int digits = 3) {
  std::ostringstream o;
  o << std::setprecision(digits) << x;
  return o.str();
}

// Rows of the printed table, c' = 0. The last entry of m_6 follows the
// coefficient formula (c^6).
const std::vector<std::pair<std::string, std::string>> kTable = {
    {"c", "0"},
    {"c + c^2", "c"},
    {"c + 3*c^2 + c^3", "3*c + 3*c^2"},
    {"c + 6*c^2 + 6*c^3 + c^4", "6*c + 17*c^2 + 6*c^3"},
    {"c + 10*c^2 + 20*c^3 + 10*c^4 + c^5", "10*c + 55*c^2 + 55*c^3 + 10*c^4"},
    {"c + 15*c^2 + 50*c^3 + 50*c^4 + 15*c^5 + c^6", "15*c + 135*c^2 + 262*c^3 + 135*c^4 + 15*c^5"},
};

Outcome criterion1() {
  std::ostringstream out, err;
  const int code = run_cli({"table", "--n-max", "6", "--cprime-zero"}, out, err);
  if (code != kExitOk) return {false, "table exited with " + std::to_string(code)};
  std::istringstream in(out.str());
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const auto bar = line.find(" | ", pos);
      cells.push_back(trim(line.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos)));
      if (bar == std::string::npos) break;
      pos = bar + 3;
    }
    if (cells.size() == 3 && !cells[0].empty() && std::isdigit(static_cast<unsigned char>(cells[0][0])))
      rows.push_back(cells);
  }
  if (rows.size() != 6) return {false, "expected 6 rows, got " + std::to_string(rows.size())};
  int matched = 0;
  for (int n = 1; n <= 6; ++n) {
    std::string m = rows[n - 1][1];
    if (m.size() > 2 && m.ends_with(" *")) m.resize(m.size() - 2);
    const bool ok = rows[n - 1][0] == std::to_string(n) && m == kTable[n - 1].first &&
                    rows[n - 1][2] == kTable[n - 1].second &&
                    mp_moment(n) == MultiPoly::parse(kTable[n - 1].first) &&
                    annular_term(n) == MultiPoly::parse(kTable[n - 1].second);
    matched += ok;
  }
  const bool footnote = out.str().find("c^6") != std::string::npos && rows[5][1].ends_with(" *");
  return {matched == 6 && footnote,
          std::to_string(2 * matched) + " of 12 entries exact, m_6 footnoted: " + (footnote ? "yes" : "no")};
}

Outcome criterion2() {
  const std::vector<long long> seq = {0, 1, 6, 29, 130, 562, 2380, 9949};
  std::string got;
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    const auto count = static_cast<long long>(enumerate_snc_delta(n).size());
    ok = ok && count == seq[n - 1] && BigInt(count) == snc_delta_count(n);
    got += (n > 1 ? "," : "") + std::to_string(count);
  }
  return {ok, "counts " + got};
}

Outcome criterion3() {
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    const auto e = annular_term(n);
    ok = ok && e == annular_term_binomial(n) && e == annular_term_recursion(n);
  }
  for (int n = 1; n <= 24; ++n) ok = ok && annular_term_binomial(n) == annular_term_recursion(n);
  return {ok, "enumeration n<=8, binomial and recursion n<=24"};
}

Outcome criterion4() {
  bool ok = true;
  int good = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto e = one_over_N_expansion(n);
    const bool here = e.order0 == mp_moment(n) && e.order1 == infinitesimal_moment(n);
    good += here;
    ok = ok && here;
  }
  return {ok, std::to_string(good) + "/5 sizes with order0 = m_n and order1 = m'_n"};
}

Outcome criterion5() {
  bool ok = true;
  long long disc = 0, ann = 0, tri = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : enumerate_nc2(2 * n)) {
      const auto s = disc_pairing_to_nc(pi);
      ok = ok && nc_to_disc_pairing(s) == pi && s.cycle_count() == join_count(omega(2 * n), pi);
      ++disc;
    }
    long long found = 0;
    for_each_pairing(2 * n, [&](const Permutation& pi) {
      if (!is_nc2_delta_annular(annular_lift(pi))) return;
      const auto s = annular_pairing_to_snc(pi);
      ok = ok && snc_to_annular_pairing(s) == pi && s.cycle_count() % 2 == 0 &&
           join_count(omega(2 * n), pi) == s.cycle_count() / 2;
      ++found;
    });
    ok = ok && BigInt(found) == snc_delta_count(n);
    ann += found;
  }
  for (const auto& r : run_suite("bijection", 6))
    if (r.name.find("tripartite") != std::string::npos) {
      ok = ok && r.ok;
      ++tri;
    }
  return {ok && tri > 0, "disc " + std::to_string(disc) + ", annular " + std::to_string(ann) +
                             " round trips, tripartite checks " + std::to_string(tri)};
}

Outcome criterion6() {
  bool ok = true;
  std::string got;
  for (int n = 1; n <= 6; ++n) {
    const long long count = count_nc2_delta(n);
    ok = ok && BigInt(count) == (BigInt(1) << (2 * n - 2)) + snc_delta_count(n);
    got += (n > 1 ? "," : "") + std::to_string(count);
  }
  return {ok, "counts " + got};
}

Outcome criterion7() {
  const auto r = verify_mbar_gf(12);
  return {r.ok(), std::string("symbolic ") + (r.symbolic ? "ok" : "bad") + ", c=1 " + (r.catalan ? "ok" : "bad") +
                      ", closed form " + (r.closed_form ? "ok" : "bad")};
}

Outcome criterion8() {
  const char* kappa[] = {"", "0", "c", "3*c", "6*c + c^2", "10*c + 5*c^2", "15*c + 15*c^2 + c^3",
                         "21*c + 35*c^2 + 7*c^3", "28*c + 70*c^2 + 28*c^3 + c^4"};
  double g_err = 0, r_err = 0, goe_err = 0;
  for (double c : {0.5, 1.0, 2.0}) {
    const auto p = SpectralParams::make(c);
    for (auto z : off_cut_points(c)) g_err = std::max(g_err, std::abs(cauchy_g(z, p) - cauchy_g_quotient(z, p)));
    r_err = std::max(r_err, r_transform_check(small_points(c), c));
    goe_err = std::max(goe_err, goe_rescaling_check(off_cut_points(c), c));
  }
  const auto kp = inf_cumulants(8);
  bool table = true;
  for (int n = 1; n <= 8; ++n) table = table && kp[n] == MultiPoly::parse(kappa[n]);
  const bool ok = g_err <= 1e-12 && r_err <= 1e-10 && goe_err <= 1e-10 && table;
  return {ok, "g " + num(g_err) + ", r " + num(r_err) + ", rescaling " + num(goe_err) +
                  ", kappa' table " + (table ? "exact" : "wrong")};
}

Outcome criterion9() {
  double worst = 0, mass = 0;
  for (double c : {0.5, 1.0, 2.0}) {
    const auto d = densities_nu(SpectralParams::make(c), 0);
    for (int n = 1; n <= 6; ++n)
      worst = std::max(worst, std::abs(d.nu2_moment(n) - annular_term(n).to_double({c, 0, 0, 0})));
    mass = std::max(mass, std::abs(d.nu2_moment(0)));
  }
  return {worst <= 1e-6 && mass <= 1e-8, "moment error " + num(worst) + ", mass " + num(mass)};
}

Outcome criterion10() {
  const WishartSpec spec{100, 100, 42, 2000};
  const auto est = sample_trace_moments(spec, 4);
  double worst = 0;
  for (const auto& e : est) {
    const double exact = to_double(finite_N_trace(e.n).to_rational({0, 0, Rational(100), Rational(1, 100)}));
    worst = std::max(worst, std::abs(e.mean - exact) / e.stderr_);
  }
  const auto w = multi_matrix_word_estimate({1, 2, 1, 2}, spec);
  const auto mm = multi_matrix_moment({1, 2, 1, 2});
  const double ref = to_double(mm.order0.to_rational({1, 0, 0, 0}) + mm.order1.to_rational({1, 0, 0, 0}) / 100);
  const double zw = std::abs(w.mean - ref) / w.stderr_;
  return {worst <= 4 && zw <= 4, "max |z| n<=4 " + num(worst) + ", word |z| " + num(zw)};
}

}  // namespace

int main() {
  struct Item {
    int id;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Item> items = {
      {1, 5, criterion1},   {2, 60, criterion2},  {3, 1e9, criterion3}, {4, 120, criterion4},
      {5, 1e9, criterion5}, {6, 1e9, criterion6}, {7, 1e9, criterion7}, {8, 1e9, criterion8},
      {9, 1e9, criterion9}, {10, 120, criterion10},
  };
  int failed = 0;
  for (const auto& it : items) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < it.limit_s;
    const bool ok = o.ok && in_time;
    failed += !ok;
    std::cout << "criterion " << it.id << ": " << (ok ? "PASS" : "FAIL") << "  " << o.detail << "  ("
              << std::fixed << std::setprecision(2) << secs << " s" << (in_time ? "" : ", over the time limit")
              << ")\n";
    std::cout.unsetf(std::ios::fixed);
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all 10 criteria passed") << '\n';
  return failed ? 1 : 0;
}
