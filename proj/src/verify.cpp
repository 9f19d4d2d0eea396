#include "infw/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "infw/analytic.hpp"
#include "infw/bijections.hpp"
#include "infw/enumerate.hpp"
#include "infw/moments.hpp"
#include "infw/partition.hpp"
#include "infw/standard.hpp"
#include "infw/tripartite.hpp"

namespace infw {

namespace {

using Results = std::vector<CheckResult>;

constexpr double kTwoPi = 6.283185307179586;

CheckResult make(const std::string& suite, const std::string& name, int n, bool ok, const std::string& detail) {
  return {suite, name, n, ok, detail};
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

Results counts(int n_max) {
  Results out;
  for (int n = 1; n <= n_max; ++n) {
    const auto found = enumerate_snc_delta(n).size();
    const BigInt expected = snc_delta_count(n);
    out.push_back(make("counts", "snc_delta_closed_form", n, BigInt(found) == expected,
                       std::to_string(found) + " enumerated, " + expected.str() + " expected"));
  }
  return out;
}

Results bijection(int n_max) {
  Results out;
  for (int n = 1; n <= n_max; ++n) {
    int ok = 0, total = 0;
    for (const auto& pi : enumerate_nc2(2 * n)) {
      ++total;
      const Permutation s = disc_pairing_to_nc(pi);
      if (nc_to_disc_pairing(s) == pi && join_count(omega(2 * n), pi) == s.cycle_count()) ++ok;
    }
    out.push_back(make("bijection", "disc_round_trip", n, ok == total && BigInt(total) == catalan(n),
                       std::to_string(ok) + "/" + std::to_string(total)));

    int valid = 0, forward_ok = 0;
    for_each_pairing(2 * n, [&](const Permutation& pi) {
      if (!is_nc2_delta_annular(annular_lift(pi))) return;
      ++valid;
      const Permutation s = annular_pairing_to_snc(pi);
      if (snc_to_annular_pairing(s) == pi && 2 * join_count(omega(2 * n), pi) == s.cycle_count()) ++forward_ok;
    });
    int backward_ok = 0;
    const auto snc = enumerate_snc_delta(n);
    for (const auto& s : snc)
      if (annular_pairing_to_snc(snc_to_annular_pairing(s)) == s) ++backward_ok;
    const bool annular_ok = valid == forward_ok && backward_ok == static_cast<int>(snc.size()) &&
                            valid == static_cast<int>(snc.size());
    out.push_back(make("bijection", "annular_round_trip", n, annular_ok,
                       std::to_string(forward_ok) + "/" + std::to_string(valid) + " pairings, " +
                           std::to_string(backward_ok) + "/" + std::to_string(snc.size()) + " permutations"));
  }
  for (int n = 2; n <= std::max(n_max, 6); ++n) {
    if (n > kDefaultCaps.snc_delta) break;
    int ok = 0;
    std::map<Tripartite, int> per;
    const auto snc = enumerate_snc_delta(n);
    for (const auto& s : snc) {
      const TripartiteData t = split_to_T(s);
      ++per[t.kind];
      if (assemble_from_T(t) == s) ++ok;
    }
    out.push_back(make("bijection", "tripartite_round_trip", n, ok == static_cast<int>(snc.size()),
                       std::to_string(ok) + "/" + std::to_string(snc.size()) + " (I " + std::to_string(per[Tripartite::I]) +
                           ", II " + std::to_string(per[Tripartite::II]) + ", III " +
                           std::to_string(per[Tripartite::III]) + ")"));
  }
  return out;
}

Results routes(int n_max) {
  Results out;
  for (int n = 1; n <= n_max; ++n) {
    const MultiPoly e = annular_term(n);
    out.push_back(make("routes", "annular_enum_binomial_recursion", n,
                       e == annular_term_binomial(n) && e == annular_term_recursion(n), e.to_string()));
  }
  bool ok = true;
  for (int n = 1; n <= 24; ++n) ok = ok && annular_term_binomial(n) == annular_term_recursion(n);
  out.push_back(make("routes", "annular_binomial_recursion_to_24", 24, ok, ""));
  for (int n = 1; n <= std::min(n_max, 12); ++n) {
    const MultiPoly m = mp_moment(n);
    out.push_back(make("routes", "mp_enum_recursion_narayana", n,
                       m == mp_moment_recursion(n) && m == mp_moment_narayana(n), m.to_string()));
  }
  return out;
}

Results one_over_n(int n_max) {
  Results out;
  for (int n = 1; n <= n_max; ++n) {
    const OneOverN e = one_over_N_expansion(n);
    const bool ok = e.order0 == mp_moment(n) && e.order1 == infinitesimal_moment(n);
    out.push_back(make("one-over-n", "order0_order1", n, ok, e.order1.to_string()));
  }
  return out;
}

Results recursion(int n_max) {
  Results out;
  for (int n = 1; n <= n_max; ++n) {
    const CountRecursion r = count_recursion_check(n);
    out.push_back(make("recursion", "count_recursion", n, r.ok(),
                       r.lhs.str() + " = " + r.rhs.str() + (r.classes_checked ? ", classes checked" : "")));
  }
  return out;
}

Results nc2_delta(int n_max) {
  Results out;
  for (int n = 1; n <= n_max; ++n) {
    const long long found = count_nc2_delta(n);
    const BigInt expected = BigInt(1) << (2 * (n - 1));
    out.push_back(make("nc2-delta", "four_power_plus_snc_delta", n, BigInt(found) == expected + snc_delta_count(n),
                       std::to_string(found)));
  }
  return out;
}

Results generating_functions(int order) {
  const GeneratingFunctionCheck g = verify_mbar_gf(order);
  return {make("gf", "mbar_symbolic", order, g.symbolic, ""), make("gf", "c1_catalan", order, g.catalan, ""),
          make("gf", "c1_closed_form", order, g.closed_form, "")};
}

Results transforms(int n_max) {
  Results out;
  for (double c : {0.5, 1.0, 2.0}) {
    const auto p = SpectralParams::make(c);
    double worst = 0;
    for (auto z : off_cut_points(c)) worst = std::max(worst, std::abs(cauchy_g(z, p) - cauchy_g_quotient(z, p)));
    out.push_back(make("transforms", "g_two_forms c=" + num(c), 0, worst <= 1e-12, "residual " + num(worst)));
    const double r = r_transform_check(small_points(c), c);
    out.push_back(make("transforms", "r_transform c=" + num(c), 0, r <= 1e-10, "residual " + num(r)));
  }
  for (double c : {0.25, 1.0, 4.0}) {
    const double r = goe_rescaling_check(off_cut_points(c), c);
    out.push_back(make("transforms", "goe_rescaling c=" + num(c), 0, r <= 1e-10, "residual " + num(r)));
  }
  const auto kp = inf_cumulants(n_max);
  std::vector<MultiPoly> kappa(n_max + 1, c_var()), shape_kp(n_max + 1, MultiPoly::variable(Var::cp));
  kappa[0] = shape_kp[0] = MultiPoly();
  const DualMoments annular = dual_moment_cumulant(kappa, kp);
  const DualMoments shape = dual_moment_cumulant(kappa, shape_kp);
  for (int n = 1; n <= n_max; ++n) {
    const bool ok = annular.m[n] == mp_moment_recursion(n) && annular.m_prime[n] == annular_term_binomial(n) &&
                    shape.m_prime[n] == shape_term(n);
    out.push_back(make("transforms", "cumulants_to_moments", n, ok, "kappa' = " + kp[n].to_string()));
  }
  return out;
}

Results densities(int n_max) {
  Results out;
  for (const Rational& cq : {Rational(1, 2), Rational(1), Rational(2)}) {
    const double c = to_double(cq);
    const Densities d = densities_nu(SpectralParams::make(c), 1.0);
    double mass = std::max(std::abs(d.nu1_moment(0)), std::abs(d.nu2_moment(0)));
    out.push_back(make("densities", "zero_mass c=" + num(c), 0, mass <= 1e-8, "residual " + num(mass)));
    double worst = 0;
    for (int n = 1; n <= n_max; ++n) {
      const double a = to_double(annular_term_binomial(n).to_rational({cq, 0, 0, 0}));
      const double s = to_double(shape_term(n).to_rational({cq, 1, 0, 0}));
      worst = std::max({worst, std::abs(d.nu2_moment(n) - a), std::abs(d.nu1_moment(n) - s)});
    }
    out.push_back(make("densities", "moments c=" + num(c), n_max, worst <= 1e-6, "residual " + num(worst)));
  }
  return out;
}

Results kernel(int n) {
  Results out;
  std::vector<std::vector<int>> words = {std::vector<int>(n, 1), {}, {}};
  for (int i = 0; i < n; ++i) {
    words[1].push_back(i % 2 + 1);
    words[2].push_back(i + 1);
  }
  for (const auto& word : words) {
    std::string name = "word";
    for (int l : word) name += " " + std::to_string(l);
    int agree = 0, compatible = 0, checked = 0;
    for_each_pairing(2 * n, [&](const Permutation& pi) {
      if (!is_nc2_delta_annular(annular_lift(pi))) return;
      ++checked;
      const KernelCheck k = kernel_check(pi, word);
      if (k.pi_side == k.sigma_side) ++agree;
      if (k.pi_side) ++compatible;
    });
    out.push_back(make("kernel", name, n, agree == checked,
                       std::to_string(compatible) + " of " + std::to_string(checked) + " compatible"));
  }
  return out;
}

struct Suite {
  int default_n;
  std::function<Results(int)> run;
};

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table = {
      {"counts", {8, counts}},          {"bijection", {5, bijection}},   {"routes", {8, routes}},
      {"one-over-n", {5, one_over_n}},  {"recursion", {7, recursion}},   {"nc2-delta", {5, nc2_delta}},
      {"gf", {12, generating_functions}}, {"transforms", {8, transforms}}, {"densities", {6, densities}},
      {"kernel", {4, kernel}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, s] : suites()) v.push_back(k);
    return v;
  }();
  return names;
}

int suite_default_n(const std::string& suite) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second.default_n;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::optional<int> n) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  const int size = n.value_or(it->second.default_n);
  if (size < 1) throw std::invalid_argument("--n must be positive");
  return it->second.run(size);
}

std::vector<std::complex<double>> off_cut_points(double c, int count) {
  const auto p = SpectralParams::make(c);
  const double mid = (p.a + p.b) / 2, half = (p.b - p.a) / 2;
  std::vector<std::complex<double>> out;
  for (int j = 0; j < count; ++j) {
    const double theta = kTwoPi * (j + 0.5) / count;
    const double r = half * (0.6 + 0.05 * j) + 0.5;
    out.push_back(std::complex<double>(mid, 0) + std::polar(r, theta));
  }
  return out;
}

std::vector<std::complex<double>> small_points(double c, int count) {
  const double radius = 0.2 / (1 + std::sqrt(c));
  std::vector<std::complex<double>> out;
  for (int j = 0; j < count; ++j) {
    const double theta = kTwoPi * (j + 0.25) / count;
    out.push_back(std::polar(radius * (0.3 + 0.035 * j), theta));
  }
  return out;
}

}  // namespace infw
