#include "infw/moments.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "infw/errors.hpp"
#include "infw/partition.hpp"
#include "infw/standard.hpp"
#include "infw/tripartite.hpp"

namespace infw {

namespace {

void require_positive(int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be at least 1");
}

std::vector<MultiPoly> mp_table(int n) {
  std::vector<MultiPoly> m(n + 1);
  m[0] = 1;
  for (int k = 1; k <= n; ++k) m[k] = mp_moment_recursion(k);
  return m;
}

}  // namespace

MultiPoly mp_moment(int n) {
  require_positive(n, "mp_moment");
  MultiPoly out;
  for (const auto& p : enumerate_nc(n)) out += c_var(p.cycle_count());
  return out;
}

MultiPoly mp_moment_recursion(int n) {
  require_positive(n, "mp_moment_recursion");
  std::vector<MultiPoly> m(n + 1);
  m[0] = 1;
  const MultiPoly cm1 = c_var() - 1;
  for (int k = 1; k <= n; ++k) {
    MultiPoly s = cm1 * m[k - 1];
    for (int i = 1; i <= k; ++i) s += m[i - 1] * m[k - i];
    m[k] = s;
  }
  return m[n];
}

MultiPoly mp_moment_narayana(int n) {
  require_positive(n, "mp_moment_narayana");
  MultiPoly out;
  for (int k = 1; k <= n; ++k) {
    Rational coeff(binomial(n, k - 1) * binomial(n, k), BigInt(n));
    out += MultiPoly(coeff) * c_var(k);
  }
  return out;
}

MultiPoly shape_term(int n) {
  require_positive(n, "shape_term");
  MultiPoly out;
  const MultiPoly cp = MultiPoly::variable(Var::cp);
  for (const auto& p : enumerate_nc(n)) {
    const int b = p.cycle_count();
    out += MultiPoly(b) * cp * c_var(b - 1);
  }
  return out;
}

MultiPoly annular_term(int n) {
  require_positive(n, "annular_term");
  MultiPoly out;
  for (const auto& s : enumerate_snc_delta(n)) out += c_var(s.cycle_count() / 2);
  return out;
}

BigInt annular_coefficient(int n, int k) {
  BigInt b = binomial(n, k);
  return (binomial(2 * n, 2 * k) - b * b) / 2;
}

MultiPoly annular_term_binomial(int n) {
  require_positive(n, "annular_term_binomial");
  MultiPoly out;
  for (int k = 1; k < n; ++k) out += MultiPoly(Rational(annular_coefficient(n, k))) * c_var(k);
  return out;
}

MultiPoly annular_term_recursion(int n) {
  require_positive(n, "annular_term_recursion");
  auto m = mp_table(n);
  std::vector<MultiPoly> a(n + 1);  // a[0] is never used, a[1] = 0
  const MultiPoly cm1 = c_var() - 1;
  for (int k = 2; k <= n; ++k) {
    MultiPoly s = MultiPoly(k - 1) * m[k - 1] + cm1 * a[k - 1];
    MultiPoly tail;
    for (int i = 1; i <= k - 2; ++i) tail += m[i - 1] * a[k - i];
    a[k] = s + MultiPoly(2) * tail;
  }
  return a[n];
}

MultiPoly infinitesimal_moment(int n) { return shape_term(n) + annular_term(n); }

MultiPoly finite_N_trace_word(const std::vector<int>& word, const EnumCaps& caps) {
  const int n = static_cast<int>(word.size());
  require_positive(n, "finite_N_trace");
  const int m = 2 * n;
  if (m > caps.pairing_points) {
    throw CapExceeded("finite_N_trace: 2n = " + std::to_string(m) + " exceeds the pairing cap " +
                      std::to_string(caps.pairing_points));
  }
  std::vector<int> letter(m);
  for (int r = 0; r < n; ++r) letter[2 * r] = letter[2 * r + 1] = word[r];
  const Permutation w = omega(m);
  const Permutation g = gamma(m);
  const Permutation gi = g.inverse();
  std::map<std::pair<int, int>, long long> counts;
  for_each_pairing(m, [&](const Permutation& pi) {
    for (int i = 0; i < m; ++i)
      if (letter[i] != letter[pi.at_index(i)]) return;
    const int a = join_count(w, pi);
    const int b = join_count(w, compose(gi, pi, g));
    ++counts[{a, n + 1 - b}];
  }, caps);
  MultiPoly out;
  for (const auto& [key, count] : counts) {
    out += MultiPoly::monomial(Rational(count), {0, 0, key.first, key.second});
  }
  return out;
}

MultiPoly finite_N_trace(int n, const EnumCaps& caps) {
  require_positive(n, "finite_N_trace");
  return finite_N_trace_word(std::vector<int>(n, 1), caps);
}

OneOverN expand_in_one_over_N(const MultiPoly& trace) {
  const MultiPoly shift = c_var() + MultiPoly::variable(Var::cp) * MultiPoly::variable(Var::Ninv);
  MultiPoly total;
  for (const auto& [e, q] : trace.terms()) {
    const int a = e[static_cast<int>(Var::M)];
    const int k = e[static_cast<int>(Var::Ninv)] - a;
    if (k < 0) throw std::domain_error("1/N expansion: negative power of Ninv");
    MultiPoly rest = MultiPoly::monomial(q, {e[0], e[1], 0, k});
    total += rest * shift.pow(a);
  }
  OneOverN out;
  out.order0 = total.slice(Var::Ninv, 0);
  out.order1 = total.slice(Var::Ninv, 1);
  for (int k = 2; k <= total.degree(Var::Ninv); ++k) {
    out.exact_remainder += total.slice(Var::Ninv, k) * MultiPoly::variable(Var::Ninv, k - 2);
  }
  return out;
}

OneOverN one_over_N_expansion(int n, const EnumCaps& caps) {
  return expand_in_one_over_N(finite_N_trace(n, caps));
}

MultiMatrixMoment multi_matrix_moment(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  require_positive(n, "multi_matrix_moment");
  for (int l : word)
    if (l < 1) throw std::invalid_argument("multi_matrix_moment: letters must be positive");
  const SetPartition ker = kernel_of(word);
  const SetPartition ker_tilde = tilde_extend(ker);
  const MultiPoly cp = MultiPoly::variable(Var::cp);
  MultiMatrixMoment out;
  for (const auto& p : enumerate_nc(n)) {
    if (!permutation_refines(p, ker)) continue;
    const int b = p.cycle_count();
    out.order0 += c_var(b);
    out.order1 += MultiPoly(b) * cp * c_var(b - 1);
  }
  for (const auto& s : enumerate_snc_delta(n)) {
    if (permutation_refines(s, ker_tilde)) out.order1 += c_var(s.cycle_count() / 2);
  }
  return out;
}

BigInt snc_delta_count(int n) {
  require_positive(n, "snc_delta_count");
  BigInt four = 1;
  for (int i = 1; i < n; ++i) four *= 4;
  return four - binomial(2 * n, n) / 2;
}

CountRecursion count_recursion_check(int n, const EnumCaps& caps) {
  require_positive(n, "count_recursion_check");
  auto s = [](int k) { return k < 1 ? BigInt(0) : snc_delta_count(k); };
  CountRecursion out;
  out.lhs = s(n);
  BigInt rhs = BigInt(n - 1) * (n >= 2 ? catalan(n - 1) : BigInt(0));
  BigInt second = 0, third = 0;
  for (int k = 1; k <= n; ++k) {
    second += catalan(k - 1) * s(n - k);
    third += s(k - 1) * catalan(n - k);
  }
  out.rhs = rhs + second + third;
  if (n <= caps.snc_delta) {
    BigInt c1 = 0, c2 = 0, c3 = 0;
    for (const auto& p : enumerate_snc_delta(n, caps)) {
      switch (classify_tripartite(p)) {
        case Tripartite::I: ++c1; break;
        case Tripartite::II: ++c2; break;
        case Tripartite::III: ++c3; break;
      }
    }
    out.classes_checked = true;
    out.classes_ok = c1 == rhs && c2 == second && c3 == third;
  }
  return out;
}

}  // namespace infw
