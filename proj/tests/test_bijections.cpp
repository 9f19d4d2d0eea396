#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "infw/bijections.hpp"
#include "infw/enumerate.hpp"
#include "infw/errors.hpp"
#include "infw/partition.hpp"
#include "infw/standard.hpp"
#include "oracles.hpp"

using namespace infw;

namespace {

int cycles_on(const Permutation& p, const std::vector<int>& pts) {
  // cycles of p restricted to an invariant subset
  std::set<int> seen;
  int count = 0;
  for (int x : pts) {
    if (seen.count(x)) continue;
    ++count;
    for (int y = x; !seen.count(y); y = p(y)) seen.insert(y);
  }
  return count;
}

// Pairings pi of [2n] whose lift is in the annular family.
std::vector<Permutation> annular_family(int n) {
  std::vector<Permutation> out;
  for (const auto& pi : enumerate_pairings(2 * n))
    if (is_nc2_delta_annular(annular_lift(pi))) out.push_back(pi);
  return out;
}

}  // namespace

TEST_CASE("psi relabelling") {
  CHECK(EvenOddFrame::psi(2) == 1);
  CHECK(EvenOddFrame::psi(8) == 4);
  CHECK(EvenOddFrame::psi(-1) == -1);
  CHECK(EvenOddFrame::psi(-5) == -3);
  for (int k = 1; k <= 6; ++k) {
    CHECK(EvenOddFrame::psi(EvenOddFrame::psi_inverse(k)) == k);
    CHECK(EvenOddFrame::psi(EvenOddFrame::psi_inverse(-k)) == -k);
  }
  const auto f = EvenOddFrame::make(3);
  CHECK(f.even_part.size() == 6);
  CHECK(f.odd_part.size() == 6);
}

TEST_CASE("disc bijection") {
  const auto one = Permutation::from_pairs(Ground::plain(2), {{1, 2}});
  CHECK(disc_pairing_to_nc(one).is_identity());
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> image;
    for (const auto& pi : enumerate_nc2(2 * n)) {
      const auto sigma = disc_pairing_to_nc(pi);
      CHECK(is_nc(sigma));
      CHECK(nc_to_disc_pairing(sigma) == pi);
      CHECK(sigma.cycle_count() == join_count(omega(2 * n), pi));
      image.insert(sigma);
    }
    CHECK(static_cast<long long>(image.size()) == oracle::catalan(n));
  }
  CHECK_THROWS_AS(disc_pairing_to_nc(parse_cycles("(1,3)(2,4)", Ground::plain(4))), NotMember);
}

TEST_CASE("is_nc2_delta_annular examples") {
  // omega_tilde itself never reaches the other circle
  CHECK_FALSE(is_nc2_delta_annular(omega_tilde(4)));
  // (r,-r) pairs are excluded
  CHECK_FALSE(is_nc2_delta_annular(parse_cycles("(1,-1)(2,-2)", Ground::signed_set(2))));
  // (1,-2)(2,-1) is a valid element for 2n = 2
  CHECK(is_nc2_delta_annular(parse_cycles("(1,-2)(2,-1)", Ground::signed_set(2))));
  CHECK_FALSE(is_nc2_delta_annular(gamma_tilde(2)));
}

TEST_CASE("NC2^delta counts against the pairing filter") {
  for (int n = 1; n <= 3; ++n) CHECK(count_nc2_delta(n) == oracle::nc2_delta_count(n));
  const std::vector<long long> expected = {1, 5, 22, 93, 386};
  for (int n = 1; n <= 5; ++n) {
    CHECK(count_nc2_delta(n) == expected[n - 1]);
    CHECK(count_nc2_delta(n) == (1LL << (2 * n - 2)) + oracle::snc_delta_closed(n));
  }
  CHECK_THROWS_AS(count_nc2_delta(7), CapExceeded);
}

TEST_CASE("antipodal pairs double the count") {
  for (int n = 1; n <= 3; ++n) {
    long long with = 0;
    for_each_delta_pairing(2 * n, true, [&](const Permutation& rho) {
      if (rho.cycle_count() + compose(rho.inverse(), gamma_tilde(2 * n)).cycle_count() == 4 * n &&
          !through_cycles(rho).empty())
        ++with;
    });
    CHECK(with == 2 * count_nc2_delta(n));
  }
}

TEST_CASE("annular bijection round trip") {
  for (int n = 1; n <= 5; ++n) {
    const auto fam = annular_family(n);
    std::set<Permutation> image;
    for (const auto& pi : fam) {
      const auto sigma = annular_pairing_to_snc(pi);
      CHECK(is_snc_delta(sigma));
      CHECK(snc_to_annular_pairing(sigma) == pi);
      image.insert(sigma);
    }
    CHECK(static_cast<long long>(fam.size()) == oracle::snc_delta_closed(n));
    CHECK(static_cast<long long>(image.size()) == oracle::snc_delta_closed(n));
  }
}

TEST_CASE("property: through strings of lifted pairings") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : annular_family(n)) {
      const auto rho = annular_lift(pi);
      std::map<int, int> through;  // r > 0 -> s with (r, -s) in rho
      for (int r = 1; r <= 2 * n; ++r)
        if (rho(r) < 0) through[r] = -rho(r);
      std::vector<int> rs, ss;
      for (auto [r, s] : through) {
        rs.push_back(r);
        ss.push_back(s);
      }
      const int k = static_cast<int>(rs.size());
      REQUIRE(k % 2 == 0);
      const int l = k / 2;
      CHECK(l % 2 == 0);
      for (int i = 0; i < l; ++i) {
        CHECK(rs[i] == ss[l + i]);
        CHECK(ss[i] == rs[l + i]);
      }
      for (int i = 0; i + 1 < k; ++i) CHECK((rs[i] - rs[i + 1]) % 2 != 0);
      for (int i = 0; i < k; ++i) CHECK((rs[i] - ss[i]) % 2 == 0);
    }
  }
}

TEST_CASE("property: cycle identities on E") {
  for (int n = 1; n <= 5; ++n) {
    const int m = 2 * n;
    const auto frame = EvenOddFrame::make(n);
    const auto wt = omega_tilde(m), gt = gamma_tilde(m);
    const auto w = omega(m);
    for (const auto& pi : annular_family(n)) {
      const auto rho = annular_lift(pi);
      CHECK(rho.is_pairing());
      const auto a = compose(wt, rho);
      const auto b = compose(rho, wt, gt, gt);
      const int on_a = cycles_on(a, frame.even_part);
      CHECK(on_a == compose(w, pi).cycle_count());
      CHECK(on_a + cycles_on(b, frame.even_part) == 2 * n);
      CHECK(annular_pairing_to_snc(pi).cycle_count() == on_a);
      for (int x : frame.even_part) {
        const int y = rho(x);
        CHECK(std::find(frame.odd_part.begin(), frame.odd_part.end(), y) != frame.odd_part.end());
      }
    }
  }
}

TEST_CASE("property: weight is preserved") {
  for (int n = 1; n <= 5; ++n) {
    std::map<int, long long> by_weight;
    for (const auto& pi : annular_family(n)) ++by_weight[join_count(omega(2 * n), pi)];
    std::map<int, long long> expected;
    for (const auto& s : oracle::snc_delta(n)) ++expected[oracle::cycles(s) / 2];
    CHECK(by_weight == expected);
  }
}

TEST_CASE("kernel compatibility") {
  const std::vector<int> distinct = {1, 2, 3, 4}, alt = {1, 2, 1, 2}, constant = {7, 7, 7, 7};
  int d = 0, a = 0, c = 0;
  const auto fam = annular_family(4);
  for (const auto& pi : fam) {
    const auto k1 = kernel_check(pi, distinct), k2 = kernel_check(pi, alt), k3 = kernel_check(pi, constant);
    CHECK(k1.pi_side == k1.sigma_side);
    CHECK(k2.pi_side == k2.sigma_side);
    CHECK(k3.pi_side == k3.sigma_side);
    d += k1.pi_side;
    a += k2.pi_side;
    c += k3.pi_side;
    CHECK(kernel_compatible_sigma(annular_pairing_to_snc(pi), alt) == k2.sigma_side);
  }
  CHECK(d == 0);
  CHECK(a == 3);
  CHECK(c == 29);
  CHECK(fam.size() == 29);
}

TEST_CASE("annular map rejects pairings outside the family") {
  CHECK_THROWS_AS(annular_pairing_to_snc(Permutation::from_pairs(Ground::plain(4), {{1, 2}, {3, 4}})), NotMember);
  CHECK_THROWS_AS(snc_to_annular_pairing(gamma_tilde(3)), NotMember);
}
