#include <doctest.h>

#include <map>
#include <set>

#include "infw/enumerate.hpp"
#include "infw/errors.hpp"
#include "infw/partition.hpp"
#include "infw/standard.hpp"
#include "infw/tripartite.hpp"
#include "oracles.hpp"

using namespace infw;

namespace {

std::set<oracle::Map> as_maps(const std::vector<Permutation>& v) {
  std::set<oracle::Map> out;
  for (const auto& p : v) out.insert(oracle::to_map(p));
  return out;
}

Permutation signed_perm(int n, const char* text) { return parse_cycles(text, Ground::signed_set(n)); }

const char* kClassI = "(1,2,-5)(3,4)(-1,5,-2)(-3,-4)(6)(-6)";
const char* kClassII = "(1,2,3)(-3,-2,-1)(4,-6)(-4,6)(5)(-5)";
const char* kClassIII = "(1,4)(-1,-4)(2,-3)(3,-2)(5,6)(-5,-6)";

}  // namespace

TEST_CASE("pairings") {
  CHECK(enumerate_pairings(2).size() == 1);
  CHECK(enumerate_pairings(4).size() == 3);
  CHECK(enumerate_pairings(10).size() == 945);
  CHECK_THROWS(enumerate_pairings(3));
  CHECK_THROWS_AS(enumerate_pairings(22), CapExceeded);
  const auto all = enumerate_pairings(8);
  CHECK(std::set<Permutation>(all.begin(), all.end()).size() == all.size());
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& p : all) CHECK(p.is_pairing());
}

TEST_CASE("NC(n)") {
  CHECK(enumerate_nc(0).size() == 1);
  CHECK(enumerate_nc(3).size() == 5);
  CHECK(enumerate_nc(6).size() == 132);
  for (int n = 0; n <= 12; ++n) CHECK(static_cast<long long>(enumerate_nc(n).size()) == oracle::catalan(n));
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      CHECK(genus_defect(p, gamma(n)).genus == 0);
      CHECK(is_nc(p));
    }
    std::set<std::vector<std::vector<int>>> mine, theirs;
    for (const auto& p : enumerate_nc_partitions(n)) mine.insert(p.blocks());
    for (auto b : oracle::nc_partitions(n)) theirs.insert(b);
    CHECK(mine == theirs);
  }
  CHECK_FALSE(is_nc(parse_cycles("(1,3)(2,4)", Ground::plain(4))));
}

TEST_CASE("NC2(2n)") {
  for (int n = 1; n <= 8; ++n) CHECK(static_cast<long long>(enumerate_nc2(2 * n).size()) == oracle::catalan(n));
}

TEST_CASE("is_snc_delta examples") {
  CHECK(is_snc_delta(signed_perm(6, kClassI)));
  CHECK(is_snc_delta(signed_perm(6, kClassIII)));
  CHECK(is_snc_delta(signed_perm(6, kClassII)));
  CHECK_FALSE(is_snc_delta(signed_perm(1, "(1,-1)")));
  CHECK(enumerate_snc_delta(1).empty());
  CHECK_FALSE(is_snc_delta(gamma_tilde(3)));
}

TEST_CASE("S_NC^delta(n,-n) matches the pairing filter") {
  for (int n = 1; n <= 6; ++n) CHECK(as_maps(enumerate_snc_delta(n)) == oracle::snc_delta(n));
}

TEST_CASE("S_NC^delta(n,-n) counts") {
  const std::vector<std::size_t> sequence = {0, 1, 6, 29, 130, 562, 2380, 9949};
  for (int n = 1; n <= 8; ++n) {
    const auto found = enumerate_snc_delta(n).size();
    CHECK(found == sequence[n - 1]);
    CHECK(static_cast<long long>(found) == oracle::snc_delta_closed(n));
  }
  CHECK_THROWS_AS(enumerate_snc_delta(10), CapExceeded);
}

TEST_CASE("S_NC(n,-n)") {
  CHECK(enumerate_snc_rev(1) == std::vector<Permutation>{signed_perm(1, "(1,-1)")});
  for (int n = 1; n <= 4; ++n) CHECK(as_maps(enumerate_snc_rev(n)) == oracle::snc_rev(n));
  for (int n = 1; n <= 5; ++n) {
    std::vector<Permutation> filtered;
    for (const auto& p : enumerate_snc_rev(n)) {
      CHECK(p.cycle_count() + compose(p.inverse(), gamma_tilde(n)).cycle_count() == 2 * n);
      if (is_snc_delta(p)) filtered.push_back(p);
    }
    CHECK(filtered == enumerate_snc_delta(n));
  }
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_snc_delta(n)) CHECK(is_snc_rev(p));
}

TEST_CASE("property: mirror symmetry of S_NC^delta") {
  for (int n = 2; n <= 7; ++n) {
    const auto d = delta(n);
    for (const auto& p : enumerate_snc_delta(n)) {
      CHECK(compose(d, p, d) == p.inverse());
      const auto cyc = p.cycles();
      int through = 0;
      for (const auto& c : cyc) {
        std::set<int> pts(c.begin(), c.end());
        for (int x : c) CHECK_FALSE(pts.count(-x));
        Cycle mirror;
        for (auto it = c.rbegin(); it != c.rend(); ++it) mirror.push_back(-*it);
        for (std::size_t i = 0; i < mirror.size(); ++i) CHECK(p(mirror[i]) == mirror[(i + 1) % mirror.size()]);
        bool pos = false, neg = false;
        for (int x : c) (x > 0 ? pos : neg) = true;
        if (pos && neg) ++through;
      }
      CHECK(through >= 2);
      CHECK(through % 2 == 0);
      CHECK((static_cast<int>(cyc.size()) - through) % 2 == 0);
    }
  }
}

TEST_CASE("property: through and non-through cycle census") {
  for (int n = 2; n <= 7; ++n) {
    std::map<std::pair<int, int>, long long> census;
    for (const auto& p : enumerate_snc_delta(n)) {
      const int through = static_cast<int>(through_cycles(p).size());
      const int other = p.cycle_count() - through;
      ++census[{other / 2, through / 2}];
    }
    for (int j = 0; j <= n; ++j)
      for (int l = 1; j + 2 * l <= n; ++l) {
        const long long expected = oracle::binom(n, j) * oracle::binom(n, j + 2 * l);
        CHECK(census[{j, l}] == expected);
      }
  }
}

TEST_CASE("subleading pairings") {
  CHECK(construct_subleading_pairings(1).empty());
  for (int n = 1; n <= 6; ++n) CHECK(as_maps(construct_subleading_pairings(n)) == oracle::subleading(n));
  const auto spokes = Permutation::from_pairs(Ground::plain(22), {{1, 13}, {2, 3}, {4, 5}, {6, 14}, {7, 15}, {8, 16},
                                                               {9, 12}, {10, 11}, {17, 20}, {18, 19}, {21, 22}});
  const auto built = subleading_pairings_for(11, {1, 6, 7, 8, 13, 14, 15, 16});
  CHECK(std::find(built.begin(), built.end(), spokes) != built.end());
  CHECK(subleading_weight(spokes) == 11);
  CHECK(subleading_pairings_for(3, {1, 2, 4}).empty());
}

TEST_CASE("tripartite classification examples") {
  const auto c1 = signed_perm(6, kClassI), c2 = signed_perm(6, kClassII), c3 = signed_perm(6, kClassIII);
  CHECK(classify_tripartite(c1) == Tripartite::I);
  CHECK(classify_tripartite(c2) == Tripartite::II);
  CHECK(classify_tripartite(c3) == Tripartite::III);
  const auto t1 = split_to_T(c1);
  CHECK(t1.k == 5);
  CHECK(t1.first == parse_cycles("(1,2)(3,4)(5)", Ground::plain(5)));
  const auto t3 = split_to_T(c3);
  CHECK(t3.k == 4);
  CHECK(t3.first == parse_cycles("(1)(-1)(2,-3)(-2,3)", Ground::signed_set(3)));
  CHECK(t3.second == parse_cycles("(1,2)", Ground::plain(2)));
  CHECK_THROWS_AS(classify_tripartite(gamma_tilde(3)), NotMember);
}

TEST_CASE("tripartite split and assemble are inverse") {
  for (int n = 2; n <= 6; ++n) {
    std::map<Tripartite, int> per;
    for (const auto& p : enumerate_snc_delta(n)) {
      const auto t = split_to_T(p);
      ++per[t.kind];
      CHECK(t.kind == classify_tripartite(p));
      const auto back = assemble_from_T(t);
      CHECK(back == p);
      const auto again = split_to_T(back);
      CHECK(again.k == t.k);
      CHECK(again.first == t.first);
      CHECK(again.second == t.second);
    }
    CHECK(per[Tripartite::I] == (n - 1) * oracle::catalan(n - 1));
  }
}

TEST_CASE("tripartite assemble rejects malformed data") {
  TripartiteData t;
  t.kind = Tripartite::II;
  t.n = 4;
  t.k = 3;  // leaves S_NC^delta(1,-1), which is empty
  t.first = Permutation::identity(Ground::plain(2));
  t.second = Permutation::identity(Ground::signed_set(1));
  CHECK_THROWS_AS(assemble_from_T(t), NotMember);
  TripartiteData u;
  u.kind = Tripartite::I;
  u.n = 3;
  u.k = 1;
  u.first = Permutation::identity(Ground::plain(2));
  CHECK_THROWS_AS(assemble_from_T(u), NotMember);
}
