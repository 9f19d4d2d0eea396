#include <doctest.h>

#include <random>

#include "infw/errors.hpp"
#include "infw/partition.hpp"
#include "infw/perm.hpp"
#include "infw/standard.hpp"

using namespace infw;

namespace {

Permutation pairs_on(int m, const std::vector<std::pair<int, int>>& pairs) {
  return Permutation::from_pairs(Ground::plain(m), pairs);
}

// The 22-point pairing built from spokes {1,6,7,8,13,14,15,16} and runs
// {2..5}, {9..12}, {17..22}.
Permutation spoke_pairing() {
  return pairs_on(22, {{1, 13}, {2, 3}, {4, 5}, {6, 14}, {7, 15}, {8, 16}, {9, 12}, {10, 11}, {17, 20}, {18, 19},
                       {21, 22}});
}

}  // namespace

TEST_CASE("join examples") {
  const Ground g = Ground::plain(4);
  const auto p = SetPartition::from_blocks(g, {{1, 2}, {3}, {4}});
  const auto q = SetPartition::from_blocks(g, {{2, 3}, {1}, {4}});
  CHECK(join(p, p) == p);
  CHECK(join(p, q) == SetPartition::from_blocks(g, {{1, 2, 3}, {4}}));
  CHECK(join(p, SetPartition::singletons(g)) == p);

  const auto pi = spoke_pairing();
  const auto w = omega(22);
  CHECK(join_count(w, pi) == 5);
  const auto wbar = compose(gamma(22).inverse(), w, gamma(22));
  CHECK(join_count(wbar, pi) == 6);
}

TEST_CASE("join rejects different grounds") {
  const auto a = SetPartition::singletons(Ground::plain(3));
  const auto b = SetPartition::singletons(Ground::plain(4));
  CHECK_THROWS_AS(join(a, b), SizeMismatch);
}

TEST_CASE("set partition validation") {
  const Ground g = Ground::plain(3);
  CHECK_THROWS(SetPartition::from_blocks(g, {{1, 2}}));
  CHECK_THROWS(SetPartition::from_blocks(g, {{1, 2}, {2, 3}}));
  CHECK_THROWS(SetPartition::from_blocks(g, {{1, 2, 3}, {}}));
}

TEST_CASE("kernel_of") {
  CHECK(kernel_of({5, 5, 7}) == SetPartition::from_blocks(Ground::plain(3), {{1, 2}, {3}}));
  CHECK(kernel_of({4, 4, 4, 4}).block_count() == 1);
  CHECK(kernel_of({1, 2, 1, 2}) == SetPartition::from_blocks(Ground::plain(4), {{1, 3}, {2, 4}}));
}

TEST_CASE("tilde_extend") {
  const Ground s2 = Ground::signed_set(2);
  CHECK(tilde_extend(SetPartition::from_blocks(Ground::plain(2), {{1}, {2}})) ==
        SetPartition::from_blocks(s2, {{1, -1}, {2, -2}}));
  CHECK(tilde_extend(SetPartition::from_blocks(Ground::plain(2), {{1, 2}})) ==
        SetPartition::from_blocks(s2, {{1, 2, -1, -2}}));
  CHECK(tilde_extend(SetPartition::from_blocks(Ground::plain(3), {{1, 3}, {2}})) ==
        SetPartition::from_blocks(Ground::signed_set(3), {{1, 3, -1, -3}, {2, -2}}));
}

TEST_CASE("refinement and permutations") {
  const Ground g = Ground::plain(4);
  const auto fine = SetPartition::from_blocks(g, {{1}, {2, 3}, {4}});
  const auto coarse = SetPartition::from_blocks(g, {{1, 4}, {2, 3}});
  CHECK(fine.refines(coarse));
  CHECK_FALSE(coarse.refines(fine));
  CHECK(permutation_refines(parse_cycles("(2,3)", g), coarse));
  CHECK_FALSE(permutation_refines(parse_cycles("(1,2)", g), coarse));
  CHECK(SetPartition::of_cycles(coarse.as_permutation()) == coarse);
}

TEST_CASE("genus_defect examples") {
  for (int n = 1; n <= 6; ++n) {
    const auto r = genus_defect(Permutation::identity(Ground::plain(n)), gamma(n));
    CHECK(r.transitive);
    CHECK(r.genus == 0);
  }
  const Ground g4 = Ground::plain(4);
  // (1,3) with 2 and 4 fixed: p^-1 gamma = (1,2)(3,4), so 3 + 2 + 1 = 4 + 2.
  const auto r1 = genus_defect(parse_cycles("(1,3)", g4), gamma(4));
  CHECK(r1.transitive);
  CHECK(r1.genus == 0);
  const auto r2 = genus_defect(parse_cycles("(1,3)(2,4)", g4), gamma(4));
  CHECK(r2.genus == 1);
  const auto r3 = genus_defect(parse_cycles("(1,2)", g4), parse_cycles("(1,2)(3,4)", g4));
  CHECK_FALSE(r3.transitive);
  CHECK_FALSE(r3.genus.has_value());
}

TEST_CASE("property: genus is a nonnegative integer for transitive pairs") {
  std::mt19937 rng(11);
  int transitive = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 9;
    auto a = Ground::plain(n).labels(), b = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const auto p = Permutation::from_images(Ground::plain(n), a);
    const auto s = Permutation::from_images(Ground::plain(n), b);
    const auto r = genus_defect(p, s);
    if (!r.transitive) continue;
    ++transitive;
    REQUIRE(r.genus.has_value());
    CHECK(*r.genus >= 0);
    CHECK(p.cycle_count() + compose(p.inverse(), s).cycle_count() + s.cycle_count() == n + 2 - 2 * *r.genus);
  }
  CHECK(transitive > 100);
}

TEST_CASE("noncrossing relative to a cycle") {
  CHECK(is_noncrossing_relative(parse_cycles("(1,2)", Ground::plain(4)), gamma(4)));
  CHECK_FALSE(is_noncrossing_relative(parse_cycles("(1,3)(2,4)", Ground::plain(4)), gamma(4)));
  const Ground g = Ground::plain(4);
  const auto two = parse_cycles("(1,2)(3,4)", g);
  CHECK(is_noncrossing_relative(parse_cycles("(1,2)", g), two));
  CHECK_FALSE(is_noncrossing_relative(parse_cycles("(1,3)", g), two));
}
