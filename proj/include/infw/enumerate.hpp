#pragma once

#include <functional>
#include <vector>

#include "infw/partition.hpp"
#include "infw/perm.hpp"

namespace infw {

struct EnumCaps {
  int pairing_points = 20;  // largest m for P2(m)
  int nc_points = 16;       // largest n for NC(n)
  int snc_delta = 9;        // largest n for S_NC^delta(n,-n)
  int snc_rev = 6;          // largest n for S_NC(n,-n)
};

inline const EnumCaps kDefaultCaps{};

// All pairings of [m] as fixed-point free involutions, in canonical order.
// The visitor form never materialises the list.
void for_each_pairing(int m, const std::function<void(const Permutation&)>& visit,
                      const EnumCaps& caps = kDefaultCaps);
std::vector<Permutation> enumerate_pairings(int m, const EnumCaps& caps = kDefaultCaps);

// Permutations non-crossing relative to the single cycle `circle` (given in
// cyclic order), each cycle traversed along the circle. Points of the ground
// outside the circle are fixed. With `pairs_only` every cycle has size 2.
void for_each_nc_on_circle(const Ground& g, const std::vector<int>& circle, bool pairs_only,
                           const std::function<void(const Permutation&)>& visit);

// NC(n) as permutations of [n] with increasing cycles, sorted canonically.
std::vector<Permutation> enumerate_nc(int n, const EnumCaps& caps = kDefaultCaps);
std::vector<SetPartition> enumerate_nc_partitions(int n, const EnumCaps& caps = kDefaultCaps);
// NC2(m), the non-crossing pairings of [m].
std::vector<Permutation> enumerate_nc2(int m, const EnumCaps& caps = kDefaultCaps);

bool is_nc(const Permutation& p);  // p in NC(n), p on [n]

// p connects the two cycles of gamma_tilde and #(p) + #(p^-1 gamma_tilde) = 2n.
bool is_snc_rev(const Permutation& p);
// is_snc_rev and p delta is a pairing.
bool is_snc_delta(const Permutation& p);

std::vector<Permutation> enumerate_snc_rev(int n, const EnumCaps& caps = kDefaultCaps);

// S_NC^delta(n,-n) built from non-crossing partitions of [n] with a choice of
// an even number of "open" blocks that are glued into through cycles. The
// result is sorted canonically.
std::vector<Permutation> enumerate_snc_delta(int n, const EnumCaps& caps = kDefaultCaps);

// Lifts one half-permutation: `blocks` is a non-crossing partition of [n] and
// `open` marks the blocks that become through cycles. Returns false when the
// open blocks are not arranged consistently.
bool lift_half_permutation(int n, const std::vector<std::vector<int>>& blocks,
                           const std::vector<bool>& open, Permutation& out);

// #(omega v pi) + #(omega v gammabar(pi)) with gammabar(pi) = gamma^-1 pi gamma.
int subleading_weight(const Permutation& pi);

// Pairings of [2n] with #(omega v pi) + #(omega v gamma^-1 pi gamma) = n, built
// from spoke sets J (|J| = 0 mod 4) and non-crossing pairings of the cyclic
// runs of the complement. Sorted canonically.
std::vector<Permutation> construct_subleading_pairings(int n);
// The pairings built from one spoke set J (sorted ascending); empty when some
// complementary run has odd length.
std::vector<Permutation> subleading_pairings_for(int n, const std::vector<int>& spokes);

}  // namespace infw
