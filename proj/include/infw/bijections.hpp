#pragma once

// Maps between pairings of [2n] and permutations of [n] or [±n].
//
// Disc:     pi in NC2(2n)  <->  sigma in NC(n),
//           sigma = omega pi restricted to E = {2, 4, ..., 2n}, 2k -> k.
// Annulus:  pi in P2(2n) with rho = eps pi delta pi eps in NC2^delta(2n,-2n)
//           <->  sigma in S_NC^delta(n,-n),
//           sigma = omega_tilde rho restricted to E = {2, 4, ..} u {-1, -3, ..},
//           relabelled by psi(2k) = k, psi(-(2k-1)) = -k.

#include <functional>
#include <vector>

#include "infw/partition.hpp"
#include "infw/perm.hpp"

namespace infw {

// E and O of [±2n] and the relabelling psi : E -> [±n].
struct EvenOddFrame {
  int n = 0;
  std::vector<int> even_part;  // E
  std::vector<int> odd_part;   // O
  static EvenOddFrame make(int n);
  static int psi(int x);
  static int psi_inverse(int k);
};

Permutation disc_pairing_to_nc(const Permutation& pi);
Permutation nc_to_disc_pairing(const Permutation& sigma);

// rho = eps pi delta pi eps on [±2n] for a pairing pi of [2n].
Permutation annular_lift(const Permutation& pi);

// rho is a delta-symmetric pairing of [±2n], connects the two circles, is
// non-crossing for gamma_tilde and has no pair (r, -r).
bool is_nc2_delta_annular(const Permutation& rho);
// Pairings of [±m] commuting with delta; with `allow_antipodal` the pairs
// (r, -r) are allowed too.
void for_each_delta_pairing(int m, bool allow_antipodal, const std::function<void(const Permutation&)>& visit);
// |NC2^delta(2n,-2n)| by filtering the delta-symmetric pairings of [±2n].
long long count_nc2_delta(int n, int cap = 6);
// rho = eps pi delta pi eps for some pairing pi of [2n].
bool is_pairing_induced(const Permutation& rho);

// omega_tilde rho restricted to E, before relabelling (kept on [±2n]).
Permutation annular_sigma_on_e(const Permutation& rho);

Permutation annular_pairing_to_snc(const Permutation& pi);
Permutation snc_to_annular_pairing(const Permutation& sigma);

struct KernelCheck {
  bool pi_side = false;     // pi <= ker(k), k doubling the word
  bool sigma_side = false;  // sigma <= ker~(word)
};

// pi is a pairing of [2n] in the annular family, `word` has n letters.
KernelCheck kernel_check(const Permutation& pi, const std::vector<int>& word);
// Shared truth value of kernel_check; throws std::logic_error if the two sides
// ever disagree.
bool kernel_compatible(const Permutation& pi, const std::vector<int>& word);
// sigma in S_NC^delta(n,-n) lies under ker~(word).
bool kernel_compatible_sigma(const Permutation& sigma, const std::vector<int>& word);

}  // namespace infw
