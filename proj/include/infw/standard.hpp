#pragma once

#include "infw/perm.hpp"

namespace infw {

// (1,2,...,n) on [n].
Permutation gamma(int n);
// (1,2,...,n) on [±n], fixing the negatives.
Permutation gamma_signed(int n);
// k -> -k on [±n].
Permutation delta(int n);
// gamma delta gamma^-1 delta = (1,...,n)(-n,...,-1).
Permutation gamma_tilde(int n);
// (1,2)(3,4)... on [m], m even.
Permutation omega(int m);
// omega delta omega delta = (1,2)(-1,-2)(3,4)(-3,-4)... on [±m].
Permutation omega_tilde(int m);
// k -> k for odd |k|, k -> -k for even |k|, on [±m].
Permutation epsilon(int m);
// gamma_tilde (-j, gamma^-1(k)) (-k, gamma^-1(j)) for 1 <= j < k <= n.
Permutation gamma_hat(int n, int j, int k);

}  // namespace infw
