#pragma once

// The three-way split of S_NC^delta(n,-n) by the position of pi^-1(1).
//
//   I    pi^-1(1) = -k < 0.           Data: k in {2..n}, sigma in NC(n-1).
//   II   pi^-1(1) = j > 0 and [1, j] meets no through cycle.
//        Data: j, first in NC(j-1), second in S_NC^delta(n-j, -(n-j)).
//   III  pi^-1(1) = j > 0 and [1, j] meets a through cycle.
//        Data: j, first in S_NC^delta(j-1, -(j-1)), second in NC(n-j).
//
// For class I, sigma lives on the positions of the cycle
// (1, ..., k-1, -n, ..., -(k+1)) relabelled 1..n-1.

#include "infw/perm.hpp"

namespace infw {

enum class Tripartite { I, II, III };

const char* to_string(Tripartite t);

struct TripartiteData {
  Tripartite kind = Tripartite::I;
  int n = 0;
  int k = 0;  // k for class I, j = pi^-1(1) for II and III
  Permutation first = Permutation::identity(Ground::plain(0));
  Permutation second = Permutation::identity(Ground::plain(0));
};

// Throws NotMember unless p is in S_NC^delta(n,-n).
Tripartite classify_tripartite(const Permutation& p);
TripartiteData split_to_T(const Permutation& p);
// Throws NotMember on malformed data.
Permutation assemble_from_T(const TripartiteData& t);

}  // namespace infw
