#pragma once

// Moment polynomials of real Wishart matrices.
//
//   m_n            sum over NC(n) of c^#(pi)
//   shape_n        sum over NC(n) of c' #(pi) c^(#(pi)-1)
//   annular_n      sum over S_NC^delta(n,-n) of c^(#(sigma)/2)
//   m'_n           shape_n + annular_n
//
// finite_N_trace(n) is E(tr X^n) for X = G G^t / N, G of size N x M, as a
// polynomial in M and Ninv = 1/N.

#include <vector>

#include "infw/enumerate.hpp"
#include "infw/poly.hpp"

namespace infw {

MultiPoly mp_moment(int n);            // enumeration over NC(n)
MultiPoly mp_moment_recursion(int n);  // m_n = (c-1) m_{n-1} + sum m_{k-1} m_{n-k}
MultiPoly mp_moment_narayana(int n);   // coefficient (1/n) C(n,k-1) C(n,k)

MultiPoly shape_term(int n);

MultiPoly annular_term(int n);  // enumeration
MultiPoly annular_term_binomial(int n);
MultiPoly annular_term_recursion(int n);
// a_k = (C(2n,2k) - C(n,k)^2) / 2
BigInt annular_coefficient(int n, int k);

MultiPoly infinitesimal_moment(int n);

MultiPoly finite_N_trace(int n, const EnumCaps& caps = kDefaultCaps);
// Word version: only pairings below ker(k), k_{2r-1} = k_{2r} = word[r].
MultiPoly finite_N_trace_word(const std::vector<int>& word, const EnumCaps& caps = kDefaultCaps);

struct OneOverN {
  MultiPoly order0;  // in c
  MultiPoly order1;  // in c, c'
  // Nonzero terms of order >= 2 are dropped; `exact_remainder` keeps them
  // as a polynomial in c, c', Ninv (already divided by Ninv^2).
  MultiPoly exact_remainder;
};

// Substitutes M = cN + c' = (c + c' Ninv) / Ninv into a polynomial in M, Ninv.
// Throws std::domain_error if a negative power of Ninv would remain.
OneOverN expand_in_one_over_N(const MultiPoly& trace);
OneOverN one_over_N_expansion(int n, const EnumCaps& caps = kDefaultCaps);

struct MultiMatrixMoment {
  MultiPoly order0;
  MultiPoly order1;
};
MultiMatrixMoment multi_matrix_moment(const std::vector<int>& word);

struct CountRecursion {
  BigInt lhs;  // |S_NC^delta(n,-n)|
  BigInt rhs;  // (n-1) m_{n-1} + sum {m_{k-1} m'_{n-k} + m'_{k-1} m_{n-k}}
  bool classes_checked = false;
  bool classes_ok = true;  // |S_I| = (n-1) Cat(n-1) etc., when enumerated
  bool ok() const { return lhs == rhs && classes_ok; }
};
// Counts from the closed form; per-class counts by enumeration when n is
// within the enumeration cap.
CountRecursion count_recursion_check(int n, const EnumCaps& caps = kDefaultCaps);
BigInt snc_delta_count(int n);  // 4^(n-1) - C(2n,n)/2

}  // namespace infw
