#pragma once

// Brute-force reference implementations for the tests. Nothing here calls the
// library's algorithms: permutations are plain label maps, families come from
// exhaustive filters, and the counting formulas are written out directly.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "infw/perm.hpp"

namespace oracle {

using Map = std::map<int, int>;

inline std::vector<int> signed_labels(int n) {
  std::vector<int> v;
  for (int k = 1; k <= n; ++k) v.push_back(k);
  for (int k = 1; k <= n; ++k) v.push_back(-k);
  return v;
}

inline std::vector<int> plain_labels(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

inline Map to_map(const infw::Permutation& p) {
  Map m;
  for (int x : p.ground().labels()) m[x] = p(x);
  return m;
}

inline Map compose(const Map& p, const Map& q) {
  Map r;
  for (auto [k, v] : q) r[k] = p.at(v);
  return r;
}

inline Map inverse(const Map& p) {
  Map r;
  for (auto [k, v] : p) r[v] = k;
  return r;
}

inline int cycles(const Map& p) {
  std::set<int> seen;
  int count = 0;
  for (auto [k, v] : p) {
    if (seen.count(k)) continue;
    ++count;
    for (int x = k; !seen.count(x); x = p.at(x)) seen.insert(x);
  }
  return count;
}

// Orbits of the group generated by the given maps.
inline int orbits(const std::vector<Map>& gens) {
  std::set<int> seen;
  int count = 0;
  for (auto [k, v] : gens.front()) {
    if (seen.count(k)) continue;
    ++count;
    std::vector<int> stack = {k};
    seen.insert(k);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        int y = g.at(x);
        if (!seen.count(y)) {
          seen.insert(y);
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

// (1, ..., n)(-n, ..., -1)
inline Map gamma_tilde(int n) {
  Map m;
  for (int k = 1; k <= n; ++k) m[k] = k == n ? 1 : k + 1;
  for (int k = 1; k <= n; ++k) m[-k] = k == 1 ? -n : -(k - 1);
  return m;
}

inline Map delta(int n) {
  Map m;
  for (int k = 1; k <= n; ++k) {
    m[k] = -k;
    m[-k] = k;
  }
  return m;
}

inline Map cycle_gamma(int n) {
  Map m;
  for (int k = 1; k <= n; ++k) m[k] = k == n ? 1 : k + 1;
  return m;
}

// Pairing of points 1..2m as (1,2)(3,4)...
inline Map omega(int m2) {
  Map m;
  for (int k = 1; k <= m2; k += 2) {
    m[k] = k + 1;
    m[k + 1] = k;
  }
  return m;
}

// Annular non-crossing for (1..n)(-n..-1) and connecting both circles.
inline bool annular_nc(const Map& p, int n) {
  const Map g = gamma_tilde(n);
  if (cycles(p) + cycles(compose(inverse(p), g)) != 2 * n) return false;
  return orbits({p, g}) == 1;
}

// All pairings of the listed points.
inline void pairings(std::vector<int> pts, const std::function<void(const Map&)>& visit) {
  Map cur;
  std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& rest) {
    if (rest.empty()) {
      visit(cur);
      return;
    }
    int a = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) {
      int b = rest[i];
      std::vector<int> next;
      for (std::size_t j = 1; j < rest.size(); ++j)
        if (j != i) next.push_back(rest[j]);
      cur[a] = b;
      cur[b] = a;
      rec(next);
      cur.erase(a);
      cur.erase(b);
    }
  };
  rec(pts);
}

// S_NC^delta(n,-n): sigma = tau delta for a pairing tau of [±n].
inline std::set<Map> snc_delta(int n) {
  std::set<Map> out;
  const Map d = delta(n);
  pairings(signed_labels(n), [&](const Map& tau) {
    Map s = compose(tau, d);
    if (annular_nc(s, n)) out.insert(s);
  });
  return out;
}

// S_NC(n,-n) by scanning every permutation of [±n].
inline std::set<Map> snc_rev(int n) {
  std::set<Map> out;
  auto labels = signed_labels(n);
  std::sort(labels.begin(), labels.end());
  std::vector<int> img = labels;
  do {
    Map q;
    for (std::size_t i = 0; i < labels.size(); ++i) q[labels[i]] = img[i];
    if (annular_nc(q, n)) out.insert(q);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Set partitions of [n] as block lists, via restricted growth strings.
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(used);
      for (int k = 0; k < n; ++k) blocks[rgs[k]].push_back(k + 1);
      out.push_back(blocks);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) out.push_back({});
  else rec(0, 0);
  return out;
}

inline bool crossing_free(const std::vector<std::vector<int>>& blocks) {
  std::map<int, int> owner;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) owner[x] = static_cast<int>(b);
  for (auto [a, ba] : owner)
    for (auto [b, bb] : owner)
      for (auto [c, bc] : owner)
        for (auto [d, bd] : owner)
          if (a < b && b < c && c < d && ba == bc && bb == bd && ba != bb) return false;
  return true;
}

inline std::vector<std::vector<std::vector<int>>> nc_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  for (auto& p : set_partitions(n))
    if (crossing_free(p)) out.push_back(p);
  return out;
}

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long catalan(int n) { return binom(2 * n, n) / (n + 1); }

inline long long snc_delta_closed(int n) { return (1LL << (2 * (n - 1))) - binom(2 * n, n) / 2; }

// Coefficient vectors in c, index = power.
using Coeffs = std::vector<long long>;

inline Coeffs mp_moment(int n) {
  Coeffs out(n + 1, 0);
  for (auto& p : nc_partitions(n)) ++out[p.size()];
  return out;
}

inline Coeffs annular_term(int n) {
  Coeffs out(n + 1, 0);
  for (const auto& s : snc_delta(n)) ++out[cycles(s) / 2];
  return out;
}

// Coefficient of c^k in the annular term: (C(2n,2k) - C(n,k)^2) / 2.
inline Coeffs annular_formula(int n) {
  Coeffs out(n + 1, 0);
  for (int k = 0; k <= n; ++k) out[k] = (binom(2 * n, 2 * k) - binom(n, k) * binom(n, k)) / 2;
  return out;
}

inline int join_blocks(const Map& p, const Map& q) { return orbits({p, q}); }

// Pairings pi of [2n] with #(omega v pi) + #(omega v gamma^-1 pi gamma) = n.
inline std::set<Map> subleading(int n) {
  std::set<Map> out;
  const Map w = omega(2 * n), g = cycle_gamma(2 * n);
  pairings(plain_labels(2 * n), [&](const Map& pi) {
    const Map bar = compose(inverse(g), compose(pi, g));
    if (join_blocks(w, pi) + join_blocks(w, bar) == n) out.insert(pi);
  });
  return out;
}

// delta-commuting, connecting, annular non-crossing pairings of [±2n] with no (r,-r).
inline long long nc2_delta_count(int n) {
  long long count = 0;
  const int m = 2 * n;
  pairings(signed_labels(m), [&](const Map& rho) {
    for (auto [k, v] : rho) {
      if (v == -k) return;
      if (rho.at(-k) != -v) return;
    }
    if (annular_nc(rho, m)) ++count;
  });
  return count;
}

// E(tr X^n) for N = 1: a chi-square with M degrees of freedom.
inline long long trace_N1(int n, long long M) {
  long long r = 1;
  for (int k = 0; k < n; ++k) r *= M + 2 * k;
  return r;
}

}  // namespace oracle
