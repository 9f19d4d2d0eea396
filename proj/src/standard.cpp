#include "infw/standard.hpp"

#include <stdexcept>

namespace infw {

Permutation gamma(int n) {
  Cycle c;
  for (int k = 1; k <= n; ++k) c.push_back(k);
  return Permutation::from_cycles(Ground::plain(n), {c});
}

Permutation gamma_signed(int n) { return embed(gamma(n)); }

Permutation delta(int n) {
  Ground g = Ground::signed_set(n);
  std::vector<int> img;
  for (int k : g.labels()) img.push_back(-k);
  return Permutation::from_images(g, img);
}

Permutation gamma_tilde(int n) {
  Cycle pos, neg;
  for (int k = 1; k <= n; ++k) pos.push_back(k);
  for (int k = n; k >= 1; --k) neg.push_back(-k);
  return Permutation::from_cycles(Ground::signed_set(n), {pos, neg});
}

Permutation omega(int m) {
  if (m % 2) throw std::invalid_argument("omega needs an even number of points");
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k < m; k += 2) pairs.emplace_back(k, k + 1);
  return Permutation::from_pairs(Ground::plain(m), pairs);
}

Permutation omega_tilde(int m) {
  if (m % 2) throw std::invalid_argument("omega needs an even number of points");
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k < m; k += 2) {
    pairs.emplace_back(k, k + 1);
    pairs.emplace_back(-k, -(k + 1));
  }
  return Permutation::from_pairs(Ground::signed_set(m), pairs);
}

Permutation epsilon(int m) {
  Ground g = Ground::signed_set(m);
  std::vector<int> img;
  for (int k : g.labels()) img.push_back((k % 2 != 0) ? k : -k);
  return Permutation::from_images(g, img);
}

Permutation gamma_hat(int n, int j, int k) {
  if (!(1 <= j && j < k && k <= n)) throw std::invalid_argument("gamma_hat needs 1 <= j < k <= n");
  Ground g = Ground::signed_set(n);
  auto gm1 = [n](int x) { return x == 1 ? n : x - 1; };
  auto t1 = Permutation::from_pairs(g, {{-j, gm1(k)}});
  auto t2 = Permutation::from_pairs(g, {{-k, gm1(j)}});
  return compose(gamma_tilde(n), t1, t2);
}

}  // namespace infw
