#include "infw/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "infw/errors.hpp"
#include "infw/standard.hpp"

namespace infw {

namespace {

void check_cap(int value, int cap, const char* what) {
  if (value > cap) {
    throw CapExceeded(std::string(what) + ": size " + std::to_string(value) + " exceeds cap " +
                      std::to_string(cap));
  }
}

void sort_unique(std::vector<Permutation>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Depth-first generator of non-crossing partitions of the positions
// 0..m-1 of a circle. Blocks are emitted as increasing position lists.
class NcWalker {
 public:
  NcWalker(int m, bool pairs_only, std::function<void(const std::vector<std::vector<int>>&)> emit)
      : m_(m), pairs_only_(pairs_only), emit_(std::move(emit)) {}

  void run() {
    std::vector<std::pair<int, int>> pending;
    if (m_ > 0) pending.emplace_back(0, m_);
    next(pending);
  }

 private:
  void next(std::vector<std::pair<int, int>>& pending) {
    while (!pending.empty() && pending.back().first >= pending.back().second) pending.pop_back();
    if (pending.empty()) {
      emit_(blocks_);
      return;
    }
    auto saved = pending;
    auto [lo, hi] = pending.back();
    pending.pop_back();
    if (pairs_only_ && (hi - lo) % 2) {
      pending = saved;
      return;
    }
    blocks_.push_back({lo});
    extend(pending, lo, hi);
    blocks_.pop_back();
    pending = saved;
  }

  // The current block ends at `last`; either close it or add one more point.
  void extend(std::vector<std::pair<int, int>>& pending, int last, int hi) {
    const auto size = blocks_.back().size();
    if (!pairs_only_ || size == 2) {
      auto copy = pending;
      copy.emplace_back(last + 1, hi);
      next(copy);
    }
    if (pairs_only_ && size == 2) return;
    for (int e = last + 1; e < hi; ++e) {
      if (pairs_only_ && (e - last - 1) % 2) continue;
      auto copy = pending;
      copy.emplace_back(last + 1, e);
      blocks_.back().push_back(e);
      extend(copy, e, hi);
      blocks_.back().pop_back();
    }
  }

  int m_;
  bool pairs_only_;
  std::function<void(const std::vector<std::vector<int>>&)> emit_;
  std::vector<std::vector<int>> blocks_;
};

void nc_blocks(int m, bool pairs_only, const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  NcWalker(m, pairs_only, emit).run();
}

std::vector<int> iota_labels(int from, int to) {
  std::vector<int> v;
  for (int k = from; k <= to; ++k) v.push_back(k);
  return v;
}

}  // namespace

void for_each_pairing(int m, const std::function<void(const Permutation&)>& visit, const EnumCaps& caps) {
  if (m < 0 || m % 2) throw std::invalid_argument("pairings need an even number of points");
  check_cap(m, caps.pairing_points, "enumerate_pairings");
  Ground g = Ground::plain(m);
  std::vector<int> img(m, -1);
  std::function<void()> rec = [&]() {
    int a = 0;
    while (a < m && img[a] != -1) ++a;
    if (a == m) {
      visit(Permutation::from_indices(g, img));
      return;
    }
    for (int b = a + 1; b < m; ++b) {
      if (img[b] != -1) continue;
      img[a] = b;
      img[b] = a;
      rec();
      img[a] = img[b] = -1;
    }
  };
  rec();
}

std::vector<Permutation> enumerate_pairings(int m, const EnumCaps& caps) {
  std::vector<Permutation> out;
  for_each_pairing(m, [&](const Permutation& p) { out.push_back(p); }, caps);
  return out;
}

void for_each_nc_on_circle(const Ground& g, const std::vector<int>& circle, bool pairs_only,
                           const std::function<void(const Permutation&)>& visit) {
  std::vector<int> idx;
  for (int k : circle) idx.push_back(g.index(k));
  nc_blocks(static_cast<int>(circle.size()), pairs_only, [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<int> img(g.size());
    for (int i = 0; i < g.size(); ++i) img[i] = i;
    for (const auto& b : blocks)
      for (std::size_t t = 0; t < b.size(); ++t) img[idx[b[t]]] = idx[b[(t + 1) % b.size()]];
    visit(Permutation::from_indices(g, std::move(img)));
  });
}

std::vector<Permutation> enumerate_nc(int n, const EnumCaps& caps) {
  if (n < 0) throw std::invalid_argument("enumerate_nc: negative size");
  check_cap(n, caps.nc_points, "enumerate_nc");
  std::vector<Permutation> out;
  for_each_nc_on_circle(Ground::plain(n), iota_labels(1, n), false, [&](const Permutation& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> enumerate_nc_partitions(int n, const EnumCaps& caps) {
  std::vector<SetPartition> out;
  for (const auto& p : enumerate_nc(n, caps)) out.push_back(SetPartition::of_cycles(p));
  return out;
}

std::vector<Permutation> enumerate_nc2(int m, const EnumCaps& caps) {
  if (m < 0 || m % 2) throw std::invalid_argument("enumerate_nc2: odd number of points");
  check_cap(m, caps.pairing_points, "enumerate_nc2");
  std::vector<Permutation> out;
  for_each_nc_on_circle(Ground::plain(m), iota_labels(1, m), true, [&](const Permutation& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_nc(const Permutation& p) {
  if (p.ground().is_signed()) return false;
  return is_noncrossing_relative(p, gamma(p.ground().n()));
}

bool is_snc_rev(const Permutation& p) {
  if (!p.ground().is_signed()) return false;
  const int n = p.ground().n();
  if (!connects_signs(p)) return false;
  return p.cycle_count() + compose(p.inverse(), gamma_tilde(n)).cycle_count() == 2 * n;
}

bool is_snc_delta(const Permutation& p) {
  if (!p.ground().is_signed()) return false;
  if (!compose(p, delta(p.ground().n())).is_pairing()) return false;
  return is_snc_rev(p);
}

std::vector<Permutation> enumerate_snc_rev(int n, const EnumCaps& caps) {
  if (n < 1) throw std::invalid_argument("enumerate_snc_rev: n must be positive");
  check_cap(n, caps.snc_rev, "enumerate_snc_rev");
  // Every annular non-crossing permutation is non-crossing for the single
  // cycle obtained by cutting the annulus along some (a, b).
  Ground g = Ground::signed_set(n);
  const Permutation gt = gamma_tilde(n);
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = -1; b >= -n; --b) {
      Permutation merged = compose(gt, Permutation::from_pairs(g, {{a, b}}));
      for_each_nc_on_circle(g, merged.cycles().front(), false, [&](const Permutation& p) {
        if (!connects_signs(p) || seen.count(p)) return;
        if (!is_snc_rev(p)) return;
        seen.insert(p);
        out.push_back(p);
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool lift_half_permutation(int n, const std::vector<std::vector<int>>& blocks, const std::vector<bool>& open,
                           Permutation& out) {
  const int nb = static_cast<int>(blocks.size());
  // Gap of x relative to block b (sorted): index of the largest element below x,
  // wrapping to the last element.
  auto gap_of = [](const std::vector<int>& b, int x) {
    auto it = std::lower_bound(b.begin(), b.end(), x);
    if (it == b.begin()) return static_cast<int>(b.size()) - 1;
    return static_cast<int>(it - b.begin()) - 1;
  };
  std::vector<int> hole(nb, -1);
  for (int i = 0; i < nb; ++i) {
    for (int o = 0; o < nb; ++o) {
      if (o == i || !open[o]) continue;
      for (int x : blocks[o]) {
        int gp = gap_of(blocks[i], x);
        if (hole[i] == -1) hole[i] = gp;
        else if (hole[i] != gp) return false;
      }
    }
  }
  Ground g = Ground::signed_set(n);
  std::vector<int> img(g.size(), -1);
  auto put_cycle = [&](const std::vector<int>& c) {
    for (std::size_t t = 0; t < c.size(); ++t) img[g.index(c[t])] = g.index(c[(t + 1) % c.size()]);
  };
  std::vector<std::vector<int>> runs;
  std::vector<int> run_key;
  for (int i = 0; i < nb; ++i) {
    const auto& b = blocks[i];
    if (!open[i]) {
      put_cycle(b);
      std::vector<int> mirror;
      for (auto it = b.rbegin(); it != b.rend(); ++it) mirror.push_back(-*it);
      put_cycle(mirror);
      continue;
    }
    // The run starts just after the gap that holds the other open blocks.
    const int start = (hole[i] + 1) % static_cast<int>(b.size());
    std::vector<int> run(b.begin() + start, b.end());
    run.insert(run.end(), b.begin(), b.begin() + start);
    runs.push_back(std::move(run));
    run_key.push_back(b.front());
  }
  const int r = static_cast<int>(runs.size());
  if (r < 2 || r % 2) return false;
  std::vector<int> order(r);
  for (int t = 0; t < r; ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return run_key[x] < run_key[y]; });
  const int half = r / 2;
  for (int t = 0; t < r; ++t) {
    std::vector<int> c = runs[order[t]];
    const auto& other = runs[order[(t + half) % r]];
    for (auto it = other.rbegin(); it != other.rend(); ++it) c.push_back(-*it);
    put_cycle(c);
  }
  out = Permutation::from_indices(g, std::move(img));
  return true;
}

std::vector<Permutation> enumerate_snc_delta(int n, const EnumCaps& caps) {
  if (n < 1) throw std::invalid_argument("enumerate_snc_delta: n must be positive");
  check_cap(n, caps.snc_delta, "enumerate_snc_delta");
  std::vector<Permutation> out;
  for (const auto& part : enumerate_nc_partitions(n, caps)) {
    const auto& blocks = part.blocks();
    const int nb = part.block_count();
    for (unsigned mask = 0; mask < (1u << nb); ++mask) {
      if (__builtin_popcount(mask) < 2 || __builtin_popcount(mask) % 2) continue;
      std::vector<bool> open(nb);
      for (int i = 0; i < nb; ++i) open[i] = (mask >> i) & 1u;
      Permutation p = Permutation::identity(Ground::signed_set(n));
      if (lift_half_permutation(n, blocks, open, p)) out.push_back(std::move(p));
    }
  }
  sort_unique(out);
  return out;
}

int subleading_weight(const Permutation& pi) {
  const int m = pi.ground().n();
  const Permutation w = omega(m);
  const Permutation g = gamma(m);
  return join_count(w, pi) + join_count(w, compose(g.inverse(), pi, g));
}

std::vector<Permutation> subleading_pairings_for(int n, const std::vector<int>& spokes) {
  const int m = 2 * n;
  const int size = static_cast<int>(spokes.size());
  if (size < 4 || size % 4) return {};
  std::vector<char> in_j(m + 1, 0);
  for (int x : spokes) {
    if (x < 1 || x > m) throw std::invalid_argument("spoke outside [2n]");
    in_j[x] = 1;
  }
  // Maximal runs of the complement, read cyclically.
  std::vector<std::vector<int>> runs;
  int start = 1;
  while (start <= m && !in_j[start]) ++start;
  for (int step = 0, x = start; step < m; ++step, x = x % m + 1) {
    int prev = x == 1 ? m : x - 1;
    if (in_j[x]) continue;
    if (in_j[prev] || runs.empty()) runs.emplace_back();
    runs.back().push_back(x);
  }
  for (const auto& r : runs)
    if (r.size() % 2) return {};
  Ground g = Ground::plain(m);
  std::vector<int> base(m);
  for (int i = 0; i < m; ++i) base[i] = i;
  const int p = size / 2;
  for (int l = 0; l < p; ++l) {
    base[spokes[l] - 1] = spokes[p + l] - 1;
    base[spokes[p + l] - 1] = spokes[l] - 1;
  }
  std::vector<Permutation> out;
  std::function<void(std::size_t, std::vector<int>&)> rec = [&](std::size_t i, std::vector<int>& img) {
    if (i == runs.size()) {
      out.push_back(Permutation::from_indices(g, img));
      return;
    }
    for_each_nc_on_circle(g, runs[i], true, [&](const Permutation& q) {
      auto next = img;
      for (int x : runs[i]) next[x - 1] = q.at_index(x - 1);
      rec(i + 1, next);
    });
  };
  rec(0, base);
  return out;
}

std::vector<Permutation> construct_subleading_pairings(int n) {
  if (n < 1) throw std::invalid_argument("construct_subleading_pairings: n must be positive");
  const int m = 2 * n;
  if (m > 30) throw CapExceeded("construct_subleading_pairings: n too large");
  std::vector<Permutation> out;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    int size = __builtin_popcountl(mask);
    if (size < 4 || size % 4) continue;
    std::vector<int> spokes;
    for (int x = 1; x <= m; ++x)
      if ((mask >> (x - 1)) & 1ul) spokes.push_back(x);
    auto part = subleading_pairings_for(n, spokes);
    out.insert(out.end(), part.begin(), part.end());
  }
  sort_unique(out);
  return out;
}

}  // namespace infw
