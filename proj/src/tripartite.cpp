#include "infw/tripartite.hpp"

#include <string>

#include "infw/enumerate.hpp"
#include "infw/errors.hpp"

namespace infw {

namespace {

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int k = from; k <= to; ++k) v.push_back(k);
  return v;
}

std::vector<int> signed_range(int from, int to) {
  std::vector<int> v = range(from, to);
  for (int k = from; k <= to; ++k) v.push_back(-k);
  return v;
}

// Image table on [±n] that starts as the identity.
struct Builder {
  Ground g;
  std::vector<int> img;
  explicit Builder(int n) : g(Ground::signed_set(n)), img(g.size()) {
    for (int i = 0; i < g.size(); ++i) img[i] = i;
  }
  void set(int from, int to) { img[g.index(from)] = g.index(to); }
  // Copies p (on its own ground) along the label map source[i] -> target[i].
  void place(const Permutation& p, const std::vector<int>& source, const std::vector<int>& target) {
    auto moved = transport(p, source, target, g);
    for (int k : target) set(k, moved(k));
  }
  // Adds the mirror cycles -> -p^-1 of everything currently placed on `labels`.
  void mirror(const std::vector<int>& labels) {
    std::vector<int> pre(g.size());
    for (int i = 0; i < g.size(); ++i) pre[img[i]] = i;
    for (int k : labels) set(-k, -g.label(pre[g.index(k)]));
  }
  Permutation done() { return Permutation::from_indices(g, img); }
};

bool meets_through_cycle(const Permutation& p, int j) {
  for (const auto& c : through_cycles(p))
    for (int x : c)
      if (x > 0 && x <= j) return true;
  return false;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw NotMember("assemble_from_T: " + what);
}

}  // namespace

const char* to_string(Tripartite t) {
  switch (t) {
    case Tripartite::I: return "I";
    case Tripartite::II: return "II";
    case Tripartite::III: return "III";
  }
  return "?";
}

Tripartite classify_tripartite(const Permutation& p) {
  if (!is_snc_delta(p)) throw NotMember("classify_tripartite: not in S_NC^delta(n,-n)");
  const int j = p.inverse()(1);
  if (j < 0) return Tripartite::I;
  return meets_through_cycle(p, j) ? Tripartite::III : Tripartite::II;
}

TripartiteData split_to_T(const Permutation& p) {
  TripartiteData t;
  t.kind = classify_tripartite(p);
  const int n = p.ground().n();
  t.n = n;
  const int pre1 = p.inverse()(1);
  if (t.kind == Tripartite::I) {
    const int k = -pre1;
    t.k = k;
    // Positions of the unrolled cycle, without its last point -k.
    std::vector<int> labels = range(1, k - 1);
    for (int x = n; x > k; --x) labels.push_back(-x);
    auto sigma = induced(p, labels);
    t.first = transport(sigma, labels, range(1, n - 1), Ground::plain(n - 1));
    return t;
  }
  const int j = pre1;
  t.k = j;
  if (t.kind == Tripartite::II) {
    auto left = induced(p, range(1, j - 1));
    t.first = transport(left, range(1, j - 1), range(1, j - 1), Ground::plain(j - 1));
    auto right = restrict(p, signed_range(j + 1, n));
    std::vector<int> target = signed_range(1, n - j);
    t.second = transport(right, signed_range(j + 1, n), target, Ground::signed_set(n - j));
  } else {
    auto left = induced(p, signed_range(1, j - 1));
    t.first = transport(left, signed_range(1, j - 1), signed_range(1, j - 1), Ground::signed_set(j - 1));
    auto right = restrict(p, range(j + 1, n));
    t.second = transport(right, range(j + 1, n), range(1, n - j), Ground::plain(n - j));
  }
  return t;
}

Permutation assemble_from_T(const TripartiteData& t) {
  const int n = t.n;
  require(n >= 2, "n must be at least 2");
  Builder b(n);
  switch (t.kind) {
    case Tripartite::I: {
      const int k = t.k;
      require(2 <= k && k <= n, "class I needs 2 <= k <= n");
      require(t.first.ground() == Ground::plain(n - 1) && is_nc(t.first), "sigma must be in NC(n-1)");
      std::vector<int> labels = range(1, k - 1);
      for (int x = n; x > k; --x) labels.push_back(-x);
      b.place(t.first, range(1, n - 1), labels);
      // Close the block of 1 with -k, so that pi(-k) = 1.
      const int before = b.g.label(std::find(b.img.begin(), b.img.end(), b.g.index(1)) - b.img.begin());
      b.set(before, -k);
      b.set(-k, 1);
      std::vector<int> c1 = labels;
      c1.push_back(-k);
      b.mirror(c1);
      break;
    }
    case Tripartite::II: {
      const int j = t.k;
      require(1 <= j && j <= n - 2, "class II needs 1 <= j <= n-2");
      require(t.first.ground() == Ground::plain(j - 1) && is_nc(t.first), "first must be in NC(j-1)");
      require(t.second.ground() == Ground::signed_set(n - j) && is_snc_delta(t.second),
              "second must be in S_NC^delta(n-j,-(n-j))");
      b.place(t.first, range(1, j - 1), range(1, j - 1));
      if (j > 1) {
        const int before = t.first.inverse()(1);
        b.set(before, j);
        b.set(j, 1);
      }
      b.mirror(range(1, j));
      b.place(t.second, signed_range(1, n - j), signed_range(j + 1, n));
      break;
    }
    case Tripartite::III: {
      const int j = t.k;
      require(3 <= j && j <= n, "class III needs 3 <= j <= n");
      require(t.first.ground() == Ground::signed_set(j - 1) && is_snc_delta(t.first),
              "first must be in S_NC^delta(j-1,-(j-1))");
      require(t.second.ground() == Ground::plain(n - j) && is_nc(t.second), "second must be in NC(n-j)");
      b.place(t.first, signed_range(1, j - 1), signed_range(1, j - 1));
      const int before = t.first.inverse()(1);
      const int after = t.first(-1);
      b.set(before, j);
      b.set(j, 1);
      b.set(-1, -j);
      b.set(-j, after);
      b.place(t.second, range(1, n - j), range(j + 1, n));
      b.mirror(range(j + 1, n));
      break;
    }
  }
  Permutation p = b.done();
  require(is_snc_delta(p), "assembled permutation is not in S_NC^delta(n,-n)");
  return p;
}

}  // namespace infw
