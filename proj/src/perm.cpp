#include "infw/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "infw/errors.hpp"

namespace infw {

Ground Ground::plain(int n) {
  if (n < 0) throw std::invalid_argument("ground size must be nonnegative");
  return Ground(n, false);
}

Ground Ground::signed_set(int n) {
  if (n < 0) throw std::invalid_argument("ground size must be nonnegative");
  return Ground(n, true);
}

bool Ground::contains(int label) const {
  if (label > 0) return label <= n_;
  if (label < 0) return signed_ && -label <= n_;
  return false;
}

int Ground::index(int label) const {
  if (!contains(label)) {
    throw std::out_of_range("label " + std::to_string(label) + " not in ground set");
  }
  return label > 0 ? label - 1 : n_ - label - 1;
}

int Ground::label(int index) const { return index < n_ ? index + 1 : -(index - n_ + 1); }

std::vector<int> Ground::labels() const {
  std::vector<int> out(size());
  for (int i = 0; i < size(); ++i) out[i] = label(i);
  return out;
}

Permutation Permutation::identity(const Ground& g) {
  std::vector<int> img(g.size());
  for (int i = 0; i < g.size(); ++i) img[i] = i;
  return Permutation(g, std::move(img));
}

Permutation Permutation::from_indices(const Ground& g, std::vector<int> image_index) {
  if (static_cast<int>(image_index.size()) != g.size()) {
    throw SizeMismatch("image vector does not match ground size");
  }
  std::vector<char> hit(g.size(), 0);
  for (int j : image_index) {
    if (j < 0 || j >= g.size() || hit[j]) throw std::invalid_argument("not a bijection");
    hit[j] = 1;
  }
  return Permutation(g, std::move(image_index));
}

Permutation Permutation::from_images(const Ground& g, std::span<const int> images) {
  std::vector<int> idx(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) idx[i] = g.index(images[i]);
  return from_indices(g, std::move(idx));
}

Permutation Permutation::from_cycles(const Ground& g, const std::vector<Cycle>& cycles) {
  std::vector<int> img(g.size(), -1);
  for (int i = 0; i < g.size(); ++i) img[i] = i;
  std::vector<char> seen(g.size(), 0);
  for (const auto& c : cycles) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      int i = g.index(c[t]);
      if (seen[i]) throw std::invalid_argument("point repeated in cycle form");
      seen[i] = 1;
      img[i] = g.index(c[(t + 1) % c.size()]);
    }
  }
  return Permutation(g, std::move(img));
}

Permutation Permutation::from_pairs(const Ground& g,
                                    const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Cycle> cycles;
  cycles.reserve(pairs.size());
  for (auto [a, b] : pairs) cycles.push_back({a, b});
  return from_cycles(g, cycles);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<int>(i);
  return Permutation(ground_, std::move(inv));
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<char> seen(image_.size(), 0);
  // Scanning indices in order makes every leader the minimum of its cycle.
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    Cycle c;
    int j = static_cast<int>(i);
    while (!seen[j]) {
      seen[j] = 1;
      c.push_back(ground_.label(j));
      j = image_[j];
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (int j = static_cast<int>(i); !seen[j]; j = image_[j]) seen[j] = 1;
  }
  return count;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[image_[i]] != static_cast<int>(i)) return false;
  return true;
}

bool Permutation::is_pairing() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    int j = image_[i];
    if (j == static_cast<int>(i) || image_[j] != static_cast<int>(i)) return false;
  }
  return true;
}

std::string Permutation::to_string() const { return format_cycles(cycles()); }

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.ground_.size() <=> b.ground_.size(); c != 0) return c;
  // Canonical cycle form as a flat index sequence with cycle separators.
  auto key = [](const Permutation& p) {
    std::vector<int> k;
    k.reserve(2 * p.image_.size());
    std::vector<char> seen(p.image_.size(), 0);
    for (std::size_t i = 0; i < p.image_.size(); ++i) {
      if (seen[i]) continue;
      for (int j = static_cast<int>(i); !seen[j]; j = p.image_[j]) {
        seen[j] = 1;
        k.push_back(j);
      }
      k.push_back(-1);
    }
    return k;
  };
  auto ka = key(a);
  auto kb = key(b);
  return std::lexicographical_compare_three_way(ka.begin(), ka.end(), kb.begin(), kb.end());
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (!(p.ground() == q.ground())) throw SizeMismatch("compose: ground sets differ");
  std::vector<int> img(q.size());
  for (int i = 0; i < q.size(); ++i) img[i] = p.at_index(q.at_index(i));
  return Permutation::from_indices(p.ground(), std::move(img));
}

Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

Permutation embed(const Permutation& p) {
  if (p.ground().is_signed()) throw std::invalid_argument("embed: already on [±n]");
  Ground g = Ground::signed_set(p.ground().n());
  std::vector<int> img(g.size());
  for (int i = 0; i < g.size(); ++i) img[i] = i < p.size() ? p.at_index(i) : i;
  return Permutation::from_indices(g, std::move(img));
}

Permutation restrict(const Permutation& p, std::span<const int> subset) {
  const Ground& g = p.ground();
  std::vector<char> in(g.size(), 0);
  for (int k : subset) in[g.index(k)] = 1;
  std::vector<int> img(g.size());
  for (int i = 0; i < g.size(); ++i) {
    if (!in[i]) {
      img[i] = i;
      continue;
    }
    if (!in[p.at_index(i)]) {
      throw NotInvariant("restrict: " + std::to_string(g.label(i)) + " maps outside subset");
    }
    img[i] = p.at_index(i);
  }
  return Permutation::from_indices(g, std::move(img));
}

Permutation induced(const Permutation& p, std::span<const int> subset) {
  const Ground& g = p.ground();
  std::vector<char> in(g.size(), 0);
  for (int k : subset) in[g.index(k)] = 1;
  std::vector<int> img(g.size());
  for (int i = 0; i < g.size(); ++i) {
    if (!in[i]) {
      img[i] = i;
      continue;
    }
    int j = p.at_index(i);
    while (!in[j]) j = p.at_index(j);
    img[i] = j;
  }
  return Permutation::from_indices(g, std::move(img));
}

Permutation transport(const Permutation& p, std::span<const int> source,
                      std::span<const int> target, const Ground& to) {
  if (source.size() != target.size()) throw SizeMismatch("transport: label lists differ in length");
  const Ground& from = p.ground();
  std::vector<int> pos(from.size(), -1);
  for (std::size_t t = 0; t < source.size(); ++t) pos[from.index(source[t])] = static_cast<int>(t);
  for (int i = 0; i < from.size(); ++i) {
    bool listed = pos[i] >= 0;
    if (!listed && p.at_index(i) != i) {
      throw NotInvariant("transport: permutation moves an unlisted point");
    }
    if (listed && pos[p.at_index(i)] < 0) throw NotInvariant("transport: source not invariant");
  }
  std::vector<int> img(to.size());
  for (int i = 0; i < to.size(); ++i) img[i] = i;
  for (std::size_t t = 0; t < source.size(); ++t) {
    int image_source = p.at_index(from.index(source[t]));
    img[to.index(target[t])] = to.index(target[pos[image_source]]);
  }
  return Permutation::from_indices(to, std::move(img));
}

std::vector<Cycle> through_cycles(const Permutation& p) {
  std::vector<Cycle> out;
  for (auto& c : p.cycles()) {
    bool pos = std::any_of(c.begin(), c.end(), [](int k) { return k > 0; });
    bool neg = std::any_of(c.begin(), c.end(), [](int k) { return k < 0; });
    if (pos && neg) out.push_back(std::move(c));
  }
  return out;
}

bool connects_signs(const Permutation& p) {
  const int n = p.ground().n();
  if (!p.ground().is_signed()) return false;
  std::vector<char> seen(p.size(), 0);
  for (int i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    bool pos = false, neg = false;
    for (int j = i; !seen[j]; j = p.at_index(j)) {
      seen[j] = 1;
      (j < n ? pos : neg) = true;
    }
    if (pos && neg) return true;
  }
  return false;
}

Permutation parse_cycles(std::string_view text, const Ground& g) {
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' at offset " + std::to_string(i));
    ++i;
    Cycle c;
    while (true) {
      skip_ws();
      int value = 0;
      const char* first = text.data() + i;
      auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
      if (ec != std::errc()) throw ParseError("expected integer at offset " + std::to_string(i));
      i += static_cast<std::size_t>(ptr - first);
      if (!g.contains(value)) throw ParseError("point " + std::to_string(value) + " out of range");
      c.push_back(value);
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'");
    }
    cycles.push_back(std::move(c));
    skip_ws();
  }
  try {
    return Permutation::from_cycles(g, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_cycles(const std::vector<Cycle>& cycles) {
  std::ostringstream os;
  for (const auto& c : cycles) {
    os << '(';
    for (std::size_t t = 0; t < c.size(); ++t) os << (t ? "," : "") << c[t];
    os << ')';
  }
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.size()) * 0x9e3779b97f4a7c15ULL;
  for (int v : p.indices()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}

}  // namespace infw
