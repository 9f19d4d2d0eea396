#pragma once

// Permutations of [n] = {1..n} and of [±n] = {±1..±n}.
//
// Points are addressed by their label (a nonzero int). Internally a ground set
// is laid out densely in the canonical order
//
//     1 < 2 < ... < n < -1 < -2 < ... < -n
//
// so index(k) = k-1 for k > 0 and n-k-1 for k < 0. Cycle forms are canonical:
// every cycle starts at its minimum in this order and cycles are sorted by
// their leaders.
//
// Composition convention: (p * q)(k) = p(q(k)), i.e. q acts first. All
// products in the code base are written with this convention.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace infw {

class Ground {
 public:
  static Ground plain(int n);
  static Ground signed_set(int n);

  int n() const { return n_; }
  bool is_signed() const { return signed_; }
  int size() const { return signed_ ? 2 * n_ : n_; }

  bool contains(int label) const;
  int index(int label) const;  // throws std::out_of_range
  int label(int index) const;

  // Labels in canonical order.
  std::vector<int> labels() const;

  friend bool operator==(const Ground&, const Ground&) = default;

 private:
  Ground(int n, bool is_signed) : n_(n), signed_(is_signed) {}
  int n_ = 0;
  bool signed_ = false;
};

using Cycle = std::vector<int>;

class Permutation {
 public:
  static Permutation identity(const Ground& g);
  // `images[i]` is the image of ground.label(i), as a label.
  static Permutation from_images(const Ground& g, std::span<const int> images);
  static Permutation from_cycles(const Ground& g, const std::vector<Cycle>& cycles);
  // Involution with the given 2-cycles; remaining points fixed.
  static Permutation from_pairs(const Ground& g,
                                const std::vector<std::pair<int, int>>& pairs);
  // Dense constructor used by the enumerators: `image_index[i]` is an index.
  static Permutation from_indices(const Ground& g, std::vector<int> image_index);

  const Ground& ground() const { return ground_; }
  int size() const { return static_cast<int>(image_.size()); }

  int operator()(int label) const { return ground_.label(image_[ground_.index(label)]); }
  int at_index(int i) const { return image_[i]; }
  const std::vector<int>& indices() const { return image_; }

  Permutation inverse() const;
  std::vector<Cycle> cycles() const;
  int cycle_count() const;

  bool is_identity() const;
  bool is_involution() const;
  // Every cycle has exactly two points.
  bool is_pairing() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic by canonical cycle form.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  Permutation(Ground g, std::vector<int> image) : ground_(g), image_(std::move(image)) {}
  Ground ground_ = Ground::plain(0);
  std::vector<int> image_;
};

// (p * q)(k) = p(q(k)). Throws SizeMismatch for different grounds.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation operator*(const Permutation& p, const Permutation& q);

template <class... Rest>
Permutation compose(const Permutation& p, const Permutation& q, const Rest&... rest) {
  return compose(p, compose(q, rest...));
}

// Embeds p in S_n into S_{±n}, acting trivially on the negatives.
Permutation embed(const Permutation& p);

// p restricted to a p-invariant subset, still on p's ground and fixing every
// point outside `subset`. Throws NotInvariant.
Permutation restrict(const Permutation& p, std::span<const int> subset);

// First-return map of p on `subset`: x -> first p^k(x), k >= 1, inside the
// subset. Points outside the subset are fixed. For invariant subsets this is
// restrict(); otherwise it "removes" the points not in the subset from cycles.
Permutation induced(const Permutation& p, std::span<const int> subset);

// Moves p along the label bijection source[i] -> target[i]. `source` must be
// p-invariant and p must fix everything outside it. Points of `to` not listed
// in `target` are fixed.
Permutation transport(const Permutation& p, std::span<const int> source,
                      std::span<const int> target, const Ground& to);

// Cycles that contain both a positive and a negative point.
std::vector<Cycle> through_cycles(const Permutation& p);

// True if some cycle of p meets both [n] and [-n].
bool connects_signs(const Permutation& p);

// Parses "(1,2,-5)(3,4)(6)". Points not mentioned are fixed.
Permutation parse_cycles(std::string_view text, const Ground& g);

std::string format_cycles(const std::vector<Cycle>& cycles);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace infw
