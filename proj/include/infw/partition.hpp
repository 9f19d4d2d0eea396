#pragma once

#include <optional>
#include <vector>

#include "infw/perm.hpp"

namespace infw {

// Partition of a ground set. Blocks are kept canonical: each block sorted in
// the ground order, blocks sorted by their first element.
class SetPartition {
 public:
  static SetPartition from_blocks(const Ground& g, const std::vector<std::vector<int>>& blocks);
  static SetPartition singletons(const Ground& g);
  static SetPartition of_cycles(const Permutation& p);

  const Ground& ground() const { return ground_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int label) const { return block_id_[ground_.index(label)]; }
  bool same_block(int a, int b) const { return block_of(a) == block_of(b); }

  // Every block of *this lies inside a block of `coarser`.
  bool refines(const SetPartition& coarser) const;

  // Blocks read as cycles in increasing ground order.
  Permutation as_permutation() const;

  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
  }

 private:
  SetPartition(Ground g) : ground_(g) {}
  void canonicalize(std::vector<std::vector<int>> blocks);
  Ground ground_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_id_;
};

// Least upper bound in the partition lattice.
SetPartition join(const SetPartition& p, const SetPartition& q);

// Number of blocks of (cycles of p) v (cycles of q).
int join_count(const Permutation& p, const Permutation& q);

// r ~ s iff tuple[r] == tuple[s]; ground is [tuple.size()].
SetPartition kernel_of(const std::vector<int>& tuple);

// Partition of [±n] with r ~ s iff |r| ~ |s|.
SetPartition tilde_extend(const SetPartition& p);

// Each cycle of p lies inside a block of `q`.
bool permutation_refines(const Permutation& p, const SetPartition& q);

struct GenusResult {
  bool transitive = false;
  std::optional<int> genus;  // set only when transitive
};

// #(p) + #(p^-1 s) + #(s) = m + 2(1 - g) for a transitive pair.
GenusResult genus_defect(const Permutation& p, const Permutation& s);

// p is non-crossing relative to s: every cycle of p lies in one cycle of s
// and #(p) + #(p^-1 s) = m + #(s).
bool is_noncrossing_relative(const Permutation& p, const Permutation& s);

}  // namespace infw
