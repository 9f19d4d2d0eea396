#include "infw/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "infw/errors.hpp"

namespace infw {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

void SetPartition::canonicalize(std::vector<std::vector<int>> blocks) {
  const int m = ground_.size();
  block_id_.assign(m, -1);
  std::vector<std::vector<int>> by_index;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::vector<int> idx;
    for (int k : b) {
      int i = ground_.index(k);
      if (block_id_[i] != -1) throw std::invalid_argument("blocks overlap");
      block_id_[i] = 0;
      idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    by_index.push_back(std::move(idx));
  }
  if (std::find(block_id_.begin(), block_id_.end(), -1) != block_id_.end()) {
    throw std::invalid_argument("blocks do not cover the ground set");
  }
  std::sort(by_index.begin(), by_index.end());
  blocks_.clear();
  for (std::size_t b = 0; b < by_index.size(); ++b) {
    std::vector<int> labels;
    for (int i : by_index[b]) {
      block_id_[i] = static_cast<int>(b);
      labels.push_back(ground_.label(i));
    }
    blocks_.push_back(std::move(labels));
  }
}

SetPartition SetPartition::from_blocks(const Ground& g, const std::vector<std::vector<int>>& blocks) {
  SetPartition p(g);
  p.canonicalize(blocks);
  return p;
}

SetPartition SetPartition::singletons(const Ground& g) {
  std::vector<std::vector<int>> blocks;
  for (int k : g.labels()) blocks.push_back({k});
  return from_blocks(g, blocks);
}

SetPartition SetPartition::of_cycles(const Permutation& p) { return from_blocks(p.ground(), p.cycles()); }

bool SetPartition::refines(const SetPartition& coarser) const {
  if (!(ground_ == coarser.ground_)) throw SizeMismatch("refines: ground sets differ");
  for (const auto& b : blocks_) {
    int id = coarser.block_of(b.front());
    for (int k : b)
      if (coarser.block_of(k) != id) return false;
  }
  return true;
}

Permutation SetPartition::as_permutation() const { return Permutation::from_cycles(ground_, blocks_); }

std::string SetPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    os << (b ? "," : "") << '{';
    for (std::size_t t = 0; t < blocks_[b].size(); ++t) os << (t ? "," : "") << blocks_[b][t];
    os << '}';
  }
  os << '}';
  return os.str();
}

SetPartition join(const SetPartition& p, const SetPartition& q) {
  if (!(p.ground() == q.ground())) throw SizeMismatch("join: ground sets differ");
  const Ground& g = p.ground();
  UnionFind uf(g.size());
  for (const auto* part : {&p, &q})
    for (const auto& b : part->blocks())
      for (int k : b) uf.unite(g.index(b.front()), g.index(k));
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < g.size(); ++i) groups[uf.find(i)].push_back(g.label(i));
  std::vector<std::vector<int>> blocks;
  for (auto& [root, b] : groups) blocks.push_back(std::move(b));
  return SetPartition::from_blocks(g, blocks);
}

int join_count(const Permutation& p, const Permutation& q) {
  if (!(p.ground() == q.ground())) throw SizeMismatch("join_count: ground sets differ");
  const int m = p.size();
  UnionFind uf(m);
  int count = m;
  for (int i = 0; i < m; ++i) {
    if (uf.unite(i, p.at_index(i))) --count;
    if (uf.unite(i, q.at_index(i))) --count;
  }
  return count;
}

SetPartition kernel_of(const std::vector<int>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("kernel_of: empty tuple");
  std::map<int, std::vector<int>> groups;
  for (std::size_t r = 0; r < tuple.size(); ++r) groups[tuple[r]].push_back(static_cast<int>(r) + 1);
  std::vector<std::vector<int>> blocks;
  for (auto& [value, b] : groups) blocks.push_back(std::move(b));
  return SetPartition::from_blocks(Ground::plain(static_cast<int>(tuple.size())), blocks);
}

SetPartition tilde_extend(const SetPartition& p) {
  if (p.ground().is_signed()) throw std::invalid_argument("tilde_extend: expects a partition of [n]");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks()) {
    std::vector<int> t(b);
    for (int k : b) t.push_back(-k);
    blocks.push_back(std::move(t));
  }
  return SetPartition::from_blocks(Ground::signed_set(p.ground().n()), blocks);
}

bool permutation_refines(const Permutation& p, const SetPartition& q) {
  if (!(p.ground() == q.ground())) throw SizeMismatch("permutation_refines: ground sets differ");
  const Ground& g = p.ground();
  for (int i = 0; i < p.size(); ++i)
    if (q.block_of(g.label(i)) != q.block_of(g.label(p.at_index(i)))) return false;
  return true;
}

GenusResult genus_defect(const Permutation& p, const Permutation& s) {
  GenusResult out;
  const int m = p.size();
  out.transitive = join_count(p, s) == 1;
  if (!out.transitive) return out;
  int total = p.cycle_count() + compose(p.inverse(), s).cycle_count() + s.cycle_count();
  int twice = m + 2 - total;  // = 2g
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("genus formula gave a non-integer");
  out.genus = twice / 2;
  return out;
}

bool is_noncrossing_relative(const Permutation& p, const Permutation& s) {
  // Cycles of p inside cycles of s.
  if (join_count(p, s) != s.cycle_count()) return false;
  return p.cycle_count() + compose(p.inverse(), s).cycle_count() == p.size() + s.cycle_count();
}

}  // namespace infw
