#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pc {

// Trie over rank-indexed digit vectors. The root edge carries the digit of
// the highest rank, leaves sit at depth n = number of ranks. Children are
// kept in fixed digit-indexed slots, so iteration order is lexicographic.
class MarkTree {
 public:
  struct Record {
    enum Kind : std::uint8_t { Succ, User } kind;
    std::uint32_t id;
    friend bool operator==(const Record&, const Record&) = default;
  };

  explicit MarkTree(int q);

  std::size_t ranks() const { return n_; }
  std::size_t node_count() const { return nodes_.size() - free_.size(); }
  std::size_t level_size(std::size_t depth) const { return levels_[depth].size(); }

  // `digits` is indexed by rank and has exactly ranks() entries.
  void insert(const std::vector<int>& digits, Record r);
  void erase(const std::vector<int>& digits, Record r);
  bool contains(const std::vector<int>& digits, Record r) const;

  // New all-zero rank at position `rank`; higher ranks move up by one.
  void stretch(std::size_t rank);
  // Inverse of stretch; every path must carry 0 at `rank`.
  void erase_level(std::size_t rank);

  struct Hit {
    bool found = false;
    bool equal = false;
    std::uint32_t node = 0;  // id of the Succ record
  };
  // Smallest Succ leaf whose path is >= digits in lexicographic order.
  Hit first_succ_at_least(const std::vector<int>& digits) const;

  // Every leaf with its rank-indexed path, left to right.
  struct Leaf {
    std::vector<int> digits;
    std::vector<Record> records;
  };
  std::vector<Leaf> leaves() const;
  // Structural self-check: levels, parents, counters.
  bool consistent() const;

  std::uint64_t steps() const { return steps_; }

 private:
  struct TNode {
    std::int32_t parent = -1;
    std::int32_t succ = 0;
    std::int32_t level_pos = -1;
    std::int8_t label = 0;
    std::vector<Record> records;
  };

  std::int32_t& child(std::int32_t x, int label) {
    return children_[static_cast<std::size_t>(x) * width_ + static_cast<std::size_t>(label + q_ - 1)];
  }
  std::int32_t child(std::int32_t x, int label) const {
    return children_[static_cast<std::size_t>(x) * width_ + static_cast<std::size_t>(label + q_ - 1)];
  }
  std::int32_t alloc(std::int32_t parent, int label, std::size_t depth);
  void release(std::int32_t x, std::size_t depth);
  bool has_children(std::int32_t x) const;
  std::int32_t find_leaf(const std::vector<int>& digits) const;

  int q_;
  std::size_t width_;
  std::size_t n_ = 0;
  std::int32_t root_;
  std::vector<TNode> nodes_;
  std::vector<std::int32_t> children_;
  std::vector<std::int32_t> free_;
  std::vector<std::vector<std::int32_t>> levels_;
  mutable std::uint64_t steps_ = 0;
};

}  // namespace pc
