#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pc/mark_tree.hpp"
#include "pc/reduced.hpp"

namespace pc {

struct TreeStats {
  std::size_t absorbed = 0;
  std::size_t growth = 0;
  std::size_t chains_before = 0;
  std::size_t chains_after = 0;
  std::size_t collisions = 0;
  std::uint64_t steps = 0;
  bool within_bound = true;
};

// A reduced circuit whose successor markings and registered markings are
// compact and stored in a MarkTree. No registered marking touches the top
// node of a maximal chain.
class TreedCircuit {
 public:
  using MarkId = std::uint32_t;

  explicit TreedCircuit(int q);
  // All nodes of `pc` become pending; call extend_tree to absorb them.
  explicit TreedCircuit(PowerCircuit pc);

  PowerCircuit& circuit() { return rc_.circuit(); }
  const PowerCircuit& circuit() const { return rc_.circuit(); }
  const ReducedCircuit& reduced() const { return rc_; }
  const MarkTree& tree() const { return tree_; }
  int base() const { return rc_.base(); }
  std::size_t size() const { return rc_.size(); }

  std::size_t chain_count() const { return rc_.chain_count(); }
  std::uint64_t potential() const { return chain_count() * size(); }
  std::uint64_t steps() const { return steps_ + rc_.steps() + tree_.steps(); }

  Comparison compare(const Marking& k, const Marking& m) const { return rc_.compare(k, m); }
  int sign(const Marking& m) const { return rc_.sign(m); }
  bool is_divisible_by_power(const Marking& m, const Marking& k) const { return rc_.is_divisible_by_power(m, k); }

  // Compact within every maximal chain.
  bool is_chain_compact(const Marking& m) const;
  // Chain compact and clear of chain tops.
  bool is_treed_compact(const Marking& m) const;

  MarkId register_marking(Marking m);
  void unregister_marking(MarkId id);
  const Marking& marking(MarkId id) const;
  bool is_registered(MarkId id) const;
  std::vector<const Marking*> registered() const;

  Marking compactify_marking(Marking m);
  Marking increment_marking(const Marking& m);
  NodeId insert_node(Marking succ);
  NodeId prolong_base_chain();
  // Adds the node of value q*e(top) above the maximal chain containing `rank`.
  NodeId prolong_chain(std::size_t rank);

  TreeStats extend_tree(const std::vector<NodeId>& u, const std::vector<Marking*>& marks);
  std::vector<NodeId> unreduced() const { return rc_.unreduced(); }

  std::vector<NodeId> collect_garbage(const std::vector<const Marking*>& extra_roots = {});

  // Counts of bound checks that failed; stay zero when the stated growth
  // bounds hold.
  std::size_t increment_bound_misses() const { return inc_misses_; }
  std::size_t extend_bound_misses() const { return ext_misses_; }

  // Independent check of every treed invariant.
  bool validate() const;

 private:
  std::vector<int> digits(const Marking& m) const { return rc_.dense_digits(m); }
  NodeId insert_at(std::size_t pos, NodeId u);
  void repair_tops(const Marking& m);
  void compact_chains(Marking& m, bool base_only);
  std::optional<std::size_t> marked_top(const Marking& m) const;

  ReducedCircuit rc_;
  MarkTree tree_;
  std::vector<std::optional<Marking>> user_;
  std::vector<MarkId> free_ids_;
  std::uint64_t steps_ = 0;
  std::size_t inc_misses_ = 0;
  std::size_t ext_misses_ = 0;
};

struct MakeTreeResult {
  TreedCircuit tc;
  TreeStats stats;
};
MakeTreeResult make_tree(PowerCircuit pc, const std::vector<Marking*>& marks);

}  // namespace pc
