#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <cstdint>
#include <limits>
#include <vector>

#include "pc/circuit.hpp"

namespace pc {

struct Comparison {
  std::strong_ordering order = std::strong_ordering::equal;
  // |e(K) - e(M)| == 1
  bool unit_diff = false;
};

struct ExtendStats {
  std::size_t absorbed = 0;    // |U|
  std::size_t growth = 0;      // |Gamma'| - |Gamma| after absorbing U
  std::size_t collisions = 0;
  std::size_t prolongations = 0;
  std::size_t carry_steps = 0;
  std::size_t initial_weight = 0;  // C at the start
};

// A power circuit together with the sorted node list and the chain bits.
// Nodes that are present in the circuit but not in the order are the
// unreduced part; extend_reduce absorbs them.
class ReducedCircuit {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit ReducedCircuit(int q) : pc_(q) {}
  // Takes over every node of `pc` as unreduced.
  explicit ReducedCircuit(PowerCircuit pc) : pc_(std::move(pc)) {}

  PowerCircuit& circuit() { return pc_; }
  const PowerCircuit& circuit() const { return pc_; }
  int base() const { return pc_.base(); }

  std::size_t size() const { return order_.size(); }
  NodeId node_at(std::size_t rank) const { return order_[rank]; }
  const std::vector<NodeId>& order() const { return order_; }
  std::size_t rank_of(NodeId u) const {
    const auto i = index_of(u);
    return i < rank_.size() ? rank_[i] : npos;
  }
  bool in_order(NodeId u) const { return rank_of(u) != npos; }
  // q * e(order[i]) == e(order[i+1])
  bool bit(std::size_t i) const { return i < bits_.size() && bits_[i]; }
  bool has_unit() const { return has_unit_; }

  Comparison compare(const Marking& k, const Marking& m) const;
  int sign(const Marking& m) const;
  bool is_divisible_by_power(const Marking& m, const Marking& k) const;
  // e(succ(lower)) + 1 == e(succ(upper))
  bool is_chain_step(NodeId lower, NodeId upper) const;

  std::size_t base_chain_length() const;
  std::size_t chain_count() const;
  // Index of the last node of the maximal chain through `rank`.
  std::size_t chain_top(std::size_t rank) const;
  std::size_t chain_bottom(std::size_t rank) const;

  NodeId prolong_base_chain();
  // Absorbs the nodes `u` (all outside the order; no edges from ordered
  // nodes into u). Markings in `marks` are rewritten to keep their values;
  // successor markings of the pending nodes are rewritten as well.
  ExtendStats extend_reduce(const std::vector<NodeId>& u, const std::vector<Marking*>& marks);
  // Every node not yet in the order.
  std::vector<NodeId> unreduced() const;

  // Drops nodes that no root marking and no successor marking reaches, as
  // long as chain tops stay unreferenced. Returns the removed nodes.
  // `on_remove` runs before a node leaves the order.
  std::vector<NodeId> collect_garbage(const std::vector<const Marking*>& roots,
                                      const std::function<void(NodeId, std::size_t)>& on_remove = {});

  // Low level maintenance, shared with the treed layer.
  void insert_at(std::size_t pos, NodeId u, bool bit_below, bool bit_above, bool is_unit);
  void erase_at(std::size_t pos);
  void set_bit(std::size_t i, bool b) { bits_[i] = b; }

  // Digits of m listed by rank, lowest rank first, in a vector of size().
  std::vector<int> dense_digits(const Marking& m) const;

  std::uint64_t steps() const { return steps_; }

 private:
  void check_reduced(const Marking& m) const;
  void renumber_from(std::size_t pos);

  PowerCircuit pc_;
  std::vector<NodeId> order_;
  std::vector<bool> bits_;  // same length as order_, last entry false
  std::vector<std::size_t> rank_;
  bool has_unit_ = false;
  mutable std::uint64_t steps_ = 0;
};

// Order of `u` in which successors come first; ties by ascending id.
std::vector<NodeId> topological_order(const PowerCircuit& pc, const std::vector<NodeId>& u);

// Full reduction of an arbitrary graph (all nodes unreduced).
struct ReduceResult {
  ReducedCircuit rc;
  ExtendStats stats;
};
ReduceResult reduce(PowerCircuit pc, const std::vector<Marking*>& marks);

bool is_power_circuit(const PowerCircuit& pc);

// Independent O(n^2) check of order, distinctness and bits. Uses exact
// evaluation when every node value fits into max_bits, compare otherwise.
bool check_reduced_invariants(const ReducedCircuit& rc, std::size_t max_bits = kDefaultMaxBits);

}  // namespace pc
