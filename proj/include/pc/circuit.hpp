#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pc/bigint.hpp"
#include "pc/marking.hpp"

namespace pc {

// An acyclic digit-labelled graph over base q. Node u evaluates to
// q^{e(succ(u))}; a marking M evaluates to sum M(u) e(u).
//
// Edges are stored per source node as a successor marking, so an edge map is
// at the same time the successor marking Lambda_u. Node ids are never reused.
class PowerCircuit {
 public:
  explicit PowerCircuit(int q);

  int base() const { return q_; }
  bool in_digits(int d) const { return d > -q_ && d < q_; }
  CircuitId id() const { return id_; }

  NodeId add_node();
  NodeId add_node(Marking successors);
  void remove_node(NodeId u);
  bool contains(NodeId u) const;
  std::size_t size() const { return live_; }
  std::size_t edge_count() const;
  // Live nodes in ascending id order.
  std::vector<NodeId> nodes() const;
  // One past the largest id handed out so far.
  std::uint32_t id_bound() const { return static_cast<std::uint32_t>(nodes_.size()); }

  const Marking& successors(NodeId u) const;
  Marking& successors_mut(NodeId u);
  // label 0 removes the edge.
  void set_edge(NodeId from, NodeId to, int label);

  Marking empty_marking() const { return Marking(id_); }
  // Throws CircuitMismatch / UnknownNode / ValidationError.
  void check_marking(const Marking& m) const;

  NodeId clone_node(NodeId u);
  Marking clone_marking(const Marking& m);
  // e(result) = e(k) + e(m). Consumes both operands.
  Marking add(Marking&& k, Marking&& m);
  // e(result) = e(k) * q^{e(m)}. Consumes both operands.
  Marking mult_by_power(Marking&& k, Marking&& m);
  // Fresh nodes q^0, q^1, ... carrying the q-ary digits of n.
  Marking const_marking(long long n);

  bool is_acyclic() const;

  // Number of nodes and edges visited by the arithmetic operations.
  std::uint64_t touched() const { return touched_; }

 private:
  struct Node {
    bool alive = false;
    Marking succ;
  };
  const Node& node(NodeId u) const;
  Node& node(NodeId u);

  int q_;
  CircuitId id_;
  std::vector<Node> nodes_;
  std::size_t live_ = 0;
  std::uint64_t touched_ = 0;
};

Marking negate(Marking m);

// Exact evaluation, guarded by a bit budget. Throws Overflow when any value on
// the way exceeds max_bits, NotAPowerCircuit when e(succ(u)) < 0 for a node
// that is reached.
BigInt eval_marking(const PowerCircuit& c, const Marking& m, std::size_t max_bits = kDefaultMaxBits);
BigInt eval_node(const PowerCircuit& c, NodeId u, std::size_t max_bits = kDefaultMaxBits);

}  // namespace pc
