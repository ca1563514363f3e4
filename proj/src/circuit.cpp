#include "pc/circuit.hpp"

#include <atomic>
#include <functional>
#include <unordered_map>

#include "pc/error.hpp"

namespace pc {

namespace {

CircuitId next_circuit_id() {
  static std::atomic<CircuitId> counter{1};
  return counter.fetch_add(1);
}

}  // namespace

PowerCircuit::PowerCircuit(int q) : q_(q), id_(next_circuit_id()) {
  if (q < 2) throw Error(ErrorCode::InvalidBase, "q must be at least 2, got " + std::to_string(q));
}

const PowerCircuit::Node& PowerCircuit::node(NodeId u) const {
  const auto i = index_of(u);
  if (i >= nodes_.size() || !nodes_[i].alive)
    throw Error(ErrorCode::UnknownNode, "node " + std::to_string(i));
  return nodes_[i];
}

PowerCircuit::Node& PowerCircuit::node(NodeId u) {
  return const_cast<Node&>(static_cast<const PowerCircuit&>(*this).node(u));
}

NodeId PowerCircuit::add_node() { return add_node(Marking(id_)); }

NodeId PowerCircuit::add_node(Marking successors) {
  if (successors.owner() != 0 && successors.owner() != id_)
    throw Error(ErrorCode::CircuitMismatch, "successor marking from another circuit");
  successors.rebind(id_);
  check_marking(successors);
  const NodeId u{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(Node{true, std::move(successors)});
  ++live_;
  return u;
}

void PowerCircuit::remove_node(NodeId u) {
  Node& n = node(u);
  n.alive = false;
  n.succ.clear();
  --live_;
}

bool PowerCircuit::contains(NodeId u) const {
  const auto i = index_of(u);
  return i < nodes_.size() && nodes_[i].alive;
}

std::size_t PowerCircuit::edge_count() const {
  std::size_t e = 0;
  for (const auto& n : nodes_)
    if (n.alive) e += n.succ.size();
  return e;
}

std::vector<NodeId> PowerCircuit::nodes() const {
  std::vector<NodeId> out;
  out.reserve(live_);
  for (std::uint32_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].alive) out.push_back(NodeId{i});
  return out;
}

const Marking& PowerCircuit::successors(NodeId u) const { return node(u).succ; }
Marking& PowerCircuit::successors_mut(NodeId u) { return node(u).succ; }

void PowerCircuit::set_edge(NodeId from, NodeId to, int label) {
  if (!in_digits(label))
    throw Error(ErrorCode::ValidationError, "edge label " + std::to_string(label) + " outside D");
  node(to);
  node(from).succ.set(to, label);
}

void PowerCircuit::check_marking(const Marking& m) const {
  if (m.owner() != id_) throw Error(ErrorCode::CircuitMismatch, "marking belongs to another circuit");
  for (const auto& e : m) {
    node(e.node);
    if (!in_digits(e.digit) || e.digit == 0)
      throw Error(ErrorCode::ValidationError, "digit " + std::to_string(e.digit) + " outside D\\{0}");
  }
}

NodeId PowerCircuit::clone_node(NodeId u) {
  Marking succ = node(u).succ;
  touched_ += 1 + succ.size();
  return add_node(std::move(succ));
}

Marking PowerCircuit::clone_marking(const Marking& m) {
  check_marking(m);
  Marking out(id_);
  for (const auto& e : m) out.set(clone_node(e.node), e.digit);
  return out;
}

Marking PowerCircuit::add(Marking&& k, Marking&& m) {
  check_marking(k);
  check_marking(m);
  Marking result = std::move(k);
  for (const auto& e : m) {
    ++touched_;
    const int existing = result.get(e.node);
    if (in_digits(existing + e.digit)) {
      result.set(e.node, existing + e.digit);
    } else {
      result.set(clone_node(e.node), e.digit);
    }
  }
  m.clear();
  return result;
}

Marking PowerCircuit::mult_by_power(Marking&& k, Marking&& m) {
  check_marking(k);
  check_marking(m);
  Marking kc = clone_marking(k);
  Marking mc = clone_marking(m);
  for (const auto& ke : kc) {
    Marking& succ = node(ke.node).succ;
    for (const auto& me : mc) {
      ++touched_;
      succ.set(me.node, me.digit);
    }
  }
  k.clear();
  m.clear();
  return kc;
}

Marking PowerCircuit::const_marking(long long n) {
  Marking out(id_);
  if (n == 0) return out;
  const int sign = n < 0 ? -1 : 1;
  unsigned long long a = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  // Node of value q^p for every needed exponent p, built on demand.
  std::unordered_map<unsigned long long, NodeId> power_node;
  std::function<NodeId(unsigned long long)> power = [&](unsigned long long p) -> NodeId {
    if (auto it = power_node.find(p); it != power_node.end()) return it->second;
    Marking succ(id_);
    unsigned long long rest = p;
    for (unsigned long long e = 0; rest != 0; ++e, rest /= static_cast<unsigned>(q_)) {
      const int d = static_cast<int>(rest % static_cast<unsigned>(q_));
      if (d != 0) succ.set(power(e), d);
    }
    const NodeId u = add_node(std::move(succ));
    power_node.emplace(p, u);
    return u;
  };
  for (unsigned long long e = 0; a != 0; ++e, a /= static_cast<unsigned>(q_)) {
    const int d = static_cast<int>(a % static_cast<unsigned>(q_));
    if (d != 0) out.set(power(e), sign * d);
  }
  return out;
}

bool PowerCircuit::is_acyclic() const {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<char> state(nodes_.size(), 0);
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  for (std::uint32_t root = 0; root < nodes_.size(); ++root) {
    if (!nodes_[root].alive || state[root]) continue;
    stack.push_back({root, 0});
    state[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto& succ = nodes_[u].succ.entries();
      if (next < succ.size()) {
        const auto v = index_of(succ[next++].node);
        if (state[v] == 1) return false;
        if (state[v] == 0) {
          state[v] = 1;
          stack.push_back({v, 0});
        }
      } else {
        state[u] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

Marking negate(Marking m) {
  m.negate();
  return m;
}

namespace {

class Evaluator {
 public:
  Evaluator(const PowerCircuit& c, std::size_t max_bits) : c_(c), max_bits_(max_bits) {}

  BigInt marking(const Marking& m) {
    BigInt v = 0;
    for (const auto& e : m) {
      v += e.digit * node(e.node);
      if (bit_length(v) > max_bits_ + 1) throw Error(ErrorCode::Overflow, "marking value exceeds bit budget");
    }
    return v;
  }

  const BigInt& node(NodeId u) {
    if (auto it = memo_.find(index_of(u)); it != memo_.end()) return it->second;
    if (on_path_.count(index_of(u))) throw Error(ErrorCode::ValidationError, "cycle through node");
    on_path_.insert({index_of(u), true});
    const BigInt exponent = marking(c_.successors(u));
    on_path_.erase(index_of(u));
    if (exponent < 0)
      throw Error(ErrorCode::NotAPowerCircuit,
                  "node " + std::to_string(index_of(u)) + " has negative successor value");
    return memo_.emplace(index_of(u), checked_pow(c_.base(), exponent, max_bits_)).first->second;
  }

 private:
  const PowerCircuit& c_;
  std::size_t max_bits_;
  std::unordered_map<std::uint32_t, BigInt> memo_;
  std::unordered_map<std::uint32_t, bool> on_path_;
};

}  // namespace

BigInt eval_marking(const PowerCircuit& c, const Marking& m, std::size_t max_bits) {
  c.check_marking(m);
  BigInt v = Evaluator(c, max_bits).marking(m);
  if (bit_length(v) > max_bits) throw Error(ErrorCode::Overflow, "marking value exceeds bit budget");
  return v;
}

BigInt eval_node(const PowerCircuit& c, NodeId u, std::size_t max_bits) {
  return Evaluator(c, max_bits).node(u);
}

}  // namespace pc
