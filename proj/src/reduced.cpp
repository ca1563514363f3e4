#include "pc/reduced.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "pc/error.hpp"

namespace pc {

namespace {

void check_bound(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("bound violated: ") + what);
}

}  // namespace

void ReducedCircuit::check_reduced(const Marking& m) const {
  if (m.owner() != pc_.id()) throw Error(ErrorCode::CircuitMismatch, "marking belongs to another circuit");
  for (const auto& e : m)
    if (!in_order(e.node))
      throw Error(ErrorCode::NotReduced, "marking touches node " + std::to_string(index_of(e.node)) +
                                             " outside the reduced part");
}

Comparison ReducedCircuit::compare(const Marking& k, const Marking& m) const {
  check_reduced(k);
  check_reduced(m);
  // delta = K - M by rank, highest rank first
  std::vector<std::pair<std::size_t, int>> d;
  d.reserve(k.size() + m.size());
  for (const auto& e : k) d.push_back({rank_of(e.node), e.digit});
  for (const auto& e : m) d.push_back({rank_of(e.node), -e.digit});
  std::sort(d.begin(), d.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (w > 0 && d[w - 1].first == d[i].first) {
      d[w - 1].second += d[i].second;
      if (d[w - 1].second == 0) --w;
    } else {
      d[w++] = d[i];
    }
  }
  d.resize(w);
  steps_ += d.size() + 1;

  const int q = pc_.base();
  std::size_t idx = 0;
  while (idx < d.size()) {
    std::size_t r = d[idx].first;
    long acc = d[idx].second;
    ++idx;
    while (acc != 0) {
      ++steps_;
      const auto ord = acc > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
      if (acc >= 2 || acc <= -2) return {ord, false};
      if (r > 0 && bits_[r - 1]) {
        --r;
        int dr = 0;
        if (idx < d.size() && d[idx].first == r) dr = d[idx++].second;
        acc = acc * q + dr;
      } else {
        return {ord, r == 0 && has_unit_};
      }
    }
  }
  return {std::strong_ordering::equal, false};
}

int ReducedCircuit::sign(const Marking& m) const {
  const auto c = compare(m, Marking(pc_.id()));
  return c.order < 0 ? -1 : (c.order > 0 ? 1 : 0);
}

bool ReducedCircuit::is_divisible_by_power(const Marking& m, const Marking& k) const {
  check_reduced(m);
  check_reduced(k);
  if (m.empty()) return true;
  NodeId low = m.begin()->node;
  for (const auto& e : m)
    if (rank_of(e.node) < rank_of(low)) low = e.node;
  return compare(k, pc_.successors(low)).order <= 0;
}

bool ReducedCircuit::is_chain_step(NodeId lower, NodeId upper) const {
  const auto c = compare(pc_.successors(lower), pc_.successors(upper));
  return c.order < 0 && c.unit_diff;
}

std::size_t ReducedCircuit::base_chain_length() const {
  if (!has_unit_) return 0;
  std::size_t len = 1;
  while (bit(len - 1)) ++len;
  return len;
}

std::size_t ReducedCircuit::chain_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), false));
}

std::size_t ReducedCircuit::chain_top(std::size_t rank) const {
  while (bit(rank)) ++rank;
  return rank;
}

std::size_t ReducedCircuit::chain_bottom(std::size_t rank) const {
  while (rank > 0 && bits_[rank - 1]) --rank;
  return rank;
}

void ReducedCircuit::renumber_from(std::size_t pos) {
  if (rank_.size() < pc_.id_bound()) rank_.resize(pc_.id_bound(), npos);
  for (std::size_t i = pos; i < order_.size(); ++i) rank_[index_of(order_[i])] = i;
}

void ReducedCircuit::insert_at(std::size_t pos, NodeId u, bool bit_below, bool bit_above, bool is_unit) {
  order_.insert(order_.begin() + static_cast<std::ptrdiff_t>(pos), u);
  bits_.insert(bits_.begin() + static_cast<std::ptrdiff_t>(pos), bit_above && pos + 1 < order_.size());
  if (pos > 0) bits_[pos - 1] = bit_below;
  if (pos == 0) has_unit_ = is_unit;
  renumber_from(pos);
  steps_ += order_.size() - pos;
}

void ReducedCircuit::erase_at(std::size_t pos) {
  rank_[index_of(order_[pos])] = npos;
  order_.erase(order_.begin() + static_cast<std::ptrdiff_t>(pos));
  bits_.erase(bits_.begin() + static_cast<std::ptrdiff_t>(pos));
  // Neighbours of a removed power of q differ by at least q^2.
  if (pos > 0) bits_[pos - 1] = false;
  if (pos == 0) has_unit_ = false;
  renumber_from(pos);
  steps_ += order_.size() - pos + 1;
}

std::vector<int> ReducedCircuit::dense_digits(const Marking& m) const {
  check_reduced(m);
  std::vector<int> out(order_.size(), 0);
  for (const auto& e : m) out[rank_of(e.node)] = e.digit;
  return out;
}

NodeId ReducedCircuit::prolong_base_chain() {
  const std::size_t i = base_chain_length();
  const int q = pc_.base();
  Marking succ(pc_.id());
  std::size_t pos = 0;
  for (std::size_t rest = i; rest != 0; rest /= static_cast<std::size_t>(q), ++pos) {
    check_bound(pos < i, "base chain digits");
    const int d = static_cast<int>(rest % static_cast<std::size_t>(q));
    if (d != 0) succ.set(order_[pos], d);
  }
  const NodeId u = pc_.add_node(std::move(succ));
  const bool above = i < order_.size() && is_chain_step(u, order_[i]);
  insert_at(i, u, i > 0, above, i == 0);
  return u;
}

std::vector<NodeId> ReducedCircuit::unreduced() const {
  std::vector<NodeId> out;
  for (NodeId u : pc_.nodes())
    if (!in_order(u)) out.push_back(u);
  return out;
}

std::vector<NodeId> topological_order(const PowerCircuit& pc, const std::vector<NodeId>& u) {
  // Successors first: depth-first post-order, ties by ascending id.
  std::vector<char> pending(pc.id_bound(), 0);
  for (NodeId x : u) pending[index_of(x)] = 1;
  std::vector<NodeId> topo;
  topo.reserve(u.size());
  std::vector<NodeId> roots = u;
  std::sort(roots.begin(), roots.end());
  std::vector<char> state(pc.id_bound(), 0);
  std::vector<std::pair<NodeId, std::size_t>> stack;
  for (NodeId r : roots) {
    if (state[index_of(r)]) continue;
    state[index_of(r)] = 1;
    stack.push_back({r, 0});
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      const auto& succ = pc.successors(x).entries();
      if (next < succ.size()) {
        const NodeId y = succ[next++].node;
        if (!pending[index_of(y)]) continue;
        if (state[index_of(y)] == 1) throw Error(ErrorCode::ValidationError, "cycle in graph");
        if (state[index_of(y)] == 0) {
          state[index_of(y)] = 1;
          stack.push_back({y, 0});
        }
      } else {
        state[index_of(x)] = 2;
        topo.push_back(x);
        stack.pop_back();
      }
    }
  }
  return topo;
}

ExtendStats ReducedCircuit::extend_reduce(const std::vector<NodeId>& u, const std::vector<Marking*>& marks) {
  ExtendStats stats;
  stats.absorbed = u.size();
  const std::size_t start = order_.size();
  if (rank_.size() < pc_.id_bound()) rank_.resize(pc_.id_bound(), npos);

  std::vector<char> pending(pc_.id_bound(), 0);
  for (NodeId x : u) {
    if (!pc_.contains(x)) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(index_of(x)));
    if (in_order(x)) throw Error(ErrorCode::ValidationError, "node already reduced");
    pending[index_of(x)] = 1;
  }

  const std::vector<NodeId> topo = topological_order(pc_, u);

  for (const Marking* m : marks)
    for (const auto& e : *m) stats.initial_weight += static_cast<std::size_t>(std::abs(e.digit));
  for (NodeId x : u)
    for (const auto& e : pc_.successors(x)) stats.initial_weight += static_cast<std::size_t>(std::abs(e.digit));

  const int q = pc_.base();
  auto carry = [&](Marking& m, std::size_t r, int d) {
    int alpha = m.get(order_[r]) + d;
    while (!pc_.in_digits(alpha)) {
      const int beta = alpha > 0 ? 1 : -1;
      m.set(order_[r], alpha - beta * q);
      ++stats.carry_steps;
      ++steps_;
      check_bound(bit(r), "carry left its chain");
      ++r;
      alpha = m.get(order_[r]) + beta;
    }
    m.set(order_[r], alpha);
  };

  for (std::size_t i = 0; i < topo.size(); ++i) {
    const NodeId x = topo[i];
    pending[index_of(x)] = 0;
    const Marking& lx = pc_.successors(x);
    for (const auto& e : lx)
      if (!in_order(e.node)) throw Error(ErrorCode::ValidationError, "edge into a node outside the graph part");
    if (order_.empty()) {
      if (!lx.empty()) throw Error(ErrorCode::ValidationError, "successor outside the reduced part");
      insert_at(0, x, false, false, true);
      continue;
    }
    const int sx = sign(lx);
    if (sx < 0)
      throw Error(ErrorCode::NotAPowerCircuit,
                  "node " + std::to_string(index_of(x)) + " has negative successor value");

    std::size_t lo = 0, hi = order_.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (compare(lx, pc_.successors(order_[mid])).order <= 0)
        hi = mid;
      else
        lo = mid + 1;
    }
    const std::size_t j = lo;
    if (j == order_.size() || compare(lx, pc_.successors(order_[j])).order != 0) {
      const bool below = j > 0 && is_chain_step(order_[j - 1], x);
      const bool above = j < order_.size() && is_chain_step(x, order_[j]);
      insert_at(j, x, below, above, sx == 0);
      continue;
    }

    ++stats.collisions;
    const NodeId vj = order_[j];
    const NodeId vk = order_[chain_top(j)];
    Marking lv = pc_.successors(vk);
    std::size_t len = base_chain_length();
    std::size_t l = 0;
    while (l < len && lv.get(order_[l]) == q - 1) ++l;
    if (l == len) {
      prolong_base_chain();
      ++stats.prolongations;
    }
    for (std::size_t t = 0; t < l; ++t) lv.erase(order_[t]);
    lv.add(order_[l], 1);
    const NodeId v = pc_.add_node(std::move(lv));
    const std::size_t k = rank_of(vk);
    const bool above = k + 1 < order_.size() && is_chain_step(v, order_[k + 1]);
    insert_at(k + 1, v, true, above, false);

    auto rewire = [&](Marking& m) {
      const int d = m.get(x);
      if (d == 0) return;
      m.erase(x);
      carry(m, rank_of(vj), d);
    };
    for (std::size_t t = i + 1; t < topo.size(); ++t) rewire(pc_.successors_mut(topo[t]));
    for (Marking* m : marks) rewire(*m);
    pc_.remove_node(x);
  }

  stats.growth = order_.size() - start;
  check_bound(stats.growth <= 2 * u.size(), "extend_reduce growth");
  check_bound(stats.carry_steps <= stats.initial_weight, "extend_reduce carries");
  return stats;
}

std::vector<NodeId> ReducedCircuit::collect_garbage(const std::vector<const Marking*>& roots,
                                                    const std::function<void(NodeId, std::size_t)>& on_remove) {
  std::vector<std::size_t> ref(pc_.id_bound(), 0);
  for (NodeId v : pc_.nodes())
    for (const auto& e : pc_.successors(v)) ++ref[index_of(e.node)];
  for (const Marking* m : roots)
    for (const auto& e : *m) ++ref[index_of(e.node)];

  std::vector<NodeId> removed;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t pos = order_.size(); pos-- > 0;) {
      const NodeId v = order_[pos];
      if (ref[index_of(v)] != 0) continue;
      if (pos > 0 && bits_[pos - 1]) {
        const NodeId below = order_[pos - 1];
        const std::size_t own = pc_.successors(v).contains(below) ? 1 : 0;
        if (ref[index_of(below)] != own) continue;
      }
      for (const auto& e : pc_.successors(v)) --ref[index_of(e.node)];
      if (on_remove) on_remove(v, pos);
      erase_at(pos);
      pc_.remove_node(v);
      removed.push_back(v);
      again = true;
    }
  }
  return removed;
}

ReduceResult reduce(PowerCircuit pc, const std::vector<Marking*>& marks) {
  ReducedCircuit rc(std::move(pc));
  const auto all = rc.unreduced();
  const auto stats = rc.extend_reduce(all, marks);
  check_bound(rc.size() <= 2 * all.size(), "reduce growth");
  return {std::move(rc), stats};
}

bool is_power_circuit(const PowerCircuit& pc) {
  try {
    reduce(pc, {});
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotAPowerCircuit) return false;
    throw;
  }
}

bool check_reduced_invariants(const ReducedCircuit& rc, std::size_t max_bits) {
  const auto& order = rc.order();
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rc.rank_of(order[i]) != i) return false;
    for (const auto& e : rc.circuit().successors(order[i]))
      if (!rc.in_order(e.node)) return false;
  }
  if (n > 0 && rc.bit(n - 1)) return false;

  std::vector<BigInt> value;
  try {
    for (NodeId u : order) value.push_back(eval_node(rc.circuit(), u, max_bits));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
    value.clear();
  }
  const int q = rc.base();
  if (value.size() == n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(value[i] < value[j])) return false;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (rc.bit(i) != (value[i] * q == value[i + 1])) return false;
    if (n > 0 && rc.has_unit() != (value[0] == 1)) return false;
    return true;
  }
  const auto& pc = rc.circuit();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rc.compare(pc.successors(order[i]), pc.successors(order[j])).order >= 0) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (rc.bit(i) != rc.is_chain_step(order[i], order[i + 1])) return false;
  if (n > 0 && rc.has_unit() != (rc.sign(pc.successors(order[0])) == 0)) return false;
  return true;
}

}  // namespace pc
