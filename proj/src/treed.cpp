#include "pc/treed.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pc/error.hpp"
#include "pc/power_sum.hpp"

namespace pc {

namespace {

using Rec = MarkTree::Record;

Rec succ_record(NodeId u) { return {Rec::Succ, index_of(u)}; }

}  // namespace

TreedCircuit::TreedCircuit(int q) : rc_(q), tree_(q) {}

TreedCircuit::TreedCircuit(PowerCircuit pc) : rc_(std::move(pc)), tree_(rc_.base()) {}

std::optional<std::size_t> TreedCircuit::marked_top(const Marking& m) const {
  for (const auto& e : m) {
    const std::size_t r = rc_.rank_of(e.node);
    if (r == ReducedCircuit::npos) throw Error(ErrorCode::NotReduced, "marking touches a pending node");
    if (!rc_.bit(r)) return r;
  }
  return std::nullopt;
}

bool TreedCircuit::is_chain_compact(const Marking& m) const {
  for (const auto& e : m) {
    const std::size_t r = rc_.rank_of(e.node);
    if (r == ReducedCircuit::npos) throw Error(ErrorCode::NotReduced, "marking touches a pending node");
    if (rc_.bit(r) && !compact_pair_ok(base(), e.digit, m.get(rc_.node_at(r + 1)))) return false;
  }
  return true;
}

bool TreedCircuit::is_treed_compact(const Marking& m) const { return !marked_top(m) && is_chain_compact(m); }

void TreedCircuit::repair_tops(const Marking& m) {
  while (auto r = marked_top(m)) prolong_chain(*r);
}

void TreedCircuit::compact_chains(Marking& m, bool base_only) {
  const int q = base();
  bool again = true;
  while (again) {
    again = false;
    std::vector<std::size_t> ranks;
    for (const auto& e : m) ranks.push_back(rc_.rank_of(e.node));
    std::sort(ranks.begin(), ranks.end());
    std::size_t done = 0;  // ranks below this are handled
    for (std::size_t r : ranks) {
      if (r < done) continue;
      const std::size_t b = rc_.chain_bottom(r);
      const std::size_t t = rc_.chain_top(r);
      done = t + 1;
      if (base_only && b != 0) break;
      std::vector<int> c(t - b + 1);
      for (std::size_t i = b; i <= t; ++i) c[i - b] = m.get(rc_.node_at(i));
      const PowerSum out = compactify(PowerSum(q, c));
      steps_ += 3 * c.size();
      if (out[c.size()] != 0) {
        // The compact form needs the node above the top.
        prolong_chain(t);
        again = true;
        break;
      }
      for (std::size_t i = b; i <= t; ++i) m.set(rc_.node_at(i), out[i - b]);
    }
  }
}

Marking TreedCircuit::compactify_marking(Marking m) {
  compact_chains(m, false);
  repair_tops(m);
  return m;
}

Marking TreedCircuit::increment_marking(const Marking& m) {
  const int q = base();
  if (!rc_.has_unit()) prolong_base_chain();
  const std::size_t size0 = size();
  const std::size_t ch0 = chain_count();
  Marking r = m;
  const NodeId u0 = rc_.node_at(0);
  const int a0 = r.get(u0);
  if (a0 < q - 1) {
    r.set(u0, a0 + 1);
  } else {
    if (!rc_.bit(0)) prolong_chain(0);
    r.set(u0, 0);
    const NodeId u1 = rc_.node_at(1);
    if (r.get(u1) + 1 >= q) throw Error(ErrorCode::NotCompact, "increment of a non-compact marking");
    r.add(u1, 1);
  }
  compact_chains(r, true);
  const long bound = 1 + static_cast<long>(ch0) - static_cast<long>(chain_count());
  if (static_cast<long>(size() - size0) > bound) ++inc_misses_;
  return r;
}

NodeId TreedCircuit::insert_at(std::size_t pos, NodeId u) {
  const auto& order = rc_.order();
  const bool below = pos > 0 && rc_.is_chain_step(order[pos - 1], u);
  const bool above = pos < order.size() && rc_.is_chain_step(u, order[pos]);
  const bool unit = pos == 0 && circuit().successors(u).empty();
  tree_.stretch(pos);
  rc_.insert_at(pos, u, below, above, unit);
  tree_.insert(digits(circuit().successors(u)), succ_record(u));
  steps_ += 1;
  // The chain below may have been marked at its old top.
  const Marking lu = circuit().successors(u);
  repair_tops(lu);
  return u;
}

NodeId TreedCircuit::insert_node(Marking succ) {
  succ.rebind(circuit().id());
  if (sign(succ) < 0) throw Error(ErrorCode::NotAPowerCircuit, "negative successor value");
  if (!is_chain_compact(succ)) throw Error(ErrorCode::NotCompact, "successor marking not compact");
  const auto hit = tree_.first_succ_at_least(digits(succ));
  if (hit.equal) throw Error(ErrorCode::DuplicateValue, "a node of this value exists");
  const std::size_t pos = hit.found ? rc_.rank_of(NodeId{hit.node}) : size();
  return insert_at(pos, circuit().add_node(std::move(succ)));
}

NodeId TreedCircuit::prolong_base_chain() {
  const std::size_t i = rc_.base_chain_length();
  std::vector<int> qary;
  for (std::size_t rest = i; rest != 0; rest /= static_cast<std::size_t>(base()))
    qary.push_back(static_cast<int>(rest % static_cast<std::size_t>(base())));
  const PowerSum c = compactify(PowerSum(base(), qary));
  Marking succ(circuit().id());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (k >= i) throw std::logic_error("base chain too short for its own length");
    succ.set(rc_.node_at(k), c[k]);
  }
  steps_ += c.size();
  return insert_at(i, circuit().add_node(std::move(succ)));
}

NodeId TreedCircuit::prolong_chain(std::size_t rank) {
  const NodeId top = rc_.node_at(rc_.chain_top(rank));
  Marking inc = increment_marking(circuit().successors(top));
  const auto hit = tree_.first_succ_at_least(digits(inc));
  if (hit.equal) throw std::logic_error("prolong_chain: value already present");
  const std::size_t pos = hit.found ? rc_.rank_of(NodeId{hit.node}) : size();
  if (pos != rc_.rank_of(top) + 1) throw std::logic_error("prolong_chain: misplaced node");
  return insert_at(pos, circuit().add_node(std::move(inc)));
}

TreeStats TreedCircuit::extend_tree(const std::vector<NodeId>& u, const std::vector<Marking*>& marks) {
  TreeStats stats;
  stats.absorbed = u.size();
  stats.chains_before = chain_count();
  const std::size_t size0 = size();
  const std::uint64_t steps0 = steps();
  const int q = base();
  for (NodeId x : u) {
    if (!circuit().contains(x)) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(index_of(x)));
    if (rc_.in_order(x)) throw Error(ErrorCode::ValidationError, "node already reduced");
  }
  const std::vector<NodeId> topo = topological_order(circuit(), u);

  auto carry = [&](Marking& m, std::size_t r, int d) {
    int alpha = m.get(rc_.node_at(r)) + d;
    while (!circuit().in_digits(alpha)) {
      const int beta = alpha > 0 ? 1 : -1;
      m.set(rc_.node_at(r), alpha - beta * q);
      ++steps_;
      if (!rc_.bit(r)) throw std::logic_error("carry left its chain");
      ++r;
      alpha = m.get(rc_.node_at(r)) + beta;
    }
    m.set(rc_.node_at(r), alpha);
  };

  for (std::size_t i = 0; i < topo.size(); ++i) {
    const NodeId x = topo[i];
    for (const auto& e : circuit().successors(x))
      if (!rc_.in_order(e.node)) throw Error(ErrorCode::ValidationError, "edge into a node outside the graph part");
    if (size() == 0) {
      if (!circuit().successors(x).empty()) throw Error(ErrorCode::ValidationError, "successor outside the reduced part");
      insert_at(0, x);
      continue;
    }
    if (sign(circuit().successors(x)) < 0)
      throw Error(ErrorCode::NotAPowerCircuit,
                  "node " + std::to_string(index_of(x)) + " has negative successor value");
    Marking lx = circuit().successors(x);
    compact_chains(lx, false);
    circuit().successors_mut(x) = lx;
    const auto hit = tree_.first_succ_at_least(digits(lx));
    if (!hit.equal) {
      insert_at(hit.found ? rc_.rank_of(NodeId{hit.node}) : size(), x);
      continue;
    }
    ++stats.collisions;
    const NodeId vj = NodeId{hit.node};
    prolong_chain(rc_.rank_of(vj));
    auto rewire = [&](Marking& m) {
      const int d = m.get(x);
      if (d == 0) return;
      m.erase(x);
      carry(m, rc_.rank_of(vj), d);
    };
    for (std::size_t t = i + 1; t < topo.size(); ++t) rewire(circuit().successors_mut(topo[t]));
    for (Marking* m : marks) rewire(*m);
    circuit().remove_node(x);
  }
  for (Marking* m : marks) *m = compactify_marking(std::move(*m));

  stats.chains_after = chain_count();
  stats.growth = size() - size0;
  stats.steps = steps() - steps0;
  const long bound = 4 * static_cast<long>(u.size()) + static_cast<long>(stats.chains_before) -
                     static_cast<long>(stats.chains_after);
  stats.within_bound = static_cast<long>(stats.growth) <= bound;
  if (!stats.within_bound) ++ext_misses_;
  return stats;
}

TreedCircuit::MarkId TreedCircuit::register_marking(Marking m) {
  if (m.owner() != circuit().id()) throw Error(ErrorCode::CircuitMismatch, "marking belongs to another circuit");
  if (!is_chain_compact(m)) throw Error(ErrorCode::NotCompact, "marking is not compact");
  repair_tops(m);
  MarkId id;
  if (!free_ids_.empty()) {
    id = free_ids_.back();
    free_ids_.pop_back();
  } else {
    id = static_cast<MarkId>(user_.size());
    user_.emplace_back();
  }
  tree_.insert(digits(m), {Rec::User, id});
  user_[id] = std::move(m);
  return id;
}

void TreedCircuit::unregister_marking(MarkId id) {
  if (!is_registered(id)) throw Error(ErrorCode::ValidationError, "marking is not registered");
  tree_.erase(digits(*user_[id]), {Rec::User, id});
  user_[id].reset();
  free_ids_.push_back(id);
}

const Marking& TreedCircuit::marking(MarkId id) const {
  if (!is_registered(id)) throw Error(ErrorCode::ValidationError, "marking is not registered");
  return *user_[id];
}

bool TreedCircuit::is_registered(MarkId id) const { return id < user_.size() && user_[id].has_value(); }

std::vector<const Marking*> TreedCircuit::registered() const {
  std::vector<const Marking*> out;
  for (const auto& m : user_)
    if (m) out.push_back(&*m);
  return out;
}

std::vector<NodeId> TreedCircuit::collect_garbage(const std::vector<const Marking*>& extra_roots) {
  std::vector<const Marking*> roots = registered();
  roots.insert(roots.end(), extra_roots.begin(), extra_roots.end());
  return rc_.collect_garbage(roots, [&](NodeId v, std::size_t pos) {
    tree_.erase(digits(circuit().successors(v)), succ_record(v));
    tree_.erase_level(pos);
  });
}

bool TreedCircuit::validate() const {
  if (!check_reduced_invariants(rc_)) return false;
  if (!tree_.consistent() || tree_.ranks() != size()) return false;
  using Entry = std::pair<std::vector<int>, std::pair<int, std::uint32_t>>;
  std::vector<Entry> expect, got;
  for (NodeId v : rc_.order()) {
    const Marking& l = circuit().successors(v);
    if (!is_treed_compact(l)) return false;
    expect.push_back({digits(l), {Rec::Succ, index_of(v)}});
  }
  for (MarkId id = 0; id < user_.size(); ++id) {
    if (!user_[id]) continue;
    if (!is_treed_compact(*user_[id])) return false;
    expect.push_back({digits(*user_[id]), {Rec::User, id}});
  }
  for (const auto& leaf : tree_.leaves())
    for (const auto& r : leaf.records) got.push_back({leaf.digits, {r.kind, r.id}});
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  return expect == got;
}

MakeTreeResult make_tree(PowerCircuit pc, const std::vector<Marking*>& marks) {
  TreedCircuit tc(std::move(pc));
  const auto all = tc.unreduced();
  auto stats = tc.extend_tree(all, marks);
  if (tc.size() > 4 * all.size()) stats.within_bound = false;
  return {std::move(tc), stats};
}

}  // namespace pc
