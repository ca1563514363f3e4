#pragma once

// Shared fixtures for the unit and acceptance tests: the small circuits drawn
// used throughout the tests and a generator for random valid circuits.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "pc/circuit.hpp"

namespace pctest {

using pc::Marking;
using pc::NodeId;
using pc::PowerCircuit;

struct Named {
  PowerCircuit pc;
  std::map<std::string, NodeId> n;
  std::map<std::string, Marking> m;

  explicit Named(int q) : pc(q) {}
  NodeId node(const std::string& name) { return n[name] = pc.add_node(); }
  void edge(const std::string& a, const std::string& b, int d) { pc.set_edge(n.at(a), n.at(b), d); }
  Marking mark(std::initializer_list<std::pair<const char*, int>> digits) {
    Marking out(pc.id());
    for (auto [name, d] : digits) out.set(n.at(name), d);
    return out;
  }
};

// q=3; values 1, 3, 9, 9 and 1/27.
inline Named bad_graph() {
  Named f(3);
  for (auto s : {"u1", "u2", "u3", "u4", "u5"}) f.node(s);
  f.edge("u2", "u1", 1);
  f.edge("u3", "u1", 2);
  f.edge("u4", "u1", -1);
  f.edge("u4", "u2", -2);
  f.edge("u4", "u3", 1);
  f.edge("u5", "u2", 2);
  f.edge("u5", "u3", 1);
  f.edge("u5", "u4", -2);
  return f;
}

// q=2; M = 32 - 4 + 1 = 29.
inline Named value29() {
  Named f(2);
  for (auto s : {"1", "1a", "2", "4", "32"}) f.node(s);
  f.edge("2", "1", 1);
  f.edge("4", "1", 1);
  f.edge("4", "1a", 1);
  f.edge("32", "1", -1);
  f.edge("32", "2", 1);
  f.edge("32", "4", 1);
  f.m.emplace("M", f.mark({{"32", 1}, {"4", -1}, {"1", 1}}));
  return f;
}

// q=3; M = 2*27 - 9 = 45.
inline Named value45() {
  Named f(3);
  for (auto s : {"1", "3", "9", "27"}) f.node(s);
  f.edge("3", "1", 1);
  f.edge("9", "1", -1);
  f.edge("9", "3", 1);
  f.edge("27", "3", -2);
  f.edge("27", "9", 1);
  f.m.emplace("M", f.mark({{"27", 2}, {"9", -1}}));
  return f;
}

// q=2; K = 7, M = 35.
inline Named sum_7_35() {
  Named f(2);
  for (auto s : {"1", "2", "4", "16", "32", "2048"}) f.node(s);
  f.edge("2", "1", 1);
  f.edge("4", "2", 1);
  f.edge("16", "4", 1);
  f.edge("32", "1", 1);
  f.edge("32", "4", 1);
  f.edge("2048", "1", -1);
  f.edge("2048", "4", -1);
  f.edge("2048", "16", 1);
  f.m.emplace("K", f.mark({{"4", 1}, {"2", 1}, {"1", 1}}));
  f.m.emplace("M", f.mark({{"32", 1}, {"4", 1}, {"1", -1}}));
  return f;
}

// q=2; K = 6, M = 5.
inline Named pow_6_5() {
  Named f(2);
  for (auto s : {"1", "2", "4", "1a", "2a", "4a"}) f.node(s);
  f.edge("2", "1", 1);
  f.edge("4", "2", 1);
  f.edge("2a", "1", 1);
  f.edge("4a", "1", 1);
  f.edge("4a", "1a", 1);
  f.m.emplace("K", f.mark({{"4", 1}, {"2a", 1}}));
  f.m.emplace("M", f.mark({{"4a", 1}, {"1a", 1}}));
  return f;
}

// q=2; reduced part 1, 2, 4, 8 and pending nodes 2a, 256.
inline Named pending_256() {
  Named f(2);
  for (auto s : {"1", "2", "4", "8", "2a", "256"}) f.node(s);
  f.edge("2", "1", 1);
  f.edge("4", "2", 1);
  f.edge("8", "1", 1);
  f.edge("8", "2", 1);
  f.edge("2a", "1", 1);
  f.edge("256", "2a", 1);
  f.edge("256", "2", 1);
  f.edge("256", "4", 1);
  return f;
}

// Chain of n+1 nodes, each pointing at its predecessor with +1; the top
// evaluates to tow_q(n).
inline Named tower(int q, int n) {
  Named f(q);
  f.node("0");
  for (int i = 1; i <= n; ++i) {
    f.node(std::to_string(i));
    f.edge(std::to_string(i), std::to_string(i - 1), 1);
  }
  f.m.emplace("M", f.mark({{std::to_string(n).c_str(), 1}}));
  return f;
}

inline int digit(std::mt19937_64& rng, int q) {
  std::uniform_int_distribution<int> d(1, q - 1);
  return (rng() & 1) ? d(rng) : -d(rng);
}

// Random valid power circuit: every successor marking has value in
// [0, max_exp], so all node values fit in about max_exp*log2(q) bits.
inline PowerCircuit random_circuit(std::mt19937_64& rng, int q, int nodes, long max_exp = 40,
                                   double edge_prob = 0.35) {
  PowerCircuit pc(q);
  std::vector<pc::BigInt> value;
  std::vector<NodeId> ids;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < nodes; ++i) {
    Marking succ(pc.id());
    pc::BigInt e = 0;
    for (int attempt = 0; attempt < 20; ++attempt) {
      succ.clear();
      e = 0;
      for (std::size_t j = 0; j < ids.size(); ++j) {
        if (coin(rng) >= edge_prob) continue;
        const int d = digit(rng, q);
        succ.set(ids[j], d);
        e += d * value[j];
      }
      if (e >= 0 && e <= max_exp) break;
      succ.clear();
      e = 0;
    }
    ids.push_back(pc.add_node(std::move(succ)));
    value.push_back(pc::checked_pow(q, e, 1 << 16));
  }
  return pc;
}

inline Marking random_marking(std::mt19937_64& rng, const PowerCircuit& pc, double density = 0.4) {
  Marking m(pc.id());
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (NodeId u : pc.nodes())
    if (coin(rng) < density) m.set(u, digit(rng, pc.base()));
  return m;
}

}  // namespace pctest
