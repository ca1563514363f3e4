#include "pc/marking.hpp"

#include <algorithm>

namespace pc {

Marking::Marking(CircuitId owner, std::initializer_list<Entry> entries) : owner_(owner) {
  for (const auto& e : entries) add(e.node, e.digit);
}

std::vector<Marking::Entry>::iterator Marking::find(NodeId n) {
  return std::lower_bound(entries_.begin(), entries_.end(), n,
                          [](const Entry& e, NodeId key) { return index_of(e.node) < index_of(key); });
}

std::vector<Marking::Entry>::const_iterator Marking::find(NodeId n) const {
  return std::lower_bound(entries_.begin(), entries_.end(), n,
                          [](const Entry& e, NodeId key) { return index_of(e.node) < index_of(key); });
}

int Marking::get(NodeId n) const {
  auto it = find(n);
  return it != entries_.end() && it->node == n ? it->digit : 0;
}

void Marking::set(NodeId n, int digit) {
  auto it = find(n);
  const bool present = it != entries_.end() && it->node == n;
  if (digit == 0) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->digit = digit;
  } else {
    entries_.insert(it, Entry{n, digit});
  }
}

int Marking::add(NodeId n, int delta) {
  const int d = get(n) + delta;
  set(n, d);
  return d;
}

void Marking::negate() {
  for (auto& e : entries_) e.digit = -e.digit;
}

Marking operator-(Marking m) {
  m.negate();
  return m;
}

}  // namespace pc
