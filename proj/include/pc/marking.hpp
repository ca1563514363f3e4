#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace pc {

enum class NodeId : std::uint32_t {};
inline constexpr std::uint32_t index_of(NodeId n) { return static_cast<std::uint32_t>(n); }

// Identifies the circuit a marking belongs to; 0 is "unbound".
using CircuitId = std::uint64_t;

// Sparse map node -> nonzero digit, kept sorted by node id.
class Marking {
 public:
  struct Entry {
    NodeId node;
    int digit;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Marking() = default;
  explicit Marking(CircuitId owner) : owner_(owner) {}
  Marking(CircuitId owner, std::initializer_list<Entry> entries);

  CircuitId owner() const { return owner_; }
  void rebind(CircuitId owner) { owner_ = owner; }

  int get(NodeId n) const;
  // Setting a zero digit removes the entry.
  void set(NodeId n, int digit);
  // Returns the new digit.
  int add(NodeId n, int delta);
  void erase(NodeId n) { set(n, 0); }
  bool contains(NodeId n) const { return get(n) != 0; }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  void clear() { entries_.clear(); }
  void negate();

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }

  friend bool operator==(const Marking& a, const Marking& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry>::iterator find(NodeId n);
  std::vector<Entry>::const_iterator find(NodeId n) const;

  CircuitId owner_ = 0;
  std::vector<Entry> entries_;
};

Marking operator-(Marking m);

}  // namespace pc
