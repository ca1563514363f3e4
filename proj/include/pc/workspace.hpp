#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pc/reduced.hpp"
#include "pc/treed.hpp"

namespace pc {

enum class Mode { Simple, Treed };

class Workspace;

// Owning handle to one integer held by a Workspace. Releases its marking on
// destruction. The workspace must outlive every Num it handed out.
class Num {
 public:
  Num() = default;
  Num(Num&& o) noexcept : ws_(o.ws_), slot_(o.slot_) { o.ws_ = nullptr; }
  Num& operator=(Num&& o) noexcept;
  Num(const Num&) = delete;
  Num& operator=(const Num&) = delete;
  ~Num() { reset(); }

  bool valid() const { return ws_ != nullptr; }
  Workspace* workspace() const { return ws_; }
  std::uint32_t slot() const { return slot_; }
  void reset();

 private:
  friend class Workspace;
  Num(Workspace* ws, std::uint32_t slot) : ws_(ws), slot_(slot) {}
  Workspace* ws_ = nullptr;
  std::uint32_t slot_ = 0;
};

struct WorkspaceStats {
  std::uint64_t ops = 0;
  std::uint64_t extends = 0;
  // Sum over extend calls of the stated amortized cost (|G|+|U|)(|U|+m).
  std::uint64_t stated = 0;
  std::uint64_t gc_runs = 0;
  std::uint64_t gc_removed = 0;
  std::size_t peak_size = 0;
  std::size_t bound_misses = 0;
};

// All integers of one computation, kept as markings in a single circuit that
// stays reduced (or treed) between operations.
class Workspace {
 public:
  explicit Workspace(int q, Mode mode = Mode::Treed);
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;
  ~Workspace();

  int base() const { return q_; }
  Mode mode() const { return mode_; }
  std::size_t size() const;
  const PowerCircuit& circuit() const;
  const ReducedCircuit& reduced() const;
  const TreedCircuit* treed() const { return tc_ ? &*tc_ : nullptr; }

  Num zero();
  Num constant(long long n);
  Num copy(const Num& a);
  Num negate(const Num& a);
  Num add(const Num& a, const Num& b);
  Num sub(const Num& a, const Num& b);
  // e(k) * q^e(m). The result must be an integer.
  Num mult_pow(const Num& k, const Num& m);

  Comparison compare(const Num& a, const Num& b) const;
  int sign(const Num& a) const;
  bool is_zero(const Num& a) const { return marking(a).empty(); }
  // q^e(k) divides e(m); e(k) >= 0.
  bool divides_pow(const Num& m, const Num& k) const;
  BigInt eval(const Num& a, std::size_t max_bits = kDefaultMaxBits) const;

  const Marking& marking(const Num& a) const;
  std::size_t support(const Num& a) const { return marking(a).size(); }
  // Total support of all live values.
  std::size_t weight() const { return weight_; }
  std::size_t live() const { return live_; }

  void set_gc(bool on) { gc_on_ = on; }
  std::size_t collect_garbage();

  const WorkspaceStats& stats() const { return stats_; }
  std::uint64_t steps() const;
  std::uint64_t potential() const;
  std::size_t bound_misses() const;
  bool validate() const;

 private:
  friend class Num;
  struct Slot {
    bool live = false;
    Marking m;
    TreedCircuit::MarkId reg = 0;
  };
  PowerCircuit& pc();
  const Slot& slot(const Num& a) const;
  Num adopt(Marking m);
  void release(std::uint32_t s);
  // Absorbs nodes with ids >= first and fixes `m`.
  void absorb(std::uint32_t first, Marking& m);
  void maybe_gc();

  int q_;
  Mode mode_;
  std::optional<ReducedCircuit> rc_;
  std::optional<TreedCircuit> tc_;
  std::vector<Slot> slots_;
  std::vector<std::uint32_t> free_;
  std::size_t weight_ = 0;
  std::size_t live_ = 0;
  bool gc_on_ = true;
  std::size_t gc_mark_ = 64;
  WorkspaceStats stats_;
};

}  // namespace pc
