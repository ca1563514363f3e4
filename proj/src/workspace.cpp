#include "pc/workspace.hpp"

#include "pc/error.hpp"

namespace pc {

Num& Num::operator=(Num&& o) noexcept {
  if (this != &o) {
    reset();
    ws_ = o.ws_;
    slot_ = o.slot_;
    o.ws_ = nullptr;
  }
  return *this;
}

void Num::reset() {
  if (ws_) ws_->release(slot_);
  ws_ = nullptr;
}

Workspace::Workspace(int q, Mode mode) : q_(q), mode_(mode) {
  if (mode == Mode::Treed)
    tc_.emplace(q);
  else
    rc_.emplace(q);
}

// Handles must not outlive the workspace; anything still live is simply
// dropped with it.
Workspace::~Workspace() = default;

std::size_t Workspace::size() const { return tc_ ? tc_->size() : rc_->size(); }
const PowerCircuit& Workspace::circuit() const { return tc_ ? tc_->circuit() : rc_->circuit(); }
const ReducedCircuit& Workspace::reduced() const { return tc_ ? tc_->reduced() : *rc_; }
PowerCircuit& Workspace::pc() { return tc_ ? tc_->circuit() : rc_->circuit(); }

const Workspace::Slot& Workspace::slot(const Num& a) const {
  if (a.ws_ != this) throw Error(ErrorCode::CircuitMismatch, "value belongs to another workspace");
  return slots_[a.slot_];
}

const Marking& Workspace::marking(const Num& a) const { return slot(a).m; }

Num Workspace::adopt(Marking m) {
  std::uint32_t s;
  if (!free_.empty()) {
    s = free_.back();
    free_.pop_back();
  } else {
    s = static_cast<std::uint32_t>(slots_.size());
    slots_.emplace_back();
  }
  Slot& sl = slots_[s];
  sl.live = true;
  if (tc_) {
    if (!tc_->is_treed_compact(m)) m = tc_->compactify_marking(std::move(m));
    sl.reg = tc_->register_marking(m);
  }
  weight_ += m.size();
  sl.m = std::move(m);
  ++live_;
  ++stats_.ops;
  maybe_gc();
  return Num(this, s);
}

void Workspace::release(std::uint32_t s) {
  Slot& sl = slots_[s];
  if (!sl.live) return;
  if (tc_) tc_->unregister_marking(sl.reg);
  weight_ -= sl.m.size();
  sl.m.clear();
  sl.live = false;
  --live_;
  free_.push_back(s);
}

void Workspace::absorb(std::uint32_t first, Marking& m) {
  std::vector<NodeId> fresh;
  for (std::uint32_t i = first; i < pc().id_bound(); ++i)
    if (pc().contains(NodeId{i})) fresh.push_back(NodeId{i});
  if (fresh.empty()) return;
  const std::uint64_t u = fresh.size();
  stats_.stated += (size() + u) * (u + 1);
  ++stats_.extends;
  if (tc_) {
    tc_->extend_tree(fresh, {&m});
  } else {
    rc_->extend_reduce(fresh, {&m});
  }
  if (size() > stats_.peak_size) stats_.peak_size = size();
}

void Workspace::maybe_gc() {
  if (!gc_on_ || size() < 2 * gc_mark_) return;
  collect_garbage();
  gc_mark_ = std::max<std::size_t>(64, size());
}

std::size_t Workspace::collect_garbage() {
  std::vector<NodeId> gone;
  if (tc_) {
    gone = tc_->collect_garbage();
  } else {
    std::vector<const Marking*> roots;
    for (const Slot& s : slots_)
      if (s.live) roots.push_back(&s.m);
    gone = rc_->collect_garbage(roots);
  }
  ++stats_.gc_runs;
  stats_.gc_removed += gone.size();
  return gone.size();
}

Num Workspace::zero() { return adopt(pc().empty_marking()); }

Num Workspace::constant(long long n) {
  const std::uint32_t first = pc().id_bound();
  Marking m = pc().const_marking(n);
  absorb(first, m);
  return adopt(std::move(m));
}

Num Workspace::copy(const Num& a) { return adopt(slot(a).m); }

Num Workspace::negate(const Num& a) { return adopt(pc::negate(slot(a).m)); }

Num Workspace::add(const Num& a, const Num& b) {
  Marking x = slot(a).m, y = slot(b).m;
  const std::uint32_t first = pc().id_bound();
  Marking m = pc().add(std::move(x), std::move(y));
  absorb(first, m);
  return adopt(std::move(m));
}

Num Workspace::sub(const Num& a, const Num& b) {
  Marking x = slot(a).m, y = pc::negate(slot(b).m);
  const std::uint32_t first = pc().id_bound();
  Marking m = pc().add(std::move(x), std::move(y));
  absorb(first, m);
  return adopt(std::move(m));
}

Num Workspace::mult_pow(const Num& k, const Num& m) {
  const Marking& km = slot(k).m;
  const Marking& mm = slot(m).m;
  if (km.empty() || mm.empty()) return copy(k);
  if (reduced().sign(mm) < 0 && !reduced().is_divisible_by_power(km, pc::negate(mm)))
    throw Error(ErrorCode::NotAPowerCircuit, "mult_pow result is not an integer");
  Marking x = km, y = mm;
  const std::uint32_t first = pc().id_bound();
  Marking r = pc().mult_by_power(std::move(x), std::move(y));
  absorb(first, r);
  return adopt(std::move(r));
}

Comparison Workspace::compare(const Num& a, const Num& b) const { return reduced().compare(slot(a).m, slot(b).m); }

int Workspace::sign(const Num& a) const { return reduced().sign(slot(a).m); }

bool Workspace::divides_pow(const Num& m, const Num& k) const {
  return reduced().is_divisible_by_power(slot(m).m, slot(k).m);
}

BigInt Workspace::eval(const Num& a, std::size_t max_bits) const { return eval_marking(circuit(), slot(a).m, max_bits); }

std::uint64_t Workspace::steps() const { return (tc_ ? tc_->steps() : rc_->steps()) + circuit().touched(); }

std::uint64_t Workspace::potential() const { return tc_ ? tc_->potential() : 0; }

std::size_t Workspace::bound_misses() const {
  return tc_ ? tc_->increment_bound_misses() + tc_->extend_bound_misses() : 0;
}

bool Workspace::validate() const {
  if (tc_) return tc_->validate();
  return check_reduced_invariants(*rc_);
}

}  // namespace pc
