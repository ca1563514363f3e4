#include "pc/mark_tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pc {

MarkTree::MarkTree(int q) : q_(q), width_(static_cast<std::size_t>(2 * q - 1)) {
  levels_.emplace_back();
  root_ = alloc(-1, 0, 0);
}

std::int32_t MarkTree::alloc(std::int32_t parent, int label, std::size_t depth) {
  std::int32_t x;
  if (!free_.empty()) {
    x = free_.back();
    free_.pop_back();
    nodes_[static_cast<std::size_t>(x)] = TNode{};
  } else {
    x = static_cast<std::int32_t>(nodes_.size());
    nodes_.emplace_back();
    children_.resize(children_.size() + width_);
  }
  std::fill_n(children_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(x) * width_), width_, -1);
  auto& t = nodes_[static_cast<std::size_t>(x)];
  t.parent = parent;
  t.label = static_cast<std::int8_t>(label);
  t.level_pos = static_cast<std::int32_t>(levels_[depth].size());
  levels_[depth].push_back(x);
  ++steps_;
  return x;
}

void MarkTree::release(std::int32_t x, std::size_t depth) {
  auto& level = levels_[depth];
  const auto pos = static_cast<std::size_t>(nodes_[static_cast<std::size_t>(x)].level_pos);
  level[pos] = level.back();
  nodes_[static_cast<std::size_t>(level[pos])].level_pos = static_cast<std::int32_t>(pos);
  level.pop_back();
  nodes_[static_cast<std::size_t>(x)].records.clear();
  nodes_[static_cast<std::size_t>(x)].level_pos = -1;
  free_.push_back(x);
  ++steps_;
}

bool MarkTree::has_children(std::int32_t x) const {
  for (int l = -(q_ - 1); l <= q_ - 1; ++l)
    if (child(x, l) >= 0) return true;
  return false;
}

void MarkTree::insert(const std::vector<int>& digits, Record r) {
  if (digits.size() != n_) throw std::logic_error("mark tree: path length mismatch");
  std::int32_t x = root_;
  std::vector<std::int32_t> path{x};
  for (std::size_t d = 0; d < n_; ++d) {
    const int l = digits[n_ - 1 - d];
    std::int32_t c = child(x, l);
    if (c < 0) {
      c = alloc(x, l, d + 1);
      child(x, l) = c;
    }
    x = c;
    path.push_back(x);
    ++steps_;
  }
  nodes_[static_cast<std::size_t>(x)].records.push_back(r);
  if (r.kind == Record::Succ)
    for (auto p : path) ++nodes_[static_cast<std::size_t>(p)].succ;
}

std::int32_t MarkTree::find_leaf(const std::vector<int>& digits) const {
  if (digits.size() != n_) throw std::logic_error("mark tree: path length mismatch");
  std::int32_t x = root_;
  for (std::size_t d = 0; d < n_ && x >= 0; ++d) {
    x = child(x, digits[n_ - 1 - d]);
    ++steps_;
  }
  return x;
}

bool MarkTree::contains(const std::vector<int>& digits, Record r) const {
  const auto x = find_leaf(digits);
  if (x < 0) return false;
  const auto& recs = nodes_[static_cast<std::size_t>(x)].records;
  return std::find(recs.begin(), recs.end(), r) != recs.end();
}

void MarkTree::erase(const std::vector<int>& digits, Record r) {
  std::int32_t x = find_leaf(digits);
  if (x < 0) throw std::logic_error("mark tree: erasing a missing path");
  auto& recs = nodes_[static_cast<std::size_t>(x)].records;
  auto it = std::find(recs.begin(), recs.end(), r);
  if (it == recs.end()) throw std::logic_error("mark tree: erasing a missing record");
  recs.erase(it);
  const bool succ = r.kind == Record::Succ;
  std::size_t depth = n_;
  for (std::int32_t y = x; y >= 0;) {
    auto& t = nodes_[static_cast<std::size_t>(y)];
    if (succ) --t.succ;
    const std::int32_t parent = t.parent;
    if (y != root_ && t.records.empty() && !has_children(y)) {
      child(parent, t.label) = -1;
      release(y, depth);
    }
    y = parent;
    --depth;
    ++steps_;
  }
}

void MarkTree::stretch(std::size_t rank) {
  if (rank > n_) throw std::logic_error("mark tree: stretch past the top");
  const std::size_t d = n_ - rank;
  levels_.insert(levels_.begin() + static_cast<std::ptrdiff_t>(d + 1), std::vector<std::int32_t>{});
  const std::vector<std::int32_t> parents = levels_[d];
  for (std::int32_t x : parents) {
    const std::int32_t y = alloc(x, 0, d + 1);
    for (int l = -(q_ - 1); l <= q_ - 1; ++l) {
      const std::int32_t c = child(x, l);
      child(y, l) = c;
      if (c >= 0) nodes_[static_cast<std::size_t>(c)].parent = y;
      child(x, l) = -1;
    }
    child(x, 0) = y;
    auto& tx = nodes_[static_cast<std::size_t>(x)];
    auto& ty = nodes_[static_cast<std::size_t>(y)];
    ty.succ = tx.succ;
    ty.records = std::move(tx.records);
    tx.records.clear();
  }
  ++n_;
}

void MarkTree::erase_level(std::size_t rank) {
  if (rank >= n_) throw std::logic_error("mark tree: erasing a missing level");
  const std::size_t d = n_ - 1 - rank;
  const std::vector<std::int32_t> parents = levels_[d];
  for (std::int32_t x : parents) {
    const std::int32_t y = child(x, 0);
    for (int l = -(q_ - 1); l <= q_ - 1; ++l)
      if (l != 0 && child(x, l) >= 0) throw std::logic_error("mark tree: level still in use");
    if (y < 0) continue;
    for (int l = -(q_ - 1); l <= q_ - 1; ++l) {
      const std::int32_t c = child(y, l);
      child(x, l) = c;
      if (c >= 0) nodes_[static_cast<std::size_t>(c)].parent = x;
    }
    nodes_[static_cast<std::size_t>(x)].records = std::move(nodes_[static_cast<std::size_t>(y)].records);
    nodes_[static_cast<std::size_t>(y)].level_pos = -1;
    nodes_[static_cast<std::size_t>(y)].records.clear();
    free_.push_back(y);
    ++steps_;
  }
  levels_.erase(levels_.begin() + static_cast<std::ptrdiff_t>(d + 1));
  --n_;
}

MarkTree::Hit MarkTree::first_succ_at_least(const std::vector<int>& digits) const {
  if (digits.size() != n_) throw std::logic_error("mark tree: path length mismatch");
  auto succ = [&](std::int32_t x) { return x >= 0 && nodes_[static_cast<std::size_t>(x)].succ > 0; };
  auto first_succ = [&](std::int32_t leaf) {
    for (const auto& r : nodes_[static_cast<std::size_t>(leaf)].records)
      if (r.kind == Record::Succ) return r.id;
    throw std::logic_error("mark tree: counter without record");
  };
  std::int32_t x = root_;
  std::int32_t cand = -1;
  std::size_t cand_depth = 0;
  bool exact = succ(x);
  for (std::size_t d = 0; d < n_ && exact; ++d) {
    const int t = digits[n_ - 1 - d];
    for (int l = t + 1; l <= q_ - 1; ++l) {
      ++steps_;
      if (succ(child(x, l))) {
        cand = child(x, l);
        cand_depth = d + 1;
        break;
      }
    }
    const std::int32_t c = child(x, t);
    if (!succ(c)) {
      exact = false;
      break;
    }
    x = c;
  }
  if (exact) return {true, true, first_succ(x)};
  if (cand < 0) return {};
  x = cand;
  for (std::size_t d = cand_depth; d < n_; ++d) {
    for (int l = -(q_ - 1); l <= q_ - 1; ++l) {
      ++steps_;
      if (succ(child(x, l))) {
        x = child(x, l);
        break;
      }
    }
  }
  return {true, false, first_succ(x)};
}

std::vector<MarkTree::Leaf> MarkTree::leaves() const {
  std::vector<Leaf> out;
  std::vector<int> path(n_, 0);
  std::function<void(std::int32_t, std::size_t)> walk = [&](std::int32_t x, std::size_t d) {
    if (d == n_) {
      if (!nodes_[static_cast<std::size_t>(x)].records.empty())
        out.push_back({path, nodes_[static_cast<std::size_t>(x)].records});
      return;
    }
    for (int l = -(q_ - 1); l <= q_ - 1; ++l) {
      const std::int32_t c = child(x, l);
      if (c < 0) continue;
      path[n_ - 1 - d] = l;
      walk(c, d + 1);
    }
  };
  walk(root_, 0);
  return out;
}

bool MarkTree::consistent() const {
  if (levels_.size() != n_ + 1) return false;
  std::vector<std::int32_t> depth(nodes_.size(), -1);
  for (std::size_t d = 0; d <= n_; ++d)
    for (std::size_t i = 0; i < levels_[d].size(); ++i) {
      const auto x = levels_[d][i];
      if (nodes_[static_cast<std::size_t>(x)].level_pos != static_cast<std::int32_t>(i)) return false;
      depth[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(d);
    }
  bool ok = true;
  std::function<std::int32_t(std::int32_t, std::size_t)> walk = [&](std::int32_t x, std::size_t d) -> std::int32_t {
    if (depth[static_cast<std::size_t>(x)] != static_cast<std::int32_t>(d)) ok = false;
    std::int32_t s = 0;
    const auto& t = nodes_[static_cast<std::size_t>(x)];
    for (const auto& r : t.records) s += r.kind == Record::Succ;
    if (d < n_ && !t.records.empty()) ok = false;
    if (d == n_ && x != root_ && t.records.empty()) ok = false;
    if (d < n_ && x != root_ && !has_children(x)) ok = false;
    for (int l = -(q_ - 1); l <= q_ - 1; ++l) {
      const std::int32_t c = child(x, l);
      if (c < 0) continue;
      if (nodes_[static_cast<std::size_t>(c)].parent != x || nodes_[static_cast<std::size_t>(c)].label != l) ok = false;
      s += walk(c, d + 1);
    }
    if (s != t.succ) ok = false;
    return s;
  };
  walk(root_, 0);
  std::size_t live = 0;
  for (const auto& level : levels_) live += level.size();
  return ok && live == node_count();
}

}  // namespace pc
