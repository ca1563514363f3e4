#include "pc/higman.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "pc/error.hpp"

namespace pc {

namespace {

Triple at(Triple t, int factor) {
  t.factor = factor;
  return t;
}

Triple mul(Workspace& ws, const Triple& a, const Triple& b) { return triple_mul(ws, a, b); }

bool nonzero(Workspace& ws, const Num& n) { return !ws.is_zero(n); }

// First coordinate u q^x is an integer.
bool integral_first(Workspace& ws, const Triple& t) {
  Num nx = ws.negate(t.x);
  return ws.divides_pow(t.u, nx);
}

// One L step on adjacent pairs; nullopt when no rule applies.
std::optional<Pair> combine(Workspace& ws, const Pair& a, const Pair& b, LStats& st) {
  const int i = a.sub, j = b.sub;
  if (i == j) {
    ++st.rule[1];
    return Pair{i, mul(ws, a.t, b.t)};
  }
  if (j == i + 1) {
    if (is_in_a(ws, b.t)) {
      ++st.rule[2];
      return Pair{i, mul(ws, a.t, at(swap_a_to_t(ws, b.t), i))};
    }
    if (is_in_t(ws, a.t)) {
      ++st.rule[5];
      return Pair{j, mul(ws, at(swap_t_to_a(ws, a.t), j), b.t)};
    }
    return std::nullopt;
  }
  if (i == j + 1) {
    if (is_in_a(ws, a.t)) {
      ++st.rule[3];
      return Pair{j, mul(ws, at(swap_a_to_t(ws, a.t), j), b.t)};
    }
    if (is_in_t(ws, b.t)) {
      ++st.rule[4];
      return Pair{i, mul(ws, a.t, at(swap_t_to_a(ws, b.t), i))};
    }
  }
  return std::nullopt;
}

// The x_i of rules 6 and 7 are exponents of generators, hence integers.

// Rule 6 at position p: (x1,-x2)_1 (x2,-x3)_2 ... (y,xe)_{e-1}.
std::optional<std::pair<Pair, Pair>> rule6(Workspace& ws, const std::vector<Pair>& s, std::size_t p, int e) {
  for (int j = 1; j <= e - 1; ++j)
    if (s[p + j - 1].sub != j) return std::nullopt;
  const Triple& first = s[p].t;
  if (!nonzero(ws, first.u) || !integral_first(ws, first)) return std::nullopt;
  Num carry = second_coord(ws, first);
  if (!nonzero(ws, carry)) return std::nullopt;
  for (int j = 2; j <= e - 2; ++j) {
    Triple c{ws.copy(carry), ws.zero(), ws.zero(), j};
    Triple prod = mul(ws, c, s[p + j - 1].t);
    if (!is_in_t(ws, prod)) return std::nullopt;
    carry = second_coord(ws, prod);
    if (!nonzero(ws, carry)) return std::nullopt;
  }
  const Pair& last = s[p + e - 2];
  Num xe = second_coord(ws, last.t);
  if (!nonzero(ws, xe)) return std::nullopt;
  Triple c{std::move(carry), ws.zero(), ws.zero(), e - 1};
  Triple head{ws.mult_pow(first.u, first.x), ws.zero(), ws.zero(), 1};
  return std::pair{Pair{1, std::move(head)}, Pair{e - 1, mul(ws, c, last.t)}};
}

// Rule 7 at position p: (-x_{e-1} q^xe, xe)_{e-1} ... (x1 q^x2, y)_1.
std::optional<std::pair<Pair, Pair>> rule7(Workspace& ws, const std::vector<Pair>& s, std::size_t p, int e) {
  for (int j = 1; j <= e - 1; ++j)
    if (s[p + j - 1].sub != e - j) return std::nullopt;
  const Triple& head = s[p].t;
  Num xe = second_coord(ws, head);
  if (!nonzero(ws, xe)) return std::nullopt;
  Num mxe = ws.negate(xe);
  Triple c = mul(ws, t_power(ws, mxe, e - 1), head);
  if (!is_in_a(ws, c) || !nonzero(ws, c.u)) return std::nullopt;
  Triple d = at(swap_a_to_t(ws, c), e - 2);
  for (int j = e - 2; j >= 2; --j) {
    Triple prod = mul(ws, d, s[p + (e - 1 - j)].t);
    if (!is_in_a(ws, prod) || !nonzero(ws, prod.u)) return std::nullopt;
    d = at(swap_a_to_t(ws, prod), j - 1);
  }
  Triple r = mul(ws, d, s[p + e - 2].t);
  if (!nonzero(ws, r.u) || !integral_first(ws, r)) return std::nullopt;
  return std::pair{Pair{e - 1, t_power(ws, xe, e - 1)}, Pair{1, std::move(r)}};
}

}  // namespace

Pair make_pair_value(Workspace& ws, int sub, Triple t) {
  (void)ws;
  t.factor = sub;
  return Pair{sub, std::move(t)};
}

std::size_t weight(const Workspace& ws, const std::vector<Pair>& seq) {
  std::size_t w = 0;
  for (const auto& p : seq) w += support(ws, p.t);
  return w;
}

void l_reduce(Workspace& ws, std::vector<Pair>& seq, int e, LStats* stats) {
  LStats local;
  LStats& st = stats ? *stats : local;
  std::vector<Pair> out;
  out.reserve(seq.size());
  for (auto& p : seq) {
    if (p.sub < 1 || p.sub > e - 1) throw Error(ErrorCode::ValidationError, "subscript out of range");
    out.push_back(std::move(p));
    while (true) {
      if (is_identity(ws, out.back().t)) {
        ++st.identities;
        out.pop_back();
      }
      if (out.size() < 2) break;
      auto r = combine(ws, out[out.size() - 2], out.back(), st);
      if (!r) break;
      out.pop_back();
      out.back() = std::move(*r);
    }
  }
  seq = std::move(out);
}

void l_prime_reduce(Workspace& ws, std::vector<Pair>& seq, int e, LStats* stats) {
  LStats local;
  LStats& st = stats ? *stats : local;
  l_reduce(ws, seq, e, &st);
  const std::size_t span = static_cast<std::size_t>(e - 1);
  for (std::size_t p = 0; p + span <= seq.size(); ++p) {
    auto r = rule6(ws, seq, p, e);
    if (r) {
      ++st.rule[6];
    } else {
      r = rule7(ws, seq, p, e);
      if (r) ++st.rule[7];
    }
    if (!r) continue;
    seq[p] = std::move(r->first);
    seq[p + 1] = std::move(r->second);
    seq.erase(seq.begin() + static_cast<long>(p + 2), seq.begin() + static_cast<long>(p + span));
  }
}

bool is_subgroup_form(Workspace& ws, const std::vector<Pair>& seq, int e) {
  for (const auto& p : seq) {
    const bool a_type = p.sub == 1 && is_in_a(ws, p.t);
    const bool t_type = p.sub == e - 1 && is_in_t(ws, p.t);
    if (!a_type && !t_type) return false;
  }
  return true;
}

void swap_block(Workspace& ws, std::vector<Pair>& seq, int e_from, int e_to) {
  for (auto& p : seq) {
    if (p.sub == 1 && is_in_a(ws, p.t)) {
      p = Pair{e_to - 1, at(swap_a_to_t(ws, p.t), e_to - 1)};
    } else if (p.sub == e_from - 1 && is_in_t(ws, p.t)) {
      p = Pair{1, at(swap_t_to_a(ws, p.t), 1)};
    } else {
      throw Error(ErrorCode::NotInSubgroup, "pair outside the amalgamated subgroup");
    }
  }
}

std::vector<PairSeq> word_to_pairseqs(Workspace& ws, const std::vector<HigLetter>& w, int f) {
  if (f < 4) throw Error(ErrorCode::MalformedWord, "f must be at least 4");
  std::vector<PairSeq> out;
  for (const auto& l : w) {
    if (l.gen < 1 || l.gen > f) throw Error(ErrorCode::MalformedWord, "generator index " + std::to_string(l.gen));
    if (l.exp == 0) throw Error(ErrorCode::MalformedWord, "zero exponent");
    const Side side = l.gen <= f - 2 ? Side::Left : Side::Right;
    const int sub = side == Side::Left ? l.gen : l.gen - (f - 2);
    if (out.empty() || out.back().side != side) out.push_back({side, {}});
    Num v = ws.constant(l.exp);
    out.back().pairs.push_back(Pair{sub, {std::move(v), ws.zero(), ws.zero(), sub}});
  }
  return out;
}

bool higman_trivial(const std::vector<HigLetter>& w, int q, int f, Mode mode, HigmanStats* stats) {
  if (q < 2) throw Error(ErrorCode::InvalidBase, "q must be at least 2");
  if (f < 4) throw Error(ErrorCode::MalformedWord, "f must be at least 4");
  HigmanStats st;
  Workspace ws(q, mode);
  std::vector<PairSeq> blocks = word_to_pairseqs(ws, w, f);
  st.blocks = blocks.size();

  auto total_weight = [&] {
    std::size_t t = 0;
    for (const auto& b : blocks) t += weight(ws, b.pairs);
    return t;
  };
  st.initial_weight = st.peak_weight = total_weight();
  std::size_t last_weight = st.initial_weight;

  auto rank = [&](const PairSeq& b) { return factor_rank(b.side, f); };
  auto reduce = [&](PairSeq& b) { l_prime_reduce(ws, b.pairs, rank(b), &st.rules); };
  auto in_f = [&](PairSeq& b) { return is_subgroup_form(ws, b.pairs, rank(b)); };
  // Moves block `from` into the side of `to`.
  auto swap_into = [&](PairSeq& from, const PairSeq& to) {
    if (from.side == to.side) return;
    swap_block(ws, from.pairs, rank(from), rank(to));
    from.side = to.side;
    ++st.swaps;
  };
  // Appends blocks[i+1] to blocks[i].
  auto merge = [&](std::size_t i) {
    auto& dst = blocks[i].pairs;
    auto& src = blocks[i + 1].pairs;
    for (auto& p : src) dst.push_back(std::move(p));
    blocks.erase(blocks.begin() + static_cast<long>(i + 1));
    ++st.merges;
  };

  std::size_t t = 0;
  while ((t == 0 && blocks.size() > 1) || (t > 0 && t < blocks.size())) {
    ++st.iterations;
    if (t == 0) {
      reduce(blocks[0]);
      if (blocks[0].pairs.empty()) {
        blocks.erase(blocks.begin());
      } else if (in_f(blocks[0])) {
        swap_into(blocks[0], blocks[1]);
        merge(0);
      } else {
        t = 1;
      }
    } else if (blocks[t - 1].side == blocks[t].side) {
      merge(t - 1);
      --t;
    } else {
      reduce(blocks[t]);
      if (blocks[t].pairs.empty()) {
        blocks.erase(blocks.begin() + static_cast<long>(t));
      } else if (in_f(blocks[t])) {
        swap_into(blocks[t], blocks[t - 1]);
        merge(t - 1);
        --t;
      } else {
        ++t;
      }
    }
    const std::size_t wnow = total_weight();
    if (wnow > last_weight) ++st.weight_increases;
    last_weight = wnow;
    st.peak_weight = std::max(st.peak_weight, wnow);
    st.circuit_peak = std::max(st.circuit_peak, ws.size());
  }
  // A single block never enters the loop; it is trivial iff it reduces away.
  if (blocks.size() == 1 && t == 0) {
    reduce(blocks[0]);
    if (blocks[0].pairs.empty()) blocks.clear();
  }
  const bool trivial = blocks.empty();
  st.circuit_peak = std::max(st.circuit_peak, ws.stats().peak_size);
  st.bound_misses = ws.bound_misses();
  if (stats) *stats = st;
  blocks.clear();
  return trivial;
}

}  // namespace pc
