#pragma once

#include <cstddef>
#include <vector>

#include "pc/triple.hpp"

namespace pc {

// a_gen^exp, gen in 1..f.
struct HigLetter {
  int gen = 1;
  long long exp = 1;
  friend bool operator==(const HigLetter&, const HigLetter&) = default;
};

// A pair (u,k)_sub with a local subscript 1..e-1.
struct Pair {
  int sub = 1;
  Triple t;
};

// Left blocks use the generators a_1..a_{f-1} (subscripts 1..f-2), right
// blocks a_{f-1}, a_f, a_1 relabelled 1, 2, 3 (subscripts 1, 2).
enum class Side { Left, Right };

struct PairSeq {
  Side side = Side::Left;
  std::vector<Pair> pairs;
};

// Number of generators of the factor a block lives in.
inline int factor_rank(Side s, int f) { return s == Side::Left ? f - 1 : 3; }

struct LStats {
  std::size_t rule[8] = {};  // applications of rules 1..7
  std::size_t identities = 0;
  bool length_increase = false;
};

Pair make_pair_value(Workspace& ws, int sub, Triple t);

void l_reduce(Workspace& ws, std::vector<Pair>& seq, int e, LStats* stats = nullptr);
// L-reduces, then one left-to-right pass of rules 6 and 7.
void l_prime_reduce(Workspace& ws, std::vector<Pair>& seq, int e, LStats* stats = nullptr);
// Whether an L'-reduced sequence is an alternating word in (u,0)_1 with u an
// integer and (0,l)_{e-1}, i.e. lies in the subgroup generated by the two
// outer generators.
bool is_subgroup_form(Workspace& ws, const std::vector<Pair>& seq, int e);
// Rewrites a subgroup form of the factor with e_from generators into the
// factor with e_to generators: (x,0)_1 -> (0,x)_{e_to-1}, (0,x)_{e_from-1} -> (x,0)_1.
void swap_block(Workspace& ws, std::vector<Pair>& seq, int e_from, int e_to);

std::vector<PairSeq> word_to_pairseqs(Workspace& ws, const std::vector<HigLetter>& w, int f);

std::size_t weight(const Workspace& ws, const std::vector<Pair>& seq);

struct HigmanStats {
  std::size_t blocks = 0;
  std::size_t iterations = 0;
  std::size_t merges = 0;
  std::size_t swaps = 0;
  std::size_t initial_weight = 0;
  std::size_t peak_weight = 0;
  std::size_t weight_increases = 0;
  std::size_t circuit_peak = 0;
  std::size_t bound_misses = 0;
  LStats rules;
};

bool higman_trivial(const std::vector<HigLetter>& w, int q, int f, Mode mode = Mode::Treed,
                    HigmanStats* stats = nullptr);

}  // namespace pc
