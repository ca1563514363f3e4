#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pc/bigint.hpp"

namespace pc {

// Formal sum  sum_i coeff[i] * q^i  with every coefficient in D = {-q+1..q-1}.
class PowerSum {
 public:
  explicit PowerSum(int q);
  PowerSum(int q, std::vector<int> coeffs);

  int base() const { return q_; }
  std::size_t size() const { return coeffs_.size(); }
  // Out-of-range exponents read as zero.
  int operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  void set(std::size_t i, int digit);
  const std::vector<int>& coeffs() const { return coeffs_; }

  std::size_t nonzero_count() const;
  // Drops trailing zero coefficients.
  void trim();

  friend bool operator==(const PowerSum& a, const PowerSum& b);

 private:
  int q_;
  std::vector<int> coeffs_;
};

BigInt value_of(const PowerSum& s);

// The four rules of the signed-digit rewriting system:
//   1: a q^i + b q^(i+1)                      -> (a-q) q^i + (b+1) q^(i+1)   a>0, b<0
//   2: a q^i + b q^(i+1)                      -> (a+q) q^i + (b-1) q^(i+1)   a<0, b>0
//   3: a q^i + (q-1)(q^(i+1)..q^j) + b q^(j+1) -> (a-q) q^i + (b+1) q^(j+1)  a>0, b<q-1
//   4: a q^i - (q-1)(q^(i+1)..q^j) + b q^(j+1) -> (a+q) q^i + (b-1) q^(j+1)  a<0, b>-q+1
struct Redex {
  int rule;
  std::size_t i;
  std::size_t j;  // end of the run for rules 3/4, i for rules 1/2

  friend bool operator==(const Redex&, const Redex&) = default;
};

// Applies one rule. For rules 1/2 `j` is ignored. Throws RuleNotApplicable.
PowerSum apply_rule(const PowerSum& s, int rule, std::size_t i, std::size_t j = 0);

// Every position at which some rule applies, in increasing order of i.
std::vector<Redex> redexes(const PowerSum& s);

bool is_compact(const PowerSum& s);

struct Compactified {
  PowerSum sum;
  // carries[i] = J_i for 0 <= i <= n+2; sum[i] = s[i] + J_i - q*J_(i+1).
  std::vector<int> carries;
  std::size_t steps = 0;
};

// Linear-time compactification: one forward pass over the carry automaton and
// one backward read of the carries. The result has exactly size()+1 slots.
Compactified compactify_with_carries(const PowerSum& s);
PowerSum compactify(const PowerSum& s);

// Structural test for value(t) == value(s) + 1. Both must be compact.
bool is_increment(const PowerSum& s, const PowerSum& t);

// Lexicographic order, highest exponent first. Both must be compact; for
// compact sums it coincides with the order of values.
std::strong_ordering cmp_lex(const PowerSum& s, const PowerSum& t);

// Pairwise helpers shared with the circuit code, which runs the same local
// tests over chains of nodes.
bool compact_pair_ok(int q, int lower, int upper);
// If `upper` is `lower` + 1 in the shape of the increment characterisation,
// returns the highest exponent at which they differ. Inputs are read
// low exponent first; missing entries are zero.
std::optional<std::size_t> increment_position(int q, std::span<const int> lower,
                                              std::span<const int> upper);

}  // namespace pc
