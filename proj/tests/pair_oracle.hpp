#pragma once

// Exact arithmetic in Z[1/q] x| Z for checking triples.

#include "pc/bigint.hpp"
#include "pc/triple.hpp"

namespace pctest {

using pc::BigInt;

// u = num / q^den, second coordinate k.
struct PairValue {
  int q = 2;
  BigInt num = 0;
  long den = 0;
  long k = 0;

  void normalize() {
    if (num == 0) den = 0;
    while (den > 0 && num % q == 0) {
      num /= q;
      --den;
    }
    while (den < 0) {
      num *= q;
      ++den;
    }
  }
  friend bool operator==(PairValue a, PairValue b) {
    a.normalize();
    b.normalize();
    return a.num == b.num && a.den == b.den && a.k == b.k;
  }
  bool is_identity() const { return num == 0 && k == 0; }
};

inline BigInt qpow(int q, long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= q;
  return r;
}

inline PairValue pv(int q, BigInt u, long k) {
  PairValue p{q, std::move(u), 0, k};
  p.normalize();
  return p;
}

// (u,k)(v,l) = (u + v q^k, k + l)
inline PairValue mul(const PairValue& a, const PairValue& b) {
  const int q = a.q;
  // Bring both to a common denominator q^d.
  long vshift = -a.k;  // v q^k = v / q^-k
  long d = std::max(a.den, b.den + vshift);
  d = std::max(d, 0L);
  BigInt lhs = a.num * qpow(q, d - a.den);
  BigInt rhs = b.num * qpow(q, d - b.den - vshift);
  PairValue r{q, lhs + rhs, d, a.k + b.k};
  r.normalize();
  return r;
}

inline PairValue inv(const PairValue& a) {
  // (-u q^-k, -k)
  PairValue r{a.q, -a.num, a.den + a.k, -a.k};
  r.normalize();
  return r;
}

inline long to_long(const BigInt& v) { return static_cast<long>(v); }

inline PairValue value_of(const pc::Workspace& ws, const pc::Triple& t) {
  const BigInt u = ws.eval(t.u), x = ws.eval(t.x), k = ws.eval(t.k);
  PairValue p{ws.base(), u, -to_long(x), to_long(x + k)};
  p.normalize();
  return p;
}

}  // namespace pctest
