#include "pc/triple.hpp"

#include "pc/error.hpp"

namespace pc {

Triple make_triple(Workspace& ws, long long u, long long x, long long k, int factor) {
  return {ws.constant(u), ws.constant(x), ws.constant(k), factor};
}

Triple identity_triple(Workspace& ws, int factor) { return {ws.zero(), ws.zero(), ws.zero(), factor}; }

Triple copy_triple(Workspace& ws, const Triple& a) {
  return {ws.copy(a.u), ws.copy(a.x), ws.copy(a.k), a.factor};
}

Triple a_power(Workspace& ws, const Num& v, int factor) { return {ws.copy(v), ws.zero(), ws.zero(), factor}; }

Triple t_power(Workspace& ws, const Num& v, int factor) {
  if (ws.sign(v) < 0) return {ws.zero(), ws.copy(v), ws.zero(), factor};
  return {ws.zero(), ws.zero(), ws.copy(v), factor};
}

Triple triple_mul(Workspace& ws, const Triple& a, const Triple& b) {
  if (a.factor != b.factor) throw Error(ErrorCode::FactorMismatch, "triples from different factors");
  // [u,x,k][v,y,l] = [u q^-y + v q^k, x+y, k+l]
  Num ny = ws.negate(b.x);
  Num left = ws.mult_pow(a.u, ny);
  Num right = ws.mult_pow(b.u, a.k);
  return {ws.add(left, right), ws.add(a.x, b.x), ws.add(a.k, b.k), a.factor};
}

Triple triple_inv(Workspace& ws, const Triple& a) {
  return {ws.negate(a.u), ws.negate(a.k), ws.negate(a.x), a.factor};
}

namespace {

bool x_is_minus_k(Workspace& ws, const Triple& a) {
  Num nk = ws.negate(a.k);
  return ws.compare(a.x, nk).order == 0;
}

}  // namespace

bool is_in_a(Workspace& ws, const Triple& a) {
  if (!x_is_minus_k(ws, a)) return false;
  Num nx = ws.negate(a.x);
  return ws.divides_pow(a.u, nx);
}

bool is_in_t(Workspace& ws, const Triple& a) { return ws.is_zero(a.u); }

bool is_identity(Workspace& ws, const Triple& a) { return ws.is_zero(a.u) && x_is_minus_k(ws, a); }

Num second_coord(Workspace& ws, const Triple& a) { return ws.add(a.x, a.k); }

Triple swap_a_to_t(Workspace& ws, const Triple& a) {
  if (!is_in_a(ws, a)) throw Error(ErrorCode::NotInSubgroup, "not a power of a");
  Num v = ws.mult_pow(a.u, a.x);
  return t_power(ws, v, a.factor);
}

Triple swap_t_to_a(Workspace& ws, const Triple& a) {
  if (!is_in_t(ws, a)) throw Error(ErrorCode::NotInSubgroup, "not a power of t");
  return {second_coord(ws, a), ws.zero(), ws.zero(), a.factor};
}

std::size_t support(const Workspace& ws, const Triple& a) {
  return ws.support(a.u) + ws.support(a.x) + ws.support(a.k);
}

}  // namespace pc
