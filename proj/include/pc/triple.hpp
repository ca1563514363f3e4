#pragma once

#include "pc/workspace.hpp"

namespace pc {

// [u,x,k] stands for the pair (u*q^x, x+k) of Z[1/q] x| Z, with x <= 0 <= k.
// `factor` names the copy of BS(1,q) the element lives in.
struct Triple {
  Num u, x, k;
  int factor = 0;
};

Triple make_triple(Workspace& ws, long long u, long long x, long long k, int factor = 0);
Triple identity_triple(Workspace& ws, int factor = 0);
Triple copy_triple(Workspace& ws, const Triple& a);
// (v,0) and (0,v) for an integer v.
Triple a_power(Workspace& ws, const Num& v, int factor = 0);
Triple t_power(Workspace& ws, const Num& v, int factor = 0);

Triple triple_mul(Workspace& ws, const Triple& a, const Triple& b);
Triple triple_inv(Workspace& ws, const Triple& a);

bool is_in_a(Workspace& ws, const Triple& a);
bool is_in_t(Workspace& ws, const Triple& a);
bool is_identity(Workspace& ws, const Triple& a);
// x + k, the second coordinate.
Num second_coord(Workspace& ws, const Triple& a);

// (v,0) -> (0,v) and back. Throw NotInSubgroup outside the domain.
Triple swap_a_to_t(Workspace& ws, const Triple& a);
Triple swap_t_to_a(Workspace& ws, const Triple& a);

std::size_t support(const Workspace& ws, const Triple& a);

}  // namespace pc
