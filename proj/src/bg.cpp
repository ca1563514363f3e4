#include "pc/bg.hpp"

#include <algorithm>

#include "pc/error.hpp"
#include "pc/triple.hpp"

namespace pc {

bool bg_trivial(const std::vector<BgLetter>& w, int q, Mode mode, BgStats* stats) {
  if (q < 2) throw Error(ErrorCode::InvalidBase, "q must be at least 2");
  for (const auto& l : w)
    if ((l.gen != 0 && l.gen != 1) || l.exp == 0) throw Error(ErrorCode::MalformedWord, "bad letter");

  BgStats st;
  Workspace ws(q, mode);
  // g[0] b^eps[0] g[1] ... b^eps[s-1] g[s], free of pinches.
  std::vector<Triple> g;
  std::vector<int> eps;
  g.push_back(identity_triple(ws));

  for (const auto& l : w) {
    if (l.gen == 0) {
      Num e = ws.constant(l.exp);
      Triple step{std::move(e), ws.zero(), ws.zero(), 0};
      g.back() = triple_mul(ws, g.back(), step);
      continue;
    }
    const int e = l.exp > 0 ? 1 : -1;
    for (long long n = l.exp > 0 ? l.exp : -l.exp; n > 0; --n) {
      bool pinched = false;
      if (!eps.empty() && eps.back() == -e) {
        // b g b^-1 with g in <a> is a power of t, b^-1 g b with g in <t> a power of a.
        Triple& mid = g.back();
        if (eps.back() == 1 && is_in_a(ws, mid)) {
          Triple h = swap_a_to_t(ws, mid);
          g.pop_back();
          eps.pop_back();
          g.back() = triple_mul(ws, g.back(), h);
          pinched = true;
        } else if (eps.back() == -1 && is_in_t(ws, mid)) {
          Triple h = swap_t_to_a(ws, mid);
          g.pop_back();
          eps.pop_back();
          g.back() = triple_mul(ws, g.back(), h);
          pinched = true;
        }
      }
      if (pinched) {
        ++st.pinches;
      } else {
        eps.push_back(e);
        g.push_back(identity_triple(ws));
        st.peak_depth = std::max(st.peak_depth, eps.size());
      }
    }
    st.circuit_peak = std::max(st.circuit_peak, ws.size());
  }
  const bool trivial = eps.empty() && is_identity(ws, g.front());
  st.circuit_peak = std::max(st.circuit_peak, ws.stats().peak_size);
  if (stats) *stats = st;
  g.clear();
  return trivial;
}

}  // namespace pc
