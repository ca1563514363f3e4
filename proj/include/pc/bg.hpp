#pragma once

#include <vector>

#include "pc/workspace.hpp"

namespace pc {

// a^exp (gen 0) or b^exp (gen 1).
struct BgLetter {
  int gen = 0;
  long long exp = 1;
  friend bool operator==(const BgLetter&, const BgLetter&) = default;
};

struct BgStats {
  std::size_t pinches = 0;
  std::size_t peak_depth = 0;
  std::size_t circuit_peak = 0;
};

// Word problem of <a,b | b a b^-1 = t, t a t^-1 = a^q> by Britton reduction
// over the base group <a,t> = BS(1,q).
bool bg_trivial(const std::vector<BgLetter>& w, int q, Mode mode = Mode::Treed, BgStats* stats = nullptr);

}  // namespace pc
