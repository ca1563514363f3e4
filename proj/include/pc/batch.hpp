#pragma once

#include <cstdint>
#include <vector>

#include "pc/bg.hpp"
#include "pc/higman.hpp"

namespace pc {

// Many independent word problems. Each word gets its own workspace, so the
// parallel versions split the list across OpenMP threads; the serial ones are
// the reference. Entry i is 1 iff word i is trivial. The first error (by
// index) is rethrown after all words are done.
using Verdicts = std::vector<std::uint8_t>;

Verdicts higman_batch(const std::vector<std::vector<HigLetter>>& words, int q, int f, Mode mode = Mode::Treed,
                      int threads = 0);
Verdicts higman_batch_serial(const std::vector<std::vector<HigLetter>>& words, int q, int f,
                             Mode mode = Mode::Treed);

Verdicts bg_batch(const std::vector<std::vector<BgLetter>>& words, int q, Mode mode = Mode::Treed, int threads = 0);
Verdicts bg_batch_serial(const std::vector<std::vector<BgLetter>>& words, int q, Mode mode = Mode::Treed);

}  // namespace pc
