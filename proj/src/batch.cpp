#include "pc/batch.hpp"

#include <exception>

#include <omp.h>

namespace pc {

namespace {

template <class Solve>
Verdicts run_parallel(std::size_t n, int threads, Solve&& solve) {
  Verdicts out(n, 0);
  std::vector<std::exception_ptr> err(n);
  const long long m = static_cast<long long>(n);
  // Word costs vary a lot; hand them out one at a time.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : omp_get_max_threads())
  for (long long i = 0; i < m; ++i) {
    try {
      out[i] = solve(static_cast<std::size_t>(i)) ? 1 : 0;
    } catch (...) {
      err[i] = std::current_exception();
    }
  }
  for (auto& e : err)
    if (e) std::rethrow_exception(e);
  return out;
}

template <class Solve>
Verdicts run_serial(std::size_t n, Solve&& solve) {
  Verdicts out(n, 0);
  for (std::size_t i = 0; i < n; ++i) out[i] = solve(i) ? 1 : 0;
  return out;
}

}  // namespace

Verdicts higman_batch(const std::vector<std::vector<HigLetter>>& words, int q, int f, Mode mode, int threads) {
  return run_parallel(words.size(), threads, [&](std::size_t i) { return higman_trivial(words[i], q, f, mode); });
}

Verdicts higman_batch_serial(const std::vector<std::vector<HigLetter>>& words, int q, int f, Mode mode) {
  return run_serial(words.size(), [&](std::size_t i) { return higman_trivial(words[i], q, f, mode); });
}

Verdicts bg_batch(const std::vector<std::vector<BgLetter>>& words, int q, Mode mode, int threads) {
  return run_parallel(words.size(), threads, [&](std::size_t i) { return bg_trivial(words[i], q, mode); });
}

Verdicts bg_batch_serial(const std::vector<std::vector<BgLetter>>& words, int q, Mode mode) {
  return run_serial(words.size(), [&](std::size_t i) { return bg_trivial(words[i], q, mode); });
}

}  // namespace pc
