// Serial vs OpenMP batch solving of random word problems.

#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "CLI11.hpp"
#include "higman_words.hpp"
#include "pc/batch.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"batch solver benchmark"};
  int count = 64, q = 2, f = 4, threads = 0, reps = 3;
  std::size_t len = 256;
  unsigned seed = 1;
  app.add_option("-n,--count", count, "words per batch")->capture_default_str();
  app.add_option("-l,--length", len, "letters per random word")->capture_default_str();
  app.add_option("-q", q)->capture_default_str();
  app.add_option("-f", f)->capture_default_str();
  app.add_option("-t,--threads", threads, "0 = OpenMP default")->capture_default_str();
  app.add_option("-r,--reps", reps)->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::mt19937 rng(seed);
  std::vector<pctest::Word> hw;
  std::vector<std::vector<pc::BgLetter>> bw;
  for (int i = 0; i < count; ++i) {
    hw.push_back(i % 2 ? pctest::random_relator_product(rng, q, f, 10, len / 20) : pctest::random_word(rng, f, len));
    std::vector<pc::BgLetter> w;
    for (std::size_t k = 0; k < len; ++k) w.push_back({static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1});
    bw.push_back(std::move(w));
  }

  const int nt = threads > 0 ? threads : omp_get_max_threads();
  std::printf("words=%d length=%zu q=%d f=%d threads=%d\n", count, len, q, f, nt);
  std::printf("%-8s %12s %12s %8s %6s\n", "solver", "serial_s", "parallel_s", "speedup", "agree");

  auto row = [&](const char* name, auto serial, auto parallel) {
    pc::Verdicts a, b;
    double ts = 1e300, tp = 1e300;
    for (int r = 0; r < reps; ++r) {
      ts = std::min(ts, seconds([&] { a = serial(); }));
      tp = std::min(tp, seconds([&] { b = parallel(); }));
    }
    std::printf("%-8s %12.4f %12.4f %8.2f %6s\n", name, ts, tp, ts / tp, a == b ? "yes" : "NO");
    return a == b;
  };
  bool ok = row("higman", [&] { return pc::higman_batch_serial(hw, q, f); },
                [&] { return pc::higman_batch(hw, q, f, pc::Mode::Treed, nt); });
  ok &= row("bg", [&] { return pc::bg_batch_serial(bw, q); }, [&] { return pc::bg_batch(bw, q, pc::Mode::Treed, nt); });
  return ok ? 0 : 1;
}
