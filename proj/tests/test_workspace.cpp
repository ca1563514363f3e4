#include <doctest.h>

#include <random>
#include <vector>

#include "pc/error.hpp"
#include "pc/workspace.hpp"

using namespace pc;

namespace {

BigInt pow_q(int q, long e) {
  BigInt r = 1;
  while (e-- > 0) r *= q;
  return r;
}

// Random walk over the facade with a BigInt shadow of every value.
void random_walk(Mode mode, int q, unsigned seed, int rounds) {
  std::mt19937 rng(seed);
  Workspace ws(q, mode);
  std::vector<Num> vals;
  std::vector<BigInt> shadow;
  auto pick = [&] { return std::uniform_int_distribution<std::size_t>(0, vals.size() - 1)(rng); };
  auto push = [&](Num n, BigInt v) {
    vals.push_back(std::move(n));
    shadow.push_back(std::move(v));
  };
  for (int c : {0, 1, -1, 5, 37}) push(ws.constant(c), c);

  for (int r = 0; r < rounds; ++r) {
    const int op = std::uniform_int_distribution<int>(0, 7)(rng);
    const std::size_t i = pick(), j = pick();
    switch (op) {
      case 0:
        push(ws.add(vals[i], vals[j]), shadow[i] + shadow[j]);
        break;
      case 1:
        push(ws.sub(vals[i], vals[j]), shadow[i] - shadow[j]);
        break;
      case 2:
        push(ws.negate(vals[i]), -shadow[i]);
        break;
      case 3: {
        const long e = std::uniform_int_distribution<long>(-3, 6)(rng);
        Num k = ws.constant(e);
        const BigInt p = pow_q(q, e < 0 ? -e : e);
        if (e >= 0) {
          push(ws.mult_pow(vals[i], k), shadow[i] * p);
        } else if (shadow[i] % p == 0) {
          push(ws.mult_pow(vals[i], k), shadow[i] / p);
        } else {
          CHECK_THROWS_AS(ws.mult_pow(vals[i], k), Error);
        }
        break;
      }
      case 4: {
        const auto c = ws.compare(vals[i], vals[j]);
        CHECK((c.order < 0) == (shadow[i] < shadow[j]));
        CHECK((c.order == 0) == (shadow[i] == shadow[j]));
        const BigInt d = shadow[i] - shadow[j];
        CHECK(c.unit_diff == (d == 1 || d == -1));
        break;
      }
      case 5: {
        const long e = std::uniform_int_distribution<long>(0, 4)(rng);
        Num k = ws.constant(e);
        CHECK(ws.divides_pow(vals[i], k) == (shadow[i] % pow_q(q, e) == 0));
        break;
      }
      case 6:
        push(ws.copy(vals[i]), shadow[i]);
        break;
      case 7:
        if (vals.size() > 3) {
          vals.erase(vals.begin() + static_cast<long>(i));
          shadow.erase(shadow.begin() + static_cast<long>(i));
        }
        break;
    }
    // Keep magnitudes moderate.
    if (!shadow.empty() && boost::multiprecision::msb(abs(shadow.back()) + 1) > 200) {
      vals.pop_back();
      shadow.pop_back();
    }
    if (r % 25 == 0) {
      REQUIRE(ws.validate());
      for (std::size_t k = 0; k < vals.size(); ++k) REQUIRE(ws.eval(vals[k]) == shadow[k]);
    }
  }
  std::size_t w = 0;
  for (const auto& v : vals) w += ws.support(v);
  CHECK(ws.weight() == w);
  CHECK(ws.bound_misses() == 0);
  CHECK(ws.validate());
  for (std::size_t k = 0; k < vals.size(); ++k) CHECK(ws.eval(vals[k]) == shadow[k]);
}

}  // namespace

TEST_CASE("workspace basics") {
  for (Mode mode : {Mode::Simple, Mode::Treed}) {
    Workspace ws(2, mode);
    Num a = ws.constant(7), b = ws.constant(35);
    Num c = ws.add(a, b);
    CHECK(ws.eval(c) == 42);
    Num six = ws.constant(6), five = ws.constant(5);
    Num p = ws.mult_pow(six, five);
    CHECK(ws.eval(p) == 192);
    CHECK(ws.sign(ws.negate(p)) == -1);
    CHECK(ws.is_zero(ws.sub(c, c)));
    CHECK(ws.compare(a, b).order < 0);
    CHECK(ws.validate());
  }
}

TEST_CASE("workspace random walk against BigInt") {
  for (int q : {2, 3, 5})
    for (Mode mode : {Mode::Simple, Mode::Treed}) random_walk(mode, q, 100 + static_cast<unsigned>(q), 400);
}

TEST_CASE("garbage collection keeps live values") {
  Workspace ws(3, Mode::Treed);
  Num keep = ws.constant(1000);
  for (int i = 0; i < 200; ++i) {
    Num t = ws.constant(i * 17 + 3);
    Num s = ws.mult_pow(t, keep);
  }
  ws.collect_garbage();
  CHECK(ws.stats().gc_runs > 0);
  CHECK(ws.eval(keep) == 1000);
  CHECK(ws.validate());
}
