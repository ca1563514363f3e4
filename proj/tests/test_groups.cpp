#include <doctest.h>

#include <random>
#include <vector>

#include "pair_oracle.hpp"
#include "pc/bg.hpp"
#include "pc/error.hpp"
#include "pc/triple.hpp"

using namespace pc;
using pctest::PairValue;
using pctest::pv;

namespace {

Triple random_triple(Workspace& ws, std::mt19937& rng) {
  std::uniform_int_distribution<long long> u(-20, 20), x(-4, 0), k(0, 4);
  return make_triple(ws, u(rng), x(rng), k(rng));
}

// Free reduction of a BG word, letters with exponent +-1.
std::vector<BgLetter> free_reduce(const std::vector<BgLetter>& w) {
  std::vector<BgLetter> out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::vector<BgLetter> inverse(std::vector<BgLetter> w) {
  std::reverse(w.begin(), w.end());
  for (auto& l : w) l.exp = -l.exp;
  return w;
}

std::vector<BgLetter> bg_relator(int q) {
  std::vector<BgLetter> r{{1, 1}, {0, 1}, {1, -1}, {0, 1}, {1, 1}, {0, -1}, {1, -1}};
  for (int i = 0; i < q; ++i) r.push_back({0, -1});
  return r;
}

std::vector<BgLetter> random_bg_word(std::mt19937& rng, std::size_t len) {
  std::vector<BgLetter> w;
  std::uniform_int_distribution<int> g(0, 1), s(0, 1);
  for (std::size_t i = 0; i < len; ++i) w.push_back({g(rng), s(rng) ? 1 : -1});
  return w;
}

}  // namespace

TEST_CASE("triple product from the q=2 example") {
  Workspace ws(2);
  Triple a = make_triple(ws, 2, 0, 0), b = make_triple(ws, 4, -1, 1);
  CHECK(pctest::value_of(ws, a) == pctest::value_of(ws, b));
  Triple c = triple_mul(ws, a, b);
  CHECK(pctest::value_of(ws, c) == pv(2, 4, 0));
  Triple e = identity_triple(ws);
  CHECK(pctest::value_of(ws, triple_mul(ws, a, e)) == pctest::value_of(ws, a));
  CHECK(is_identity(ws, triple_inv(ws, e)));
}

TEST_CASE("triple arithmetic is a homomorphism") {
  for (Mode mode : {Mode::Simple, Mode::Treed}) {
    for (int q : {2, 3, 5}) {
      std::mt19937 rng(7 * q);
      Workspace ws(q, mode);
      for (int r = 0; r < 60; ++r) {
        Triple a = random_triple(ws, rng), b = random_triple(ws, rng);
        const PairValue va = pctest::value_of(ws, a), vb = pctest::value_of(ws, b);
        Triple c = triple_mul(ws, a, b);
        CHECK(pctest::value_of(ws, c) == pctest::mul(va, vb));
        CHECK(support(ws, c) <= support(ws, a) + support(ws, b));
        Triple ia = triple_inv(ws, a);
        CHECK(pctest::value_of(ws, ia) == pctest::inv(va));
        CHECK(support(ws, ia) == support(ws, a));
        CHECK(pctest::value_of(ws, triple_inv(ws, ia)) == va);
        CHECK(is_identity(ws, triple_mul(ws, a, ia)));
        CHECK(ws.sign(c.x) <= 0);
        CHECK(ws.sign(c.k) >= 0);
      }
      CHECK(ws.validate());
      CHECK(ws.bound_misses() == 0);
    }
  }
}

TEST_CASE("membership predicates on small triples") {
  for (int q : {2, 3}) {
    Workspace ws(q);
    for (long long u = -8; u <= 8; ++u)
      for (long long x = -3; x <= 0; ++x)
        for (long long k = 0; k <= 3; ++k) {
          Triple t = make_triple(ws, u, x, k);
          const bool integral = u % static_cast<long long>(pctest::qpow(q, -x)) == 0;
          CHECK(is_in_a(ws, t) == (x == -k && integral));
          CHECK(is_in_t(ws, t) == (u == 0));
          CHECK(is_identity(ws, t) == (u == 0 && x == -k));
        }
  }
  Workspace ws(2);
  CHECK(is_in_a(ws, make_triple(ws, 4, -1, 1)));
  CHECK_FALSE(is_in_a(ws, make_triple(ws, 1, -1, 1)));
  CHECK(is_in_t(ws, make_triple(ws, 0, -3, 5)));
  CHECK(is_identity(ws, make_triple(ws, 0, -2, 2)));
}

TEST_CASE("swap maps") {
  Workspace ws(2);
  CHECK(is_identity(ws, swap_a_to_t(ws, identity_triple(ws))));
  CHECK(is_identity(ws, swap_t_to_a(ws, identity_triple(ws))));
  Triple s = swap_a_to_t(ws, make_triple(ws, 4, -1, 1));
  CHECK(pctest::value_of(ws, s) == pv(2, 0, 2));
  Triple b = swap_t_to_a(ws, make_triple(ws, 0, -1, 3));
  CHECK(pctest::value_of(ws, b) == pv(2, 2, 0));
  CHECK_THROWS_AS(swap_a_to_t(ws, make_triple(ws, 1, -1, 1)), Error);
  CHECK_THROWS_AS(swap_t_to_a(ws, make_triple(ws, 1, 0, 0)), Error);

  for (int q : {2, 3, 5}) {
    Workspace w(q);
    std::mt19937 rng(q);
    for (int r = 0; r < 50; ++r) {
      const long long v = std::uniform_int_distribution<long long>(-300, 300)(rng);
      const long long x = std::uniform_int_distribution<long long>(-3, 0)(rng);
      // (v,0) written as [v q^-x, x, -x]
      Num vn = w.constant(v), nx = w.constant(-x);
      Triple a{w.mult_pow(vn, nx), w.constant(x), w.constant(-x), 0};
      Triple t = swap_a_to_t(w, a);
      CHECK(pctest::value_of(w, t) == pv(q, 0, v));
      Triple back = swap_t_to_a(w, t);
      CHECK(pctest::value_of(w, back) == pctest::value_of(w, a));
    }
  }
}

TEST_CASE("BG word problem") {
  for (Mode mode : {Mode::Simple, Mode::Treed}) {
    CHECK(bg_trivial({}, 2, mode));
    CHECK_FALSE(bg_trivial({{0, 1}}, 3, mode));
    CHECK_FALSE(bg_trivial({{1, 1}}, 3, mode));
    for (int q : {2, 3, 5}) CHECK(bg_trivial(bg_relator(q), q, mode));
    // b a b^-1 = t, so b a b^-1 a^-1 = t a^-1 is not trivial
    CHECK_FALSE(bg_trivial({{1, 1}, {0, 1}, {1, -1}, {0, -1}}, 2, mode));
    CHECK(bg_trivial({{0, 3}, {0, -3}}, 2, mode));
  }
}

TEST_CASE("BG conjugated relators and parity") {
  for (int q : {2, 3}) {
    std::mt19937 rng(31 * q);
    for (int r = 0; r < 20; ++r) {
      const auto w = random_bg_word(rng, std::uniform_int_distribution<std::size_t>(0, 100)(rng));
      const auto rel = r % 2 ? bg_relator(q) : inverse(bg_relator(q));
      std::vector<BgLetter> word = w;
      word.insert(word.end(), rel.begin(), rel.end());
      const auto wi = inverse(w);
      word.insert(word.end(), wi.begin(), wi.end());
      CHECK(bg_trivial(free_reduce(word), q));
    }
    for (int r = 0; r < 30; ++r) {
      auto w = random_bg_word(rng, 60);
      long long bsum = 0, asum = 0;
      for (const auto& l : w) (l.gen ? bsum : asum) += l.exp;
      if (bsum != 0 || (q > 2 && asum % (q - 1) != 0)) CHECK_FALSE(bg_trivial(w, q));
      // w w^-1 is trivial whatever w is
      auto ww = w;
      const auto wi = inverse(w);
      ww.insert(ww.end(), wi.begin(), wi.end());
      CHECK(bg_trivial(ww, q));
    }
  }
}
