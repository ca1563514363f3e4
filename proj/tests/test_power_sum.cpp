#include <doctest.h>

#include <random>

#include "pc/error.hpp"
#include "pc/power_sum.hpp"
#include "sum_oracle.hpp"

using namespace pc;

TEST_CASE("rewriting rules") {
  PowerSum s(3, {1, 1, 1, 1, -2});
  PowerSum t = apply_rule(s, 1, 3);
  CHECK(t == PowerSum(3, {1, 1, 1, -2, -1}));
  CHECK(value_of(t) == value_of(s));
  CHECK_FALSE(is_compact(t));

  try {
    apply_rule(PowerSum(3, {-1, 0}), 2, 0);
    FAIL("applied");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RuleNotApplicable);
  }
  CHECK(apply_rule(PowerSum(2, {1, 1}), 3, 0, 1) == PowerSum(2, {-1, 0, 1}));

  std::mt19937_64 rng(3);
  for (int round = 0; round < 2000; ++round) {
    const int q = 2 + static_cast<int>(rng() % 4);
    std::vector<int> c(1 + rng() % 8);
    for (int& d : c) d = static_cast<int>(rng() % (2 * q - 1)) - (q - 1);
    PowerSum ps(q, c);
    for (const auto& r : redexes(ps)) CHECK(value_of(apply_rule(ps, r.rule, r.i, r.j)) == value_of(ps));
    CHECK(is_compact(ps) == redexes(ps).empty());
  }
}

TEST_CASE("compactness") {
  CHECK(is_compact(PowerSum(3, {0, 0, 0})));
  CHECK_FALSE(is_compact(PowerSum(2, {1, 1})));
  CHECK(is_compact(PowerSum(3, {1, 1, 1, 0, 0, -1})));
}

TEST_CASE("the worked compactification") {
  PowerSum s(3, {1, 1, -2, -2, 1, -1});
  CHECK(value_of(s) == -230);
  auto r = compactify_with_carries(s);
  CHECK(r.sum == PowerSum(3, {1, 1, 1, 0, 0, -1}));
  CHECK(value_of(r.sum) == -230);
  for (std::size_t i = 0; i < r.carries.size(); ++i) CHECK(r.carries[i] == ((i == 3 || i == 4) ? -1 : 0));
  CHECK(r.sum.size() == s.size() + 1);
  CHECK(compactify(r.sum) == r.sum);
}

TEST_CASE("compactify against enumeration") {
  for (int q : {2, 3}) {
    const std::size_t len = q == 2 ? 6 : 4;
    const auto classes = pctest::classify(q, len + 1);
    pctest::for_each_sum(q, len, [&](const std::vector<int>& c) {
      PowerSum s(q, c);
      PowerSum t = compactify(s);
      REQUIRE(is_compact(t));
      REQUIRE(value_of(t) == value_of(s));
      const auto& cls = classes.at(pctest::small_value(q, c));
      REQUIRE(cls.compact.size() == 1);
      CHECK(t == PowerSum(q, cls.compact.front()));
      CHECK(t.nonzero_count() == cls.min_nonzero);
      CHECK(pctest::normalize(s) == t);
    });
  }
}

TEST_CASE("increment and lexicographic order") {
  CHECK(is_increment(PowerSum(2), PowerSum(2, {1})));
  CHECK(is_increment(PowerSum(2, {-1}), PowerSum(2)));
  CHECK(is_increment(PowerSum(2, {1}), PowerSum(2, {0, 1})));
  CHECK_FALSE(is_increment(PowerSum(2, {1}), PowerSum(2, {-1, 0, 1})));
  CHECK_THROWS_AS(is_increment(PowerSum(2, {1, 1}), PowerSum(2, {0, 0, 1})), Error);

  CHECK(cmp_lex(compactify(PowerSum(2, {1, 1})), compactify(PowerSum(2, {0, 1}))) > 0);
  for (int q : {2, 3, 5}) {
    std::vector<PowerSum> all;
    pctest::for_each_sum(q, q == 5 ? 3 : 5, [&](const std::vector<int>& c) {
      PowerSum s(q, c);
      if (is_compact(s)) all.push_back(s);
    });
    for (const auto& a : all)
      for (const auto& b : all) {
        const BigInt d = value_of(b) - value_of(a);
        CHECK(is_increment(a, b) == (d == 1));
        CHECK((cmp_lex(a, b) < 0) == (d > 0));
        CHECK((cmp_lex(a, b) == 0) == (d == 0));
      }
  }
}

TEST_CASE("compactify does linear work") {
  std::mt19937_64 rng(9);
  for (std::size_t n : {100u, 1000u, 10000u}) {
    std::vector<int> c(n);
    for (int& d : c) d = static_cast<int>(rng() % 5) - 2;
    auto r = compactify_with_carries(PowerSum(3, c));
    CHECK(r.steps <= 40 * n);
    CHECK(is_compact(r.sum));
  }
}
