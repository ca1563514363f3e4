#include "pc/power_sum.hpp"

#include <algorithm>
#include <array>

#include "pc/error.hpp"

namespace pc {

namespace {

bool in_digits(int q, int d) { return d > -q && d < q; }

void check_base(int q) {
  if (q < 2) throw Error(ErrorCode::InvalidBase, "q must be at least 2");
}

}  // namespace

PowerSum::PowerSum(int q) : q_(q) { check_base(q); }

PowerSum::PowerSum(int q, std::vector<int> coeffs) : q_(q), coeffs_(std::move(coeffs)) {
  check_base(q);
  for (int d : coeffs_)
    if (!in_digits(q_, d))
      throw Error(ErrorCode::ValidationError, "coefficient " + std::to_string(d) + " outside D");
}

void PowerSum::set(std::size_t i, int digit) {
  if (!in_digits(q_, digit))
    throw Error(ErrorCode::ValidationError, "coefficient " + std::to_string(digit) + " outside D");
  if (i >= coeffs_.size()) {
    if (digit == 0) return;
    coeffs_.resize(i + 1, 0);
  }
  coeffs_[i] = digit;
}

std::size_t PowerSum::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](int d) { return d != 0; }));
}

void PowerSum::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool operator==(const PowerSum& a, const PowerSum& b) {
  if (a.q_ != b.q_) return false;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

BigInt value_of(const PowerSum& s) {
  BigInt v = 0;
  for (std::size_t i = s.size(); i-- > 0;) v = v * s.base() + s[i];
  return v;
}

bool compact_pair_ok(int q, int lower, int upper) {
  if (lower > 0) return upper >= 0 && upper != q - 1;
  if (lower < 0) return upper <= 0 && upper != -(q - 1);
  return true;
}

std::vector<Redex> redexes(const PowerSum& s) {
  const int q = s.base();
  std::vector<Redex> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int a = s[i];
    if (a == 0) continue;
    const int b = s[i + 1];
    const int sign = a > 0 ? 1 : -1;
    if (b * sign < 0) out.push_back({a > 0 ? 1 : 2, i, i});
    if (b == sign * (q - 1)) {
      std::size_t j = i + 1;
      while (s[j + 1] == sign * (q - 1)) ++j;
      out.push_back({a > 0 ? 3 : 4, i, j});
    }
  }
  return out;
}

PowerSum apply_rule(const PowerSum& s, int rule, std::size_t i, std::size_t j) {
  const int q = s.base();
  auto fail = [&](const char* why) -> PowerSum {
    throw Error(ErrorCode::RuleNotApplicable,
                "rule " + std::to_string(rule) + " at " + std::to_string(i) + ": " + why);
  };
  std::vector<int> c = s.coeffs();
  auto at = [&](std::size_t k) -> int& {
    if (k >= c.size()) c.resize(k + 1, 0);
    return c[k];
  };
  switch (rule) {
    case 1:
    case 2: {
      const int sign = rule == 1 ? 1 : -1;
      const int a = s[i], b = s[i + 1];
      if (!(a * sign > 0 && b * sign < 0)) return fail("side condition violated");
      at(i) = a - sign * q;
      at(i + 1) = b + sign;
      break;
    }
    case 3:
    case 4: {
      const int sign = rule == 3 ? 1 : -1;
      if (j <= i) return fail("run must be non-empty");
      const int a = s[i], b = s[j + 1];
      if (a * sign <= 0) return fail("side condition on leading coefficient violated");
      for (std::size_t k = i + 1; k <= j; ++k)
        if (s[k] != sign * (q - 1)) return fail("run is not all q-1");
      if (b * sign >= q - 1) return fail("side condition on trailing coefficient violated");
      at(i) = a - sign * q;
      for (std::size_t k = i + 1; k <= j; ++k) at(k) = 0;
      at(j + 1) = b + sign;
      break;
    }
    default:
      return fail("unknown rule");
  }
  return PowerSum(q, std::move(c));
}

bool is_compact(const PowerSum& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!compact_pair_ok(s.base(), s[i], s[i + 1])) return false;
  return true;
}

Compactified compactify_with_carries(const PowerSum& s) {
  const int q = s.base();
  const std::size_t n = s.size();
  Compactified out{PowerSum(q), std::vector<int>(n + 2, 0), 0};
  if (n == 0) {
    out.sum = PowerSum(q, {0});
    return out;
  }

  // State at step i is the pair (J_i, J_(i+1)); pred[i][state] stores J_(i-1).
  constexpr int kNone = 2;
  auto idx = [](int a, int b) { return (a + 1) * 3 + (b + 1); };
  std::vector<std::array<int, 9>> pred(n + 1);
  for (auto& p : pred) p.fill(kNone);
  // Preference order for ties.
  constexpr std::array<int, 3> kOrder{0, -1, 1};

  for (int j1 : kOrder) {
    ++out.steps;
    if (in_digits(q, s[0] - q * j1)) pred[0][idx(0, j1)] = 0;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (int jprev : kOrder) {
      for (int jcur : kOrder) {
        if (pred[i - 1][idx(jprev, jcur)] == kNone) continue;
        const int lower = s[i - 1] + jprev - q * jcur;
        for (int jnext : kOrder) {
          ++out.steps;
          if (i == n && jnext != 0) continue;
          const int upper = s[i] + jcur - q * jnext;
          if (!in_digits(q, upper) || !compact_pair_ok(q, lower, upper)) continue;
          int& slot = pred[i][idx(jcur, jnext)];
          if (slot == kNone) slot = jprev;
        }
      }
    }
  }

  int jn = kNone;
  for (int j : kOrder)
    if (pred[n][idx(j, 0)] != kNone) {
      jn = j;
      break;
    }
  // The carry automaton always admits the unique compact form.
  if (jn == kNone) throw Error(ErrorCode::ValidationError, "compactification has no solution");

  auto& J = out.carries;
  J[n + 1] = 0;
  J[n] = jn;
  for (std::size_t i = n; i >= 1; --i) {
    J[i - 1] = pred[i][idx(J[i], J[i + 1])];
    ++out.steps;
  }
  std::vector<int> beta(n + 1);
  for (std::size_t i = 0; i <= n; ++i) beta[i] = s[i] + J[i] - q * J[i + 1];
  out.sum = PowerSum(q, std::move(beta));
  return out;
}

PowerSum compactify(const PowerSum& s) { return compactify_with_carries(s).sum; }

std::optional<std::size_t> increment_position(int q, std::span<const int> lower,
                                              std::span<const int> upper) {
  auto at = [](std::span<const int> v, std::size_t i) { return i < v.size() ? v[i] : 0; };
  std::size_t n = std::max(lower.size(), upper.size());
  std::size_t i = n;
  while (i > 0 && at(lower, i - 1) == at(upper, i - 1)) --i;
  if (i == 0) return std::nullopt;
  --i;
  if (at(upper, i) != at(lower, i) + 1) return std::nullopt;
  for (std::size_t j = 0; j < i; ++j) {
    const int a = at(lower, j), b = at(upper, j);
    if (!((a == q - 1 && b == 0) || (a == 0 && b == -(q - 1)))) return std::nullopt;
  }
  return i;
}

bool is_increment(const PowerSum& s, const PowerSum& t) {
  if (s.base() != t.base()) throw Error(ErrorCode::ValidationError, "base mismatch");
  if (!is_compact(s) || !is_compact(t)) throw Error(ErrorCode::NotCompact, "is_increment needs compact sums");
  return increment_position(s.base(), s.coeffs(), t.coeffs()).has_value();
}

std::strong_ordering cmp_lex(const PowerSum& s, const PowerSum& t) {
  if (s.base() != t.base()) throw Error(ErrorCode::ValidationError, "base mismatch");
  if (!is_compact(s) || !is_compact(t)) throw Error(ErrorCode::NotCompact, "cmp_lex needs compact sums");
  for (std::size_t i = std::max(s.size(), t.size()); i-- > 0;)
    if (s[i] != t[i]) return s[i] <=> t[i];
  return std::strong_ordering::equal;
}

}  // namespace pc
