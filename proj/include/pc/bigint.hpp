#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>

namespace pc {

// Exact integers for evaluation at desk scale. Never used by the solvers.
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultMaxBits = 4096;

// Number of bits needed for |x| (0 for x == 0).
std::size_t bit_length(const BigInt& x);

// q^e, throwing Overflow when the result would need more than max_bits bits.
BigInt checked_pow(int q, const BigInt& e, std::size_t max_bits);

// Tower function: tow_q(0) = 1, tow_q(n+1) = q^tow_q(n).
BigInt tow(int q, unsigned n, std::size_t max_bits = kDefaultMaxBits);

}  // namespace pc
