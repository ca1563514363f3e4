#include "pc/bigint.hpp"

#include "pc/error.hpp"

namespace pc {

std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(x)) + 1;
}

BigInt checked_pow(int q, const BigInt& e, std::size_t max_bits) {
  if (e < 0) throw Error(ErrorCode::NotAPowerCircuit, "negative exponent");
  // q >= 2, so q^e needs at least e+1 bits.
  if (e >= max_bits) throw Error(ErrorCode::Overflow, "exponent too large");
  BigInt r = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e));
  if (bit_length(r) > max_bits) throw Error(ErrorCode::Overflow, "value exceeds bit budget");
  return r;
}

BigInt tow(int q, unsigned n, std::size_t max_bits) {
  if (q < 2) throw Error(ErrorCode::InvalidBase, "q must be at least 2");
  BigInt v = 1;
  for (unsigned i = 0; i < n; ++i) v = checked_pow(q, v, max_bits);
  return v;
}

}  // namespace pc
