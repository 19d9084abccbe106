#include "maxaut/arith.hpp"

#include "maxaut/bigint.hpp"

namespace maxaut {

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw InvalidArgs("checked_pow: negative exponent");
  std::int64_t r = 1;
  while (exp > 0) {
    if (exp & 1) r = checked_mul(r, base);
    exp >>= 1;
    if (exp > 0) base = checked_mul(base, base);
  }
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt r = 1, b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return r;
}

}  // namespace maxaut
