#pragma once

#include <cstdint>

#include "maxaut/errors.hpp"

// Checked 64-bit helpers for the normal-form arithmetic.  Exponents stay
// small (parameter validation pins p^(a+1) <= 2^31) but products of the
// form k*binom(i,2) can approach the int64 range, so every intermediate
// goes through these.

namespace maxaut {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticOverflow("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw ArithmeticOverflow("int64 overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticOverflow("int64 overflow in multiplication");
  return r;
}

// Floor division (quotient rounded toward -infinity, remainder in [0, b)).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  if (r < 0) r += b;
  return r;
}

// t*(t-1)/2, exact over the integers for any sign of t.
inline std::int64_t choose2(std::int64_t t) {
  std::int64_t u = checked_mul(t, checked_sub(t, 1));
  return u / 2;
}

// t*(t-1)*(t-2)/6, exact over the integers for any sign of t.
inline std::int64_t choose3(std::int64_t t) {
  std::int64_t u = checked_mul(t, checked_sub(t, 1));
  u = checked_mul(u, checked_sub(t, 2));
  return u / 6;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp);
bool is_prime(std::int64_t n);

}  // namespace maxaut
