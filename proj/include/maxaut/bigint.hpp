#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace maxaut {

// Exact integers for Hall bounds, orders and counters.
using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(const BigInt& base, std::uint64_t exp);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace maxaut
