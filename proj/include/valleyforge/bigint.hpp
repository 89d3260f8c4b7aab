#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace valleyforge {

/// Signed arbitrary-precision integer used for every count and coefficient.
using BigInt = boost::multiprecision::cpp_int;

/// Non-negative count. Kept as an alias: the sign invariant is upheld by the
/// producers (catalan, brute_count, rule_counts) rather than by the type.
using BigCount = BigInt;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

/// C(a, b), with C(a, b) = 0 whenever b < 0, a < 0 or b > a.
inline BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact: r is C(a-b+i, i) after this step
  }
  return r;
}

/// (-1)^e for any integer e.
constexpr int sign_pow(std::int64_t e) noexcept { return (e % 2 == 0) ? 1 : -1; }

}  // namespace valleyforge
