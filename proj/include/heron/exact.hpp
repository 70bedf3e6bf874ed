#pragma once

// Exact integer and rational arithmetic shared by every other module.
//
// Int and Rat are Boost.Multiprecision types; Rat is always kept in lowest
// terms with a positive denominator. Hot loops in the search and enumeration
// code use machine integers through the helpers at the bottom of this file.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "heron/errors.hpp"

namespace heron {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Rat& x) { return boost::multiprecision::denominator(x); }

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Floor of a / b for b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw DomainError("division by zero");
  Int q = a / b;  // truncates toward zero
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// floor(x + 1/2): halves round up, so 1/2 -> 1 and -1/2 -> 0.
inline Int round_half_up(const Rat& x) {
  const Int n = numerator(x);
  const Int d = denominator(x);
  return floor_div(2 * n + d, 2 * d);
}

/// Largest k with k*k <= n, by integer Newton iteration.
inline Int floor_sqrt(const Int& n) {
  if (n < 0) throw DomainError("negative radicand");
  if (n < 2) return n;
  // Start above the root: 2^ceil(bits/2) > sqrt(n).
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  Int x = Int(1) << ((bits + 1) / 2);
  for (;;) {
    Int y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

/// Exact square root: k with k*k == n, or nullopt.
inline std::optional<Int> int_sqrt(const Int& n) {
  Int k = floor_sqrt(n);
  if (k * k == n) return k;
  return std::nullopt;
}

inline bool is_square(const Int& n) { return n >= 0 && int_sqrt(n).has_value(); }

/// Least common multiple of the reduced denominators.
inline Int lcd(std::span<const Rat> values) {
  Int l = 1;
  for (const Rat& v : values) l = lcm(l, denominator(v));
  return l;
}

/// Integer vector divided by its content, sign fixed so the leading
/// (scalar) component is positive. The zero vector is returned unchanged.
inline std::vector<Int> primitive(std::vector<Int> v) {
  Int g = 0;
  for (const Int& c : v) g = gcd(g, c);
  if (g == 0) return v;
  if (!v.empty() && v.front() < 0) g = -g;
  for (Int& c : v) c /= g;
  return v;
}

/// Projective rational vector (scalar slot first, nonzero) to its primitive
/// integer representative. With scalar 1 the result's scalar is the LCD.
inline std::vector<Int> primitive_reduce(std::span<const Rat> v) {
  if (v.empty() || v.front() == 0) throw DomainError("projective vector needs a nonzero scalar");
  const Int l = lcd(v);
  std::vector<Int> out;
  out.reserve(v.size());
  for (const Rat& c : v) out.push_back(numerator(c) * (l / denominator(c)));
  return primitive(std::move(out));
}

inline std::int64_t to_i64(const Int& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
  return static_cast<std::int64_t>(x);
}

// ---- machine-integer helpers for hot loops ----

using i128 = __int128;

inline std::uint64_t floor_sqrt_u64(std::uint64_t n) {
  if (n < 2) return n;
  auto r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (static_cast<i128>(r) * r > static_cast<i128>(n)) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= static_cast<i128>(n)) ++r;
  return r;
}

inline std::optional<std::uint64_t> sqrt_u64(std::uint64_t n) {
  const std::uint64_t r = floor_sqrt_u64(n);
  if (r * r == n) return r;
  return std::nullopt;
}

/// Perfect-square test for a 128-bit value (negative -> false).
inline bool is_square_i128(i128 n) {
  if (n < 0) return false;
  if (n <= static_cast<i128>(std::numeric_limits<std::uint64_t>::max()))
    return sqrt_u64(static_cast<std::uint64_t>(n)).has_value();
  // Fall back to exact arithmetic for very large values.
  Int big = static_cast<std::uint64_t>(n >> 64);
  big <<= 64;
  big += static_cast<std::uint64_t>(n);
  return is_square(big);
}

}  // namespace heron
