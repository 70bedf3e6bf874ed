#pragma once

// Gaussian integers Z[i]: planar points and planar rotors.

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <tuple>
#include <utility>

#include "heron/exact.hpp"

namespace heron {

struct GaussInt {
  Int re = 0;
  Int im = 0;

  GaussInt() = default;
  GaussInt(Int r, Int i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool operator==(const GaussInt&) const = default;
  bool is_zero() const { return re == 0 && im == 0; }

  GaussInt operator-() const { return {-re, -im}; }
  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussInt& z) {
    return os << '(' << z.re << (z.im < 0 ? "-" : "+") << abs(z.im) << "i)";
  }
};

inline GaussInt conj(const GaussInt& z) { return {z.re, -z.im}; }
inline Int norm(const GaussInt& z) { return z.re * z.re + z.im * z.im; }

/// x - y * <conj(y) x / norm(y)>, with componentwise floor(t + 1/2).
inline GaussInt gauss_mod(const GaussInt& x, const GaussInt& y) {
  if (y.is_zero()) throw DomainError("division by zero");
  const Int n = norm(y);
  const GaussInt t = conj(y) * x;
  const GaussInt q{round_half_up(Rat(t.re, n)), round_half_up(Rat(t.im, n))};
  return x - y * q;
}

/// Exact quotient x / y, or nullopt when y does not divide x.
inline std::optional<GaussInt> gauss_div_exact(const GaussInt& x, const GaussInt& y) {
  if (y.is_zero()) throw DomainError("division by zero");
  const Int n = norm(y);
  const GaussInt t = conj(y) * x;
  if (t.re % n != 0 || t.im % n != 0) return std::nullopt;
  return GaussInt{t.re / n, t.im / n};
}

/// The associate among {z, iz, -z, -iz} with lexicographically greatest (re, im).
inline GaussInt canonical_associate(const GaussInt& z) {
  const std::array<GaussInt, 4> all{z, GaussInt{-z.im, z.re}, -z, GaussInt{z.im, -z.re}};
  const GaussInt* best = &all[0];
  for (const auto& a : all)
    if (std::tie(a.re, a.im) > std::tie(best->re, best->im)) best = &a;
  return *best;
}

inline GaussInt gauss_gcd(GaussInt x, GaussInt y) {
  if (x.is_zero() && y.is_zero()) throw DomainError("gcd(0,0) undefined");
  while (!y.is_zero()) {
    GaussInt r = gauss_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return canonical_associate(x);
}

}  // namespace heron
