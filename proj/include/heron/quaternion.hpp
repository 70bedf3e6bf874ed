#pragma once

// Lipschitz-integer quaternions s + p i + q j + r k.
//
// A quaternion doubles as a projective point (scalar = LCD, vector = LCD
// times Cartesian coordinates) and as a rotor acting by P -> conj(X) P X.

#include <array>
#include <optional>
#include <ostream>
#include <tuple>
#include <utility>

#include "heron/exact.hpp"

namespace heron {

/// Which side a divisor, remainder or unit multiplies on.
enum class Side { left, right };

/// Componentwise rounding used by the remainder. half_up is floor(x + 1/2);
/// half_away rounds ties away from zero.
enum class Rounding { half_up, half_away };

inline Int round_rat(const Rat& x, Rounding mode) {
  if (mode == Rounding::half_up || x >= 0) return round_half_up(x);
  return -round_half_up(-x);
}

struct Quat {
  Int s = 0, p = 0, q = 0, r = 0;

  Quat() = default;
  Quat(Int s_, Int p_ = 0, Int q_ = 0, Int r_ = 0)
      : s(std::move(s_)), p(std::move(p_)), q(std::move(q_)), r(std::move(r_)) {}

  bool operator==(const Quat&) const = default;
  bool is_zero() const { return s == 0 && p == 0 && q == 0 && r == 0; }
  auto tie() const { return std::tie(s, p, q, r); }
  friend bool lex_less(const Quat& a, const Quat& b) { return a.tie() < b.tie(); }

  Quat operator-() const { return {-s, -p, -q, -r}; }
  friend Quat operator+(const Quat& a, const Quat& b) { return {a.s + b.s, a.p + b.p, a.q + b.q, a.r + b.r}; }
  friend Quat operator-(const Quat& a, const Quat& b) { return {a.s - b.s, a.p - b.p, a.q - b.q, a.r - b.r}; }
  friend Quat operator*(const Int& k, const Quat& a) { return {k * a.s, k * a.p, k * a.q, k * a.r}; }

  // Hamilton product.
  friend Quat operator*(const Quat& a, const Quat& b) {
    return {a.s * b.s - a.p * b.p - a.q * b.q - a.r * b.r,
            a.s * b.p + a.p * b.s + a.q * b.r - a.r * b.q,
            a.s * b.q - a.p * b.r + a.q * b.s + a.r * b.p,
            a.s * b.r + a.p * b.q - a.q * b.p + a.r * b.s};
  }

  friend std::ostream& operator<<(std::ostream& os, const Quat& x) {
    return os << '[' << x.s << ',' << x.p << ',' << x.q << ',' << x.r << ']';
  }
};

struct QuatRat {
  Rat s = 0, p = 0, q = 0, r = 0;
};

inline Quat quat_mul(const Quat& x, const Quat& y) { return x * y; }
inline Quat conj(const Quat& x) { return {x.s, -x.p, -x.q, -x.r}; }
inline Int norm(const Quat& x) { return x.s * x.s + x.p * x.p + x.q * x.q + x.r * x.r; }

inline Quat quat_round(const QuatRat& x, Rounding mode = Rounding::half_up) {
  return {round_rat(x.s, mode), round_rat(x.p, mode), round_rat(x.q, mode), round_rat(x.r, mode)};
}

inline QuatRat divide(const Quat& x, const Int& n) {
  return {Rat(x.s, n), Rat(x.p, n), Rat(x.q, n), Rat(x.r, n)};
}

/// left:  x - y <conj(y) x / |y|>
/// right: x - <x conj(y) / |y|> y
/// The norm of the result is not guaranteed to be below |y|.
inline Quat quat_mod(const Quat& x, const Quat& y, Side side, Rounding mode = Rounding::half_up) {
  if (y.is_zero()) throw DomainError("division by zero");
  const Int n = norm(y);
  if (side == Side::left) return x - y * quat_round(divide(conj(y) * x, n), mode);
  return x - quat_round(divide(x * conj(y), n), mode) * y;
}

/// Cofactor u with x == d u (left) or x == u d (right), if it exists.
inline std::optional<Quat> quat_div_exact(const Quat& x, const Quat& d, Side side) {
  if (d.is_zero()) throw DomainError("division by zero");
  const Int n = norm(d);
  const Quat t = side == Side::left ? conj(d) * x : x * conj(d);
  if (t.s % n != 0 || t.p % n != 0 || t.q % n != 0 || t.r % n != 0) return std::nullopt;
  return Quat{t.s / n, t.p / n, t.q / n, t.r / n};
}

inline const std::array<Quat, 8>& lipschitz_units() {
  static const std::array<Quat, 8> units{Quat{1}, Quat{-1}, Quat{0, 1}, Quat{0, -1},
                                         Quat{0, 0, 1}, Quat{0, 0, -1}, Quat{0, 0, 0, 1}, Quat{0, 0, 0, -1}};
  return units;
}

/// Among x*unit (side == right) or unit*x (side == left), the one with the
/// lexicographically greatest (s, p, q, r).
inline Quat canonical_associate(const Quat& x, Side side) {
  Quat best = x;
  for (const Quat& u : lipschitz_units()) {
    Quat a = side == Side::right ? x * u : u * x;
    if (lex_less(best, a)) best = std::move(a);
  }
  return best;
}

/// The Euclidean loop exactly as iterated, without normalising the
/// result. Throws GcdAbort when a remainder fails to shrink.
inline Quat quat_gcd_euclid(Quat y, Quat z, Side side, Rounding mode = Rounding::half_up) {
  if (y.is_zero() && z.is_zero()) throw DomainError("gcd(0,0) undefined");
  while (!z.is_zero()) {
    Quat x = std::move(y);
    y = std::move(z);
    z = quat_mod(x, y, side, mode);
    if (norm(z) >= norm(y)) throw GcdAbort();
  }
  return y;
}

/// Left (right) GCD: divides both arguments on the left (right) and is
/// unique up to right (left) units; returned as the canonical associate.
/// Existence is guaranteed when either norm is odd.
inline Quat quat_gcd(const Quat& y, const Quat& z, Side side) {
  return canonical_associate(quat_gcd_euclid(y, z, side), side == Side::left ? Side::right : Side::left);
}

/// True when a and b differ by a unit factor on the given side.
inline bool associated(const Quat& a, const Quat& b, Side unit_side) {
  return canonical_associate(a, unit_side) == canonical_associate(b, unit_side);
}

}  // namespace heron
