#pragma once

// Independent oracles and random generators shared by the test programs.
// Oracles deliberately avoid the library's own arithmetic paths: plain
// 128-bit integers, Gram determinants instead of Cayley-Menger, direct
// relabelling of a distance matrix instead of VertexPerm.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "heron/heron.hpp"

namespace oracle {

using i128 = __int128;

inline bool is_square(i128 n) {
  if (n < 0) return false;
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

inline heron::Int to_int(i128 n) {
  const bool neg = n < 0;
  unsigned __int128 m = neg ? -static_cast<unsigned __int128>(n) : static_cast<unsigned __int128>(n);
  std::string digits;
  do {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  } while (m != 0);
  return heron::Int((neg ? "-" : "") + digits);
}

/// (4d)^2 by the product form of Hero's formula.
inline i128 sixteen_area_sq(i128 a, i128 b, i128 c) { return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c); }

inline bool heronian_proper(i128 a, i128 b, i128 c) {
  const i128 s = sixteen_area_sq(a, b, c);
  return s > 0 && is_square(s);
}

/// 288 V^2 as the determinant of twice the Gram matrix at vertex P.
inline i128 twice_gram_det(const std::array<std::int64_t, 6>& e) {
  const i128 u = e[0], v = e[1], w = e[2], x = e[3], y = e[4], z = e[5];
  // edge vectors PQ, PR, PS with |PQ| = u, |PR| = v, |PS| = x
  const i128 g00 = 2 * u * u, g11 = 2 * v * v, g22 = 2 * x * x;
  const i128 g01 = u * u + v * v - w * w;  // 2 PQ.PR
  const i128 g02 = u * u + x * x - y * y;  // 2 PQ.PS
  const i128 g12 = v * v + x * x - z * z;  // 2 PR.PS
  return g00 * (g11 * g22 - g12 * g12) - g01 * (g01 * g22 - g12 * g02) + g02 * (g01 * g12 - g11 * g02);
}

/// Edge lengths after relabelling: new vertex i is old vertex p[i].
inline std::array<std::int64_t, 6> relabel(const std::array<std::int64_t, 6>& e, const std::array<int, 4>& p) {
  std::int64_t d[4][4] = {};
  const int pairs[6][2] = {{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}};
  for (int k = 0; k < 6; ++k) d[pairs[k][0]][pairs[k][1]] = d[pairs[k][1]][pairs[k][0]] = e[k];
  std::array<std::int64_t, 6> out{};
  for (int k = 0; k < 6; ++k) out[k] = d[p[pairs[k][0]]][p[pairs[k][1]]];
  return out;
}

inline bool is_greatest_relabelling(const std::array<std::int64_t, 6>& e) {
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    if (relabel(e, p) > e) return false;
  } while (std::next_permutation(p.begin(), p.end()));
  return true;
}

inline std::array<std::int64_t, 6> greatest_relabelling(const std::array<std::int64_t, 6>& e) {
  auto best = e;
  std::array<int, 4> p{0, 1, 2, 3};
  do best = std::max(best, relabel(e, p));
  while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Proper Heronian tetrahedra with every edge <= n, as greatest relabellings,
/// by nested loops over all edge choices with QP the longest edge.
inline std::vector<std::array<std::int64_t, 6>> heronian_tetrahedra(std::int64_t n, bool primitive_only) {
  std::vector<std::array<std::int64_t, 6>> out;
  for (std::int64_t u = 1; u <= n; ++u) {
    std::vector<std::pair<std::int64_t, std::int64_t>> faces;  // (second, third) with u
    for (std::int64_t a = 1; a <= u; ++a)
      for (std::int64_t b = 1; b <= u; ++b)
        if (heronian_proper(u, a, b)) faces.push_back({a, b});
    for (const auto& [v, w] : faces)
      for (const auto& [x, y] : faces)
        for (std::int64_t z = 1; z <= u; ++z) {
          if (!heronian_proper(v, x, z) || !heronian_proper(w, y, z)) continue;
          const std::array<std::int64_t, 6> e{u, v, w, x, y, z};
          const i128 g = twice_gram_det(e);
          if (g <= 0 || g % 2 != 0 || !is_square(g / 2)) continue;
          if (!is_greatest_relabelling(e)) continue;
          if (primitive_only) {
            std::int64_t c = 0;
            for (auto l : e) c = std::gcd(c, l);
            if (c != 1) continue;
          }
          out.push_back(e);
        }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Proper Heronian triangles with longest side <= n, descending sides.
inline std::vector<std::array<std::int64_t, 3>> heronian_triangles(std::int64_t n, bool primitive_only) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t a = 1; a <= n; ++a)
    for (std::int64_t b = 1; b <= a; ++b)
      for (std::int64_t c = 1; c <= b; ++c) {
        if (!heronian_proper(a, b, c)) continue;
        if (primitive_only && std::gcd(std::gcd(a, b), c) != 1) continue;
        out.push_back({a, b, c});
      }
  std::sort(out.begin(), out.end());
  return out;
}

/// 0 <= x <= y <= z with x^2 + y^2 + z^2 = w^2, by scanning x and y.
inline std::set<heron::ThreeSquaresSolution> three_squares(std::int64_t w) {
  std::set<heron::ThreeSquaresSolution> out;
  for (std::int64_t x = 0; 3 * x * x <= w * w; ++x)
    for (std::int64_t y = x; x * x + 2 * y * y <= w * w; ++y) {
      const std::int64_t r = w * w - x * x - y * y;
      if (is_square(r)) {
        const auto z = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(r))));
        out.insert({x, y, z, w});
      }
    }
  return out;
}

/// Lattice triangles in Z^2 congruent to (u, v, w) with P at the origin,
/// found by scanning the square [-u, u] x [-u, u] for Q and [-v, v]^2 for R.
inline std::set<heron::PointSet<2>> z2_strong_forms(std::int64_t u, std::int64_t v, std::int64_t w) {
  std::set<heron::PointSet<2>> out;
  std::vector<std::array<std::int64_t, 2>> qs, rs;
  for (std::int64_t a = -u; a <= u; ++a)
    for (std::int64_t b = -u; b <= u; ++b)
      if (a * a + b * b == u * u) qs.push_back({a, b});
  for (std::int64_t a = -v; a <= v; ++a)
    for (std::int64_t b = -v; b <= v; ++b)
      if (a * a + b * b == v * v) rs.push_back({a, b});
  for (const auto& q : qs)
    for (const auto& r : rs) {
      const std::int64_t dx = q[0] - r[0], dy = q[1] - r[1];
      if (dx * dx + dy * dy == w * w) out.insert(heron::strong_canonical(heron::PointSet<2>{{0, 0}, q, r}).vertices);
    }
  return out;
}

}  // namespace oracle

namespace gen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x4845524f4eULL);
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline heron::Quat quat(std::int64_t range) {
  return {uniform(-range, range), uniform(-range, range), uniform(-range, range), uniform(-range, range)};
}

inline heron::GaussInt gauss(std::int64_t range) { return {uniform(-range, range), uniform(-range, range)}; }

/// Primitive Pythagorean triple (a, b, c), a^2 + b^2 = c^2, from m > n > 0.
inline std::array<std::int64_t, 3> pythagorean(std::int64_t max_m) {
  for (;;) {
    const std::int64_t m = uniform(2, max_m), n = uniform(1, m - 1);
    if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
    return {m * m - n * n, 2 * m * n, m * m + n * n};
  }
}

/// A proper primitive Heronian triangle, descending, made by gluing two
/// right triangles along a common altitude (Heronian triangles are exactly
/// the rescaled ones of this shape).
inline heron::EdgeTriple heronian_triangle(std::int64_t max_m = 12) {
  for (;;) {
    auto t1 = pythagorean(max_m);
    auto t2 = pythagorean(max_m);
    if (uniform(0, 1)) std::swap(t1[0], t1[1]);
    if (uniform(0, 1)) std::swap(t2[0], t2[1]);
    // common altitude: t1[1] * k1 == t2[1] * k2
    const std::int64_t l = std::lcm(t1[1], t2[1]);
    const std::int64_t k1 = l / t1[1], k2 = l / t2[1];
    const std::int64_t base = uniform(0, 1) ? t1[0] * k1 + t2[0] * k2 : std::abs(t1[0] * k1 - t2[0] * k2);
    std::array<std::int64_t, 3> s{t1[2] * k1, t2[2] * k2, base};
    if (base == 0) continue;
    const std::int64_t g = std::gcd(std::gcd(s[0], s[1]), s[2]);
    for (auto& x : s) x /= g;
    std::sort(s.rbegin(), s.rend());
    heron::EdgeTriple t{{s[0], s[1], s[2]}};
    if (!heron::is_proper(t)) continue;
    return t;
  }
}

template <std::size_t Dim>
heron::PointSet<Dim> point_set(std::size_t n, std::int64_t range) {
  heron::PointSet<Dim> pts(n);
  for (auto& p : pts)
    for (auto& c : p) c = uniform(-range, range);
  return pts;
}

}  // namespace gen

namespace fixture {

inline std::string path(const std::string& name) { return std::string(HERON_FIXTURE_DIR) + "/" + name; }

inline std::vector<heron::EdgeHexad> read_hexads(const std::string& name) {
  std::ifstream in(path(name));
  std::vector<heron::EdgeHexad> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') out.push_back(heron::parse_hexad(line));
  return out;
}

}  // namespace fixture
