#pragma once

// Rational axial pose: P at the origin, Q on the i axis, R in the (i, j)
// plane, S above it. Vertices are primitive projective quaternions whose
// scalar is the LCD of the Cartesian coordinates.

#include <sstream>
#include <string>
#include <vector>

#include "heron/quaternion.hpp"
#include "heron/simplex.hpp"

namespace heron {

struct AxialPose {
  std::vector<Quat> vertices;  // 3 or 4
  std::vector<Length> edges;   // sequential order, matching `vertices`
  VertexPerm permutation;      // relabelling applied to the source before posing
};

/// Squared distance between two projective points after conormalising.
inline Rat squared_distance(const Quat& a, const Quat& b) {
  if (a.s == 0 || b.s == 0) throw DomainError("point at infinity has no distance");
  const Rat dp = Rat(a.p, a.s) - Rat(b.p, b.s);
  const Rat dq = Rat(a.q, a.s) - Rat(b.q, b.s);
  const Rat dr = Rat(a.r, a.s) - Rat(b.r, b.s);
  return dp * dp + dq * dq + dr * dr;
}

/// Every pairwise conormalised squared distance equals the squared edge.
inline bool distances_match(const std::vector<Quat>& vertices, const std::vector<Length>& edges) {
  const int n = static_cast<int>(vertices.size());
  if (static_cast<int>(edges.size()) != n * (n - 1) / 2) return false;
  for (int a = 1; a < n; ++a)
    for (int b = 0; b < a; ++b) {
      const Length len = edges[edge_index(a, b)];
      if (squared_distance(vertices[a], vertices[b]) != Rat(Int(len) * len)) return false;
    }
  return true;
}

inline Quat projective(const Rat& x, const Rat& y, const Rat& z) {
  const std::array<Rat, 4> v{Rat(1), x, y, z};
  const auto p = primitive_reduce(v);
  return {p[0], p[1], p[2], p[3]};
}

namespace detail {

struct PlanarPose {
  Rat q1, r1, r2;
};

inline PlanarPose planar_pose(const EdgeTriple& t) {
  const auto four_d = area_times_4(t);
  if (!four_d) throw DomainError("not Heronian: irrational area");
  if (*four_d == 0) throw DomainError("improper simplex: axial pose formulas invalid");
  const Int u = t.u(), v = t.v(), w = t.w();
  const Rat d = Rat(*four_d, 4);
  PlanarPose pp;
  pp.q1 = Rat(u);
  pp.r1 = Rat(v * v - w * w + u * u, 2 * u);
  pp.r2 = 2 * d / Rat(u);
  return pp;
}

}  // namespace detail

/// Axial pose of a Heronian triangle with Q on the i axis at distance u.
inline AxialPose axial_pose_triangle(const EdgeTriple& t) {
  const auto pp = detail::planar_pose(t);
  AxialPose pose;
  pose.vertices = {Quat{1}, projective(pp.q1, 0, 0), projective(pp.r1, pp.r2, 0)};
  pose.edges = {t.e.begin(), t.e.end()};
  if (!distances_match(pose.vertices, pose.edges)) throw std::logic_error("triangle pose failed distance check");
  return pose;
}

/// Axial pose of the relabelled tetrahedron. `altitude_sign` selects the
/// sign of the k coordinate of S (+1 by default, -1 for the mirror image).
inline AxialPose axial_pose(const EdgeHexad& h, const VertexPerm& perm, int altitude_sign = 1) {
  const EdgeHexad ph = permute(h, perm);
  if (!is_heronian(ph)) throw DomainError("not Heronian");
  const auto twelve_e = volume_times_12(ph);
  if (!twelve_e || *twelve_e == 0) throw DomainError("improper simplex: axial pose formulas invalid");

  const auto pp = detail::planar_pose(EdgeTriple{{ph[0], ph[1], ph[2]}});
  const Int x = ph[3], y = ph[4], z = ph[5];
  const Rat d = pp.r2 * pp.q1 / 2;
  const Rat e = Rat(*twelve_e, 12);

  const Rat s1 = (Rat(x * x - y * y) + pp.q1 * pp.q1) / (2 * pp.q1);
  const Rat s2 = (Rat(x * x - z * z) + pp.r1 * pp.r1 + pp.r2 * pp.r2 - 2 * s1 * pp.r1) / (2 * pp.r2);
  const Rat s3 = Rat(altitude_sign < 0 ? -3 : 3) * e / d;

  AxialPose pose;
  pose.vertices = {Quat{1}, projective(pp.q1, 0, 0), projective(pp.r1, pp.r2, 0), projective(s1, s2, s3)};
  pose.edges = {ph.e.begin(), ph.e.end()};
  pose.permutation = perm;
  if (!distances_match(pose.vertices, pose.edges)) throw std::logic_error("tetrahedron pose failed distance check");
  return pose;
}

/// Every prime factor of n is 1 mod 4 (n >= 1; in particular n is odd).
inline bool prime_factors_all_1mod4(Int n) {
  if (n < 1) return false;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    if (p % 4 != 1) return false;
    while (n % p == 0) n /= p;
  }
  return n == 1 || n % 4 == 1;
}

inline bool check_denominators_1mod4(const AxialPose& pose) {
  for (const Quat& v : pose.vertices)
    if (!prime_factors_all_1mod4(v.s)) return false;
  return true;
}

}  // namespace heron
