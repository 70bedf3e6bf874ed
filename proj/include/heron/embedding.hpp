#pragma once

// Congruent lattice embedding by GCD rotation.
//
// Starting from an axial pose, each vertex with scalar (LCD) s > 1 is moved
// to the lattice by the rotor X = GCD_L(S, s), applied to every vertex as
// P -> conj(X) P X. For triangles the planar analogue uses Gaussian GCD.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "heron/canonical.hpp"
#include "heron/gaussian.hpp"
#include "heron/pose.hpp"

namespace heron {

struct LatticeEmbedding {
  std::vector<Quat> vertices;  // scalar 1; k component 0 for planar embeddings
  std::vector<Length> edges;   // sequential order, matching `vertices`
  VertexPerm permutation;      // source relabelling that produced `edges`
  std::vector<Quat> rotors;    // in application order
};

/// How each GCD rotor is chosen among its associates. `euclid` keeps the
/// raw output of the left Euclidean loop with ties rounded away from zero;
/// `canonical` uses quat_gcd's normalised associate. Either choice yields
/// the same embedding up to a lattice isometry.
enum class RotorRule { euclid, canonical };

inline Quat rotor_gcd(const Quat& target, const Int& scalar, RotorRule rule) {
  if (rule == RotorRule::canonical) return quat_gcd(target, Quat{scalar}, Side::left);
  return quat_gcd_euclid(target, Quat{scalar}, Side::left, Rounding::half_away);
}

inline Quat to_quat(const std::vector<Int>& v) { return {v[0], v[1], v[2], v[3]}; }

/// Primitive representative of conj(x) p x.
inline Quat rotate_point_z3(const Quat& x, const Quat& p) {
  if (x.is_zero()) throw DomainError("zero rotor");
  const Quat y = conj(x) * p * x;
  return to_quat(primitive({y.s, y.p, y.q, y.r}));
}

/// Move points[target] to the lattice, carrying every other point along.
/// Points before `target` must already be lattice points. Returns the
/// rotated points and the rotor (1 when the target was already a lattice
/// point).
inline std::pair<std::vector<Quat>, Quat> embed_step_z3(std::vector<Quat> points, std::size_t target,
                                                         RotorRule rule = RotorRule::euclid) {
  if (target >= points.size()) throw std::out_of_range("target index");
  for (std::size_t i = 0; i < target; ++i)
    if (points[i].s != 1) throw DomainError("points before the target must be lattice points");
  const Int s = points[target].s;
  if (s == 1) return {std::move(points), Quat{1}};
  if (s % 2 == 0) throw DomainError("even LCD: GCD uniqueness not guaranteed");

  const Quat x = rotor_gcd(points[target], s, rule);
  if (norm(x) != s) throw DomainError("target not primitive / prime split failure");
  for (auto& p : points) p = rotate_point_z3(x, p);
  for (std::size_t i = 0; i <= target; ++i)
    if (points[i].s != 1) throw std::logic_error("GCD rotor failed to reach the lattice");
  return {std::move(points), x};
}

inline bool verify_embedding(const LatticeEmbedding& e) {
  for (const Quat& v : e.vertices)
    if (v.s != 1) return false;
  return distances_match(e.vertices, e.edges);
}

inline LatticeEmbedding embed_pose_z3(const AxialPose& pose, RotorRule rule = RotorRule::euclid) {
  LatticeEmbedding out;
  out.edges = pose.edges;
  out.permutation = pose.permutation;
  std::vector<Quat> pts = pose.vertices;
  for (std::size_t target = 1; target < pts.size(); ++target) {
    auto [next, x] = embed_step_z3(std::move(pts), target, rule);
    pts = std::move(next);
    if (x != Quat{1}) out.rotors.push_back(x);
    if (!distances_match(pts, out.edges)) throw std::logic_error("rotation broke congruence");
  }
  out.vertices = std::move(pts);
  if (!verify_embedding(out)) throw std::logic_error("embedding failed verification");
  return out;
}

/// Pose the relabelled tetrahedron, then embed R and S in turn.
inline LatticeEmbedding embed_tetra_z3(const EdgeHexad& h, const VertexPerm& perm = VertexPerm::identity(),
                                       RotorRule rule = RotorRule::euclid) {
  return embed_pose_z3(axial_pose(h, perm), rule);
}

// ---- lattice point views ----

inline PointSet<3> lattice_points3(const std::vector<Quat>& vertices) {
  PointSet<3> out;
  for (const Quat& v : vertices) {
    if (v.s != 1) throw DomainError("not a lattice point");
    out.push_back({to_i64(v.p), to_i64(v.q), to_i64(v.r)});
  }
  return out;
}

inline PointSet<2> lattice_points2(const std::vector<Quat>& vertices) {
  PointSet<2> out;
  for (const Quat& v : vertices) {
    if (v.s != 1 || v.r != 0) throw DomainError("not a planar lattice point");
    out.push_back({to_i64(v.p), to_i64(v.q)});
  }
  return out;
}

/// Vertices relabelled back to the source order: result[perm.from[i]] = vertices[i].
template <class T>
std::vector<T> unpermute(const std::vector<T>& vertices, const VertexPerm& perm) {
  std::vector<T> out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) out[perm.from[i]] = vertices[i];
  return out;
}

/// Distinct canonical forms of a set of embeddings, all labelled in the
/// source vertex order.
template <std::size_t Dim>
struct EmbeddingFamily {
  std::vector<CanonicalEmbedding<Dim>> weak;
  std::vector<CanonicalEmbedding<Dim>> strong;
};

template <std::size_t Dim>
class FamilyBuilder {
 public:
  void add(const PointSet<Dim>& labelled) {
    weak_.insert(weak_canonical(labelled));
    strong_.insert(strong_canonical(labelled));
  }
  void merge(const FamilyBuilder& o) {
    weak_.insert(o.weak_.begin(), o.weak_.end());
    strong_.insert(o.strong_.begin(), o.strong_.end());
  }
  EmbeddingFamily<Dim> build() const {
    return {{weak_.begin(), weak_.end()}, {strong_.begin(), strong_.end()}};
  }

 private:
  std::set<CanonicalEmbedding<Dim>> weak_;
  std::set<CanonicalEmbedding<Dim>> strong_;
};

/// GCD embeddings over all 24 vertex relabellings. At most 4 strong forms
/// can arise: once P, Q, R are placed the choice of S decides the result.
inline EmbeddingFamily<3> gcd_embedding_family(const EdgeHexad& h, RotorRule rule = RotorRule::euclid) {
  FamilyBuilder<3> family;
  for (const auto& perm : all_vertex_perms()) {
    const auto e = embed_tetra_z3(h, perm, rule);
    family.add(unpermute(lattice_points3(e.vertices), perm));
  }
  auto out = family.build();
  if (out.strong.size() > 4) throw std::logic_error("more than 4 distinct GCD embeddings");
  return out;
}

// ---- triangles ----

/// Planar embedding by Gaussian GCD: X = GCD(rR, r), every point mapped by
/// P -> conj(X)^2 P / r. The rotor is recorded as the quaternion f + g k
/// corresponding to X = f + g i.
inline LatticeEmbedding embed_triangle_z2(const EdgeTriple& t) {
  const AxialPose pose = axial_pose_triangle(t);
  const Quat& rq = pose.vertices[2];
  const Int r = rq.s;
  LatticeEmbedding out;
  out.edges = pose.edges;
  if (r == 1) {
    out.vertices = pose.vertices;
  } else {
    const GaussInt x = gauss_gcd(GaussInt{rq.p, rq.q}, GaussInt{r});
    if (norm(x) != r) throw DomainError("Gaussian GCD norm differs from the LCD");
    const GaussInt x2 = conj(x) * conj(x);
    for (const Quat& v : pose.vertices) {
      // v = [s, a, b, 0] is the point (a + b i) / s; the image is x2 (a + b i) / (s r).
      const GaussInt img = x2 * GaussInt{v.p, v.q};
      const Int den = v.s * r;
      if (img.re % den != 0 || img.im % den != 0) throw std::logic_error("Gaussian rotor missed the lattice");
      out.vertices.push_back(Quat{1, img.re / den, img.im / den, 0});
    }
    out.rotors.push_back(Quat{x.re, 0, 0, x.im});
  }
  if (!verify_embedding(out)) throw std::logic_error("triangle embedding failed verification");
  return out;
}

/// The same planar embedding routed through quaternion GCD on points
/// 1 + x i + y j; the rotor has the form f + g k and keeps the plane.
inline LatticeEmbedding embed_triangle_via_z3(const EdgeTriple& t, RotorRule rule = RotorRule::euclid) {
  LatticeEmbedding out = embed_pose_z3(axial_pose_triangle(t), rule);
  for (const Quat& v : out.vertices)
    if (v.r != 0) throw std::logic_error("quaternion rotor left the plane");
  return out;
}

}  // namespace heron
