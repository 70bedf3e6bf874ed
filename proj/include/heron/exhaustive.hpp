#pragma once

// Complete enumeration of lattice embeddings, and of Heronian simplices.
//
// Tetrahedra: fix P at the origin, place Q at every sphere point of radius u
// up to lattice symmetry and R at every sphere point of radius v, keep the
// pairs with |QR| = w, recover the rotor taking the axial face PQR onto the
// lattice face, and keep whichever mirror image of S lands on the lattice.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <thread>
#include <unordered_map>
#include <vector>

#include "heron/embedding.hpp"

namespace heron {

// ---- sums of three squares ----

/// x^2 + y^2 + z^2 = w^2 with 0 <= x <= y <= z.
struct ThreeSquaresSolution {
  std::int64_t x = 0, y = 0, z = 0, w = 0;
  auto operator<=>(const ThreeSquaresSolution&) const = default;
};

namespace detail {

inline std::int64_t isqrt(std::int64_t n) {
  return n <= 0 ? 0 : static_cast<std::int64_t>(floor_sqrt_u64(static_cast<std::uint64_t>(n)));
}

/// Solutions generated by (p^2+q^2-u^2-v^2, 2pu+2qv, 2pv-2qu) over the
/// parameter box with p^2+q^2+u^2+v^2 = w.
inline void parameterised_solutions(std::int64_t w, std::int64_t scale, std::set<ThreeSquaresSolution>& out) {
  for (std::int64_t p = 1; p <= isqrt(w); ++p) {
    // smallest q >= 0 with q^2 >= w/2 - p^2
    std::int64_t q = 0;
    if (w - 2 * p * p > 0) {
      q = isqrt((w - 2 * p * p) / 2);
      while (2 * q * q < w - 2 * p * p) ++q;
    }
    for (; q <= isqrt(w - p * p); ++q) {
      const std::int64_t pq = p * p + q * q;
      for (std::int64_t u = 0; u <= isqrt(std::min(pq, w - pq)); ++u) {
        const std::int64_t v = isqrt(w - pq - u * u);
        if (pq + u * u + v * v != w) continue;
        std::array<std::int64_t, 3> c{std::abs(pq - u * u - v * v), std::abs(2 * p * u + 2 * q * v),
                                      std::abs(2 * p * v - 2 * q * u)};
        std::sort(c.begin(), c.end());
        out.insert({c[0] * scale, c[1] * scale, c[2] * scale, w * scale});
      }
    }
  }
}

}  // namespace detail

/// All solutions for a given w, merging scaled solutions from every divisor.
inline std::vector<ThreeSquaresSolution> solve_three_squares(std::int64_t w) {
  if (w <= 0) throw DomainError("w must be positive");
  std::set<ThreeSquaresSolution> out;
  for (std::int64_t d = 1; d <= w; ++d)
    if (w % d == 0) detail::parameterised_solutions(d, w / d, out);
  return {out.begin(), out.end()};
}

/// Every signed permutation of every solution: the full sphere of radius w.
inline PointSet<3> sphere_points(const std::vector<ThreeSquaresSolution>& sols) {
  std::set<LatticePoint<3>> pts;
  for (const auto& s : sols)
    for (const auto& g : lattice_isometries<3>()) pts.insert(g(LatticePoint<3>{s.x, s.y, s.z}));
  return {pts.begin(), pts.end()};
}

// ---- rotor recovery ----

namespace detail {

/// Basis of the rational null space of an integer matrix (rows x 4).
inline std::vector<std::array<Rat, 4>> null_space(const std::vector<std::array<Int, 4>>& rows) {
  std::vector<std::array<Rat, 4>> m;
  for (const auto& r : rows) m.push_back({Rat(r[0]), Rat(r[1]), Rat(r[2]), Rat(r[3])});
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int c = 0; c < 4 && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    const Rat lead = m[rank][c];
    for (auto& x : m[rank]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (int j = 0; j < 4; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<std::array<Rat, 4>> basis;
  for (int free = 0; free < 4; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::array<Rat, 4> v{0, 0, 0, 0};
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m[k][free];
    basis.push_back(v);
  }
  return basis;
}

inline Quat pure(const Quat& x) { return {0, x.p, x.q, x.r}; }

}  // namespace detail

/// Rotor X with conj(X) A X ~ B for corresponding vertices of two faces
/// sharing the origin as first vertex. Solves s_B a X - s_A X b = 0 for
/// both edge vectors (8 homogeneous equations in the 4 components of X).
/// Returns the primitive integer generator with leading nonzero component
/// positive, or nullopt when no rotation maps one face onto the other.
inline std::optional<Quat> rotor_from_face_pair(const std::array<Quat, 3>& axial, const std::array<Quat, 3>& target) {
  for (const auto* face : {&axial, &target})
    if ((*face)[0].s == 0 || (*face)[0].p != 0 || (*face)[0].q != 0 || (*face)[0].r != 0)
      throw DomainError("faces must share the origin as first vertex");
  {
    const Quat& a = axial[1];
    const Quat& b = axial[2];
    if (a.q * b.r - a.r * b.q == 0 && a.r * b.p - a.p * b.r == 0 && a.p * b.q - a.q * b.p == 0)
      throw DomainError("degenerate (collinear) face");
  }
  static const std::array<Quat, 4> basis{Quat{1}, Quat{0, 1}, Quat{0, 0, 1}, Quat{0, 0, 0, 1}};
  std::vector<std::array<Int, 4>> rows(8);
  for (int k = 0; k < 2; ++k) {
    const Quat a = detail::pure(axial[k + 1]);
    const Quat b = detail::pure(target[k + 1]);
    const Int& sa = axial[k + 1].s;
    const Int& sb = target[k + 1].s;
    for (int j = 0; j < 4; ++j) {
      const Quat col = sb * (a * basis[j]) - sa * (basis[j] * b);
      rows[4 * k + 0][j] = col.s;
      rows[4 * k + 1][j] = col.p;
      rows[4 * k + 2][j] = col.q;
      rows[4 * k + 3][j] = col.r;
    }
  }
  const auto ns = detail::null_space(rows);
  if (ns.empty()) return std::nullopt;
  if (ns.size() > 1) throw DomainError("rotor null space is not one-dimensional");

  const auto& v = ns[0];
  Int l = 1;
  for (const Rat& c : v) l = lcm(l, denominator(c));
  std::vector<Int> iv;
  for (const Rat& c : v) iv.push_back(numerator(c) * (l / denominator(c)));
  Int g = 0;
  for (const Int& c : iv) g = gcd(g, c);
  for (const Int& c : iv)
    if (c != 0) {
      if (c < 0) g = -g;
      break;
    }
  for (Int& c : iv) c /= g;
  const Quat x{iv[0], iv[1], iv[2], iv[3]};

  for (int k = 1; k < 3; ++k)
    if (rotate_point_z3(x, axial[k]) != to_quat(primitive({target[k].s, target[k].p, target[k].q, target[k].r})))
      return std::nullopt;
  return x;
}

// ---- exhaustive tetrahedron search ----

struct SearchOptions {
  std::uint64_t budget = 0;  // (Q, R) pairs examined; 0 = unlimited
  unsigned jobs = 1;
};

template <std::size_t Dim>
struct SearchResult {
  EmbeddingFamily<Dim> family;
  std::uint64_t nodes = 0;
  bool complete = true;
};

/// Every lattice embedding of the labelled tetrahedron up to isometry.
/// Weak forms keep the input labelling; strong forms forget it.
inline SearchResult<3> exhaustive_embeddings(const EdgeHexad& h, const SearchOptions& opt = {}) {
  if (!is_heronian(h)) throw DomainError("not Heronian");
  if (!is_proper(h)) throw DomainError("improper simplex");

  const AxialPose pose = axial_pose(h, VertexPerm::identity());
  const std::array<Quat, 3> axial_face{pose.vertices[0], pose.vertices[1], pose.vertices[2]};
  const Quat& s_up = pose.vertices[3];
  const std::array<Quat, 2> s_candidates{s_up, Quat{s_up.s, s_up.p, s_up.q, -s_up.r}};

  const std::int64_t u = h[0], v = h[1], w = h[2];
  const std::int64_t dot = (u * u + v * v - w * w);  // twice Q.R
  const auto q_reps = solve_three_squares(u);
  const PointSet<3> r_sphere = sphere_points(solve_three_squares(v));

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  const unsigned jobs = std::max(1u, opt.jobs);
  std::vector<FamilyBuilder<3>> partial(jobs);

  auto worker = [&](unsigned id) {
    for (std::size_t qi = id; qi < q_reps.size(); qi += jobs) {
      if (exhausted.load(std::memory_order_relaxed)) return;
      const LatticePoint<3> q{q_reps[qi].x, q_reps[qi].y, q_reps[qi].z};
      const std::uint64_t seen = nodes.fetch_add(r_sphere.size(), std::memory_order_relaxed) + r_sphere.size();
      if (opt.budget && seen > opt.budget) {
        exhausted = true;
        return;
      }
      for (const auto& r : r_sphere) {
        if (2 * (q[0] * r[0] + q[1] * r[1] + q[2] * r[2]) != dot) continue;
        const std::array<Quat, 3> lattice_face{Quat{1}, Quat{1, q[0], q[1], q[2]}, Quat{1, r[0], r[1], r[2]}};
        const auto x = rotor_from_face_pair(axial_face, lattice_face);
        if (!x) throw std::logic_error("congruent faces without a rotor");
        for (const Quat& s : s_candidates) {
          const Quat img = rotate_point_z3(*x, s);
          if (img.s != 1) continue;
          partial[id].add(PointSet<3>{{0, 0, 0}, q, r, {to_i64(img.p), to_i64(img.q), to_i64(img.r)}});
        }
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }

  FamilyBuilder<3> all;
  for (const auto& p : partial) all.merge(p);
  SearchResult<3> out;
  out.family = all.build();
  out.nodes = nodes.load();
  out.complete = !exhausted.load();
  return out;
}

/// Every planar lattice embedding of the triangle up to isometry.
inline SearchResult<2> exhaustive_triangle_embeddings(const EdgeTriple& t) {
  if (!is_heronian(t) || !is_proper(t)) throw DomainError("not a proper Heronian triangle");
  const std::int64_t u = t.u(), v = t.v(), w = t.w();
  PointSet<2> circle_v;
  for (std::int64_t x = -v; x <= v; ++x) {
    const auto y = sqrt_u64(static_cast<std::uint64_t>(v * v - x * x));
    if (!y) continue;
    const auto yy = static_cast<std::int64_t>(*y);
    circle_v.push_back({x, yy});
    if (yy != 0) circle_v.push_back({x, -yy});
  }
  FamilyBuilder<2> family;
  SearchResult<2> out;
  for (std::int64_t x = 0; 2 * x * x <= u * u; ++x) {
    const auto y = sqrt_u64(static_cast<std::uint64_t>(u * u - x * x));
    if (!y) continue;
    const LatticePoint<2> q{x, static_cast<std::int64_t>(*y)};
    for (const auto& r : circle_v) {
      ++out.nodes;
      const std::int64_t dx = q[0] - r[0], dy = q[1] - r[1];
      if (dx * dx + dy * dy == w * w) family.add(PointSet<2>{{0, 0}, q, r});
    }
  }
  out.family = family.build();
  return out;
}

// ---- four dimensions ----

/// Squared edge lengths of a pentatope PQRST in sequential order
/// QP RP RQ SP SQ SR TP TQ TR TS.
struct PentatopeSpec {
  std::array<std::int64_t, 10> sq{};
};

using Point4 = std::array<std::int64_t, 4>;

/// Brute force: P at the origin, every other vertex within `bound` of it
/// on each axis, each satisfying all distances to earlier vertices.
inline std::vector<std::array<Point4, 5>> search_z4(const PentatopeSpec& spec, std::int64_t bound) {
  std::unordered_map<std::int64_t, std::vector<Point4>> by_norm;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      for (std::int64_t c = -bound; c <= bound; ++c)
        for (std::int64_t d = -bound; d <= bound; ++d) by_norm[a * a + b * b + c * c + d * d].push_back({a, b, c, d});

  auto dist2 = [](const Point4& x, const Point4& y) {
    std::int64_t s = 0;
    for (int i = 0; i < 4; ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
    return s;
  };

  std::vector<std::array<Point4, 5>> out;
  std::array<Point4, 5> cur{};
  std::function<void(int)> place = [&](int k) {
    if (k == 5) {
      out.push_back(cur);
      return;
    }
    const auto it = by_norm.find(spec.sq[edge_index(k, 0)]);
    if (it == by_norm.end()) return;
    for (const auto& cand : it->second) {
      bool ok = true;
      for (int j = 1; j < k && ok; ++j) ok = dist2(cand, cur[j]) == spec.sq[edge_index(k, j)];
      if (!ok) continue;
      cur[k] = cand;
      place(k + 1);
    }
  };
  place(1);
  return out;
}

// ---- Heronian corpus ----

namespace detail {

/// All proper Heronian triangles with sides <= max, indexed by edge pair.
class TriangleIndex {
 public:
  explicit TriangleIndex(Length max) {
    for (Length a = 1; a <= max; ++a)
      for (Length b = 1; b <= a; ++b)
        for (Length c = a - b + 1; c <= b; ++c) {
          const i128 s = static_cast<i128>(a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c);
          if (!is_square_i128(s)) continue;
          triangles_.push_back(EdgeTriple{{a, b, c}});
          link(a, b, c);
          link(a, c, b);
          link(b, c, a);
        }
    for (auto& [k, list] : third_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  /// Third sides c with {a, b, c} a proper Heronian triangle, ascending.
  const std::vector<Length>& third(Length a, Length b) const {
    static const std::vector<Length> none;
    const auto it = third_.find(key(a, b));
    return it == third_.end() ? none : it->second;
  }
  bool contains(Length a, Length b, Length c) const {
    const auto& l = third(a, b);
    return std::binary_search(l.begin(), l.end(), c);
  }
  /// Canonical (descending) triples ordered by diameter then lexicographically.
  const std::vector<EdgeTriple>& triangles() const { return triangles_; }

 private:
  static std::uint64_t key(Length a, Length b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  }
  void link(Length a, Length b, Length c) { third_[key(a, b)].push_back(c); }

  std::unordered_map<std::uint64_t, std::vector<Length>> third_;
  std::vector<EdgeTriple> triangles_;
};

}  // namespace detail

struct EnumerateOptions {
  Length max_diameter = 0;
  bool primitive_only = false;
  std::optional<EdgeHexad> resume_after;  // emit only cases after this one
};

/// Proper Heronian triangles with diameter <= max, canonical (descending)
/// form, in increasing lexicographic order. The sink returns false to stop.
inline void enumerate_heronian_triangles(Length max_diameter, bool primitive_only,
                                         const std::function<bool(const EdgeTriple&)>& sink) {
  std::vector<EdgeTriple> batch;
  for (Length a = 1; a <= max_diameter; ++a) {
    batch.clear();
    for (Length b = 1; b <= a; ++b)
      for (Length c = a - b + 1; c <= b; ++c) {
        const i128 s = static_cast<i128>(a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c);
        if (!is_square_i128(s)) continue;
        EdgeTriple t{{a, b, c}};
        if (!primitive_only || is_primitive(t)) batch.push_back(t);
      }
    std::sort(batch.begin(), batch.end());
    for (const auto& t : batch)
      if (!sink(t)) return;
  }
}

inline std::vector<EdgeTriple> heronian_triangles(Length max_diameter, bool primitive_only) {
  std::vector<EdgeTriple> out;
  enumerate_heronian_triangles(max_diameter, primitive_only, [&](const EdgeTriple& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

/// Proper Heronian tetrahedra with diameter <= max as canonical hexads, in
/// increasing lexicographic order (hence by diameter). Built by gluing
/// Heronian faces: PQR, then PQS on edge QP, then PRS on edge SP, then a
/// check of QRS and of the volume.
inline void enumerate_heronian_tetrahedra(const EnumerateOptions& opt,
                                          const std::function<bool(const EdgeHexad&)>& sink) {
  const detail::TriangleIndex index(opt.max_diameter);
  const Length start = opt.resume_after ? opt.resume_after->diameter() : 1;
  std::vector<EdgeHexad> batch;
  for (Length u = start; u <= opt.max_diameter; ++u) {
    batch.clear();
    for (Length v = 1; v <= u; ++v)
      for (Length w : index.third(u, v)) {
        if (w > u) break;
        for (Length x = 1; x <= u; ++x)
          for (Length y : index.third(u, x)) {
            if (y > u) break;
            for (Length z : index.third(v, x)) {
              if (z > u) break;
              if (!index.contains(w, y, z)) continue;
              const EdgeHexad h{{u, v, w, x, y, z}};
              if (canonical_hexad(h).first != h) continue;
              if (opt.primitive_only && !is_primitive(h)) continue;
              const auto twelve_e = volume_times_12(h);
              if (!twelve_e || *twelve_e == 0) continue;
              batch.push_back(h);
            }
          }
      }
    std::sort(batch.begin(), batch.end());
    for (const auto& h : batch) {
      if (opt.resume_after && h <= *opt.resume_after) continue;
      if (!sink(h)) return;
    }
  }
}

inline std::vector<EdgeHexad> heronian_tetrahedra(Length max_diameter, bool primitive_only) {
  std::vector<EdgeHexad> out;
  enumerate_heronian_tetrahedra({max_diameter, primitive_only, std::nullopt}, [&](const EdgeHexad& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

}  // namespace heron
