#pragma once

// Canonical representatives of lattice point sets modulo the signed axis
// permutations (the 2^D D! isometries fixing the origin), translation, and
// optionally vertex relabelling.
//
// Ordering: vertex coordinates are read vertex-major, axis-minor as one
// long "number"; the lexicographically smallest reading is canonical.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <vector>

namespace heron {

template <std::size_t Dim>
using LatticePoint = std::array<std::int64_t, Dim>;

template <std::size_t Dim>
using PointSet = std::vector<LatticePoint<Dim>>;

/// out[i] = sign[i] * in[axis[i]].
template <std::size_t Dim>
struct SignedPerm {
  std::array<int, Dim> axis{};
  std::array<int, Dim> sign{};

  LatticePoint<Dim> operator()(const LatticePoint<Dim>& x) const {
    LatticePoint<Dim> y{};
    for (std::size_t i = 0; i < Dim; ++i) y[i] = sign[i] * x[axis[i]];
    return y;
  }

  int determinant() const {
    int d = 1;
    for (int s : sign) d *= s;
    for (std::size_t i = 0; i < Dim; ++i)
      for (std::size_t j = i + 1; j < Dim; ++j)
        if (axis[i] > axis[j]) d = -d;
    return d;
  }
};

/// Every origin-fixing lattice isometry: 48 in three dimensions, 8 in two.
template <std::size_t Dim>
const std::vector<SignedPerm<Dim>>& lattice_isometries() {
  static const auto group = [] {
    std::vector<SignedPerm<Dim>> g;
    std::array<int, Dim> axis{};
    std::iota(axis.begin(), axis.end(), 0);
    do {
      for (unsigned mask = 0; mask < (1u << Dim); ++mask) {
        SignedPerm<Dim> m;
        m.axis = axis;
        for (std::size_t i = 0; i < Dim; ++i) m.sign[i] = (mask >> i) & 1 ? -1 : 1;
        g.push_back(m);
      }
    } while (std::next_permutation(axis.begin(), axis.end()));
    return g;
  }();
  return group;
}

/// Subtract the per-axis minimum so every coordinate is nonnegative and
/// each axis has a zero somewhere.
template <std::size_t Dim>
PointSet<Dim> normalize_translation(PointSet<Dim> pts) {
  if (pts.empty()) return pts;
  for (std::size_t a = 0; a < Dim; ++a) {
    std::int64_t lo = pts[0][a];
    for (const auto& p : pts) lo = std::min(lo, p[a]);
    for (auto& p : pts) p[a] -= lo;
  }
  return pts;
}

template <std::size_t Dim>
PointSet<Dim> apply(const SignedPerm<Dim>& g, const PointSet<Dim>& pts) {
  PointSet<Dim> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(g(p));
  return out;
}

enum class Strength { weak, strong };

template <std::size_t Dim>
struct CanonicalEmbedding {
  PointSet<Dim> vertices;
  Strength strength = Strength::weak;

  auto operator<=>(const CanonicalEmbedding& o) const { return vertices <=> o.vertices; }
  bool operator==(const CanonicalEmbedding& o) const { return vertices == o.vertices; }
};

/// Earliest isomorph under lattice isometries; vertex order is kept, so
/// the result still carries the vertex labelling.
template <std::size_t Dim>
CanonicalEmbedding<Dim> weak_canonical(const PointSet<Dim>& pts) {
  CanonicalEmbedding<Dim> best{normalize_translation(pts), Strength::weak};
  for (const auto& g : lattice_isometries<Dim>()) {
    auto c = normalize_translation(apply(g, pts));
    if (c < best.vertices) best.vertices = std::move(c);
  }
  return best;
}

/// Earliest weak form over all vertex orders. For a fixed isometry the
/// earliest vertex order is the sorted one, so each image is sorted
/// rather than enumerating permutations.
template <std::size_t Dim>
CanonicalEmbedding<Dim> strong_canonical(const PointSet<Dim>& pts) {
  auto first = normalize_translation(pts);
  std::sort(first.begin(), first.end());
  CanonicalEmbedding<Dim> best{std::move(first), Strength::strong};
  for (const auto& g : lattice_isometries<Dim>()) {
    auto c = normalize_translation(apply(g, pts));
    std::sort(c.begin(), c.end());
    if (c < best.vertices) best.vertices = std::move(c);
  }
  return best;
}

template <std::size_t Dim>
std::ostream& operator<<(std::ostream& os, const CanonicalEmbedding<Dim>& c) {
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    os << (v ? " " : "") << "[1";
    for (auto x : c.vertices[v]) os << ',' << x;
    for (std::size_t pad = Dim; pad < 3; ++pad) os << ",0";
    os << ']';
  }
  return os;
}

}  // namespace heron
