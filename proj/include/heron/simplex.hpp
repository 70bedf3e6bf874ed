#pragma once

// Free triangles and tetrahedra described by integer edge lengths.
//
// Vertices are P, Q, R, S (indices 0..3). Edges are listed in sequential
// order [QP, RP, RQ, SP, SQ, SR]; a triangle uses the first three.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heron/exact.hpp"

namespace heron {

using Length = std::int64_t;

/// Index of edge {a, b} in sequential order.
constexpr int edge_index(int a, int b) {
  const int hi = a > b ? a : b;
  const int lo = a > b ? b : a;
  return hi * (hi - 1) / 2 + lo;
}

struct EdgeTriple {
  std::array<Length, 3> e{};  // QP, RP, RQ

  Length u() const { return e[0]; }
  Length v() const { return e[1]; }
  Length w() const { return e[2]; }
  Length diameter() const { return *std::max_element(e.begin(), e.end()); }
  auto operator<=>(const EdgeTriple&) const = default;
};

struct EdgeHexad {
  std::array<Length, 6> e{};  // QP, RP, RQ, SP, SQ, SR

  Length operator[](int i) const { return e[i]; }
  Length between(int a, int b) const { return e[edge_index(a, b)]; }
  Length diameter() const { return *std::max_element(e.begin(), e.end()); }
  auto operator<=>(const EdgeHexad&) const = default;
};

/// Vertex relabelling: new vertex i is old vertex from[i].
/// Written as the string of old names, e.g. "QRPS".
struct VertexPerm {
  std::array<int, 4> from{0, 1, 2, 3};

  static VertexPerm identity() { return {}; }
  bool operator==(const VertexPerm&) const = default;

  VertexPerm inverse() const {
    VertexPerm inv;
    for (int i = 0; i < 4; ++i) inv.from[from[i]] = i;
    return inv;
  }
  /// Relabel by this first, then by next.
  VertexPerm then(const VertexPerm& next) const {
    VertexPerm c;
    for (int i = 0; i < 4; ++i) c.from[i] = from[next.from[i]];
    return c;
  }
  bool is_transposition() const {
    int moved = 0;
    for (int i = 0; i < 4; ++i) moved += from[i] != i;
    return moved == 2;
  }

  std::string name() const {
    std::string s;
    for (int i : from) s += "PQRS"[i];
    return s;
  }
  static std::optional<VertexPerm> parse(std::string_view text) {
    if (text.size() != 4) return std::nullopt;
    VertexPerm p;
    std::array<bool, 4> seen{};
    for (int i = 0; i < 4; ++i) {
      const auto pos = std::string_view("PQRS").find(text[i]);
      if (pos == std::string_view::npos || seen[pos]) return std::nullopt;
      seen[pos] = true;
      p.from[i] = static_cast<int>(pos);
    }
    return p;
  }
};

/// All 24 vertex permutations, identity first, in lexicographic order.
inline const std::array<VertexPerm, 24>& all_vertex_perms() {
  static const auto perms = [] {
    std::array<VertexPerm, 24> out{};
    std::array<int, 4> a{0, 1, 2, 3};
    int k = 0;
    do out[k++].from = a;
    while (std::next_permutation(a.begin(), a.end()));
    return out;
  }();
  return perms;
}

inline EdgeHexad permute(const EdgeHexad& h, const VertexPerm& perm) {
  EdgeHexad out;
  for (int a = 1; a < 4; ++a)
    for (int b = 0; b < a; ++b) out.e[edge_index(a, b)] = h.between(perm.from[a], perm.from[b]);
  return out;
}

/// Faces as triples, each in sequential order of its own vertices:
/// PQR, PQS, PRS, QRS.
inline std::array<EdgeTriple, 4> faces(const EdgeHexad& h) {
  const auto& e = h.e;
  return {EdgeTriple{{e[0], e[1], e[2]}}, EdgeTriple{{e[0], e[3], e[4]}},
          EdgeTriple{{e[1], e[3], e[5]}}, EdgeTriple{{e[2], e[4], e[5]}}};
}

// ---- content ----

/// (4d)^2 = (u+v+w)(u+v-w)(u-v+w)(-u+v+w). Zero for collinear triples.
inline Int hero_area_sq16(const EdgeTriple& t) {
  const Int u = t.u(), v = t.v(), w = t.w();
  Int r = (u + v + w) * (u + v - w) * (u - v + w) * (-u + v + w);
  if (r < 0) throw DomainError("not a triangle");
  return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
inline Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Bordered Cayley-Menger matrix for the given squared distances
/// (full symmetric matrix, zero diagonal) and its determinant.
inline Int cayley_menger_det(const std::vector<std::vector<Int>>& sq) {
  const std::size_t n = sq.size();
  std::vector<std::vector<Int>> m(n + 1, std::vector<Int>(n + 1, 1));
  m[0][0] = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i + 1][j + 1] = sq[i][j];
  return determinant(std::move(m));
}

/// Squared distance matrix from squared edges given in sequential order.
inline std::vector<std::vector<Int>> squared_distance_matrix(std::span<const Int> sq_edges, std::size_t vertices) {
  std::vector<std::vector<Int>> sq(vertices, std::vector<Int>(vertices, 0));
  for (std::size_t a = 1; a < vertices; ++a)
    for (std::size_t b = 0; b < a; ++b)
      sq[a][b] = sq[b][a] = sq_edges[edge_index(static_cast<int>(a), static_cast<int>(b))];
  return sq;
}

/// The 4x4 Cayley-Menger route to (4d)^2. The bordered determinant equals
/// -(4d)^2, so the sign is flipped to agree with hero_area_sq16.
inline Int cm_area_sq(const EdgeTriple& t) {
  const std::array<Int, 3> sq{Int(t.u()) * t.u(), Int(t.v()) * t.v(), Int(t.w()) * t.w()};
  return -cayley_menger_det(squared_distance_matrix(sq, 3));
}

/// D = 2 (12 e)^2 for the tetrahedron.
inline Int cm_volume_det(const EdgeHexad& h) {
  std::array<Int, 6> sq;
  for (int i = 0; i < 6; ++i) sq[i] = Int(h[i]) * h[i];
  return cayley_menger_det(squared_distance_matrix(sq, 4));
}

/// 12 e when the volume is rational, else nullopt.
inline std::optional<Int> volume_times_12(const EdgeHexad& h) {
  const Int d = cm_volume_det(h);
  if (d < 0 || d % 2 != 0) return std::nullopt;
  return int_sqrt(d / 2);
}

/// 4 d when the area is rational (and the triple is a triangle), else nullopt.
inline std::optional<Int> area_times_4(const EdgeTriple& t) {
  const Int u = t.u(), v = t.v(), w = t.w();
  const Int r = (u + v + w) * (u + v - w) * (u - v + w) * (-u + v + w);
  if (r < 0) return std::nullopt;
  return int_sqrt(r);
}

inline bool is_heronian(const EdgeTriple& t) {
  return t.u() > 0 && t.v() > 0 && t.w() > 0 && area_times_4(t).has_value();
}

/// All faces rational and volume rational; properness is not required.
inline bool is_heronian(const EdgeHexad& h) {
  for (Length x : h.e)
    if (x <= 0) return false;
  for (const auto& f : faces(h))
    if (!is_heronian(f)) return false;
  return volume_times_12(h).has_value();
}

inline bool is_proper(const EdgeTriple& t) {
  const Int u = t.u(), v = t.v(), w = t.w();
  return (u + v + w) * (u + v - w) * (u - v + w) * (-u + v + w) > 0;
}

inline bool is_proper(const EdgeHexad& h) { return cm_volume_det(h) > 0; }

inline Length edge_gcd(std::span<const Length> e) {
  Length g = 0;
  for (Length x : e) g = std::gcd(g, x);
  return g;
}
inline bool is_primitive(const EdgeTriple& t) { return edge_gcd(t.e) == 1; }
inline bool is_primitive(const EdgeHexad& h) { return edge_gcd(h.e) == 1; }

// ---- canonical hexad and symmetry ----

/// Lexicographically greatest relabelling (entries compared most
/// significant first) and one permutation achieving it.
inline std::pair<EdgeHexad, VertexPerm> canonical_hexad(const EdgeHexad& h) {
  std::pair<EdgeHexad, VertexPerm> best{h, VertexPerm::identity()};
  for (const auto& perm : all_vertex_perms()) {
    EdgeHexad c = permute(h, perm);
    if (c > best.first) best = {c, perm};
  }
  return best;
}

/// Largest edge first, then the rest descending. Triangles have no other
/// meaningful order because every relabelling is a permutation of edges.
inline EdgeTriple canonical_triple(EdgeTriple t) {
  std::sort(t.e.begin(), t.e.end(), std::greater<>());
  return t;
}

inline std::vector<VertexPerm> stabilizer(const EdgeHexad& h) {
  std::vector<VertexPerm> out;
  for (const auto& perm : all_vertex_perms())
    if (permute(h, perm) == h) out.push_back(perm);
  return out;
}

enum class SymmetryTag {
  scalene,
  semi_isosceles,
  isosceles,
  semi_isohedral,
  isohedral,
  isohedral_isosceles,
  equilateral,
  regular,
};

inline std::string_view to_string(SymmetryTag t) {
  switch (t) {
    case SymmetryTag::scalene: return "scalene";
    case SymmetryTag::semi_isosceles: return "semi-isosceles";
    case SymmetryTag::isosceles: return "isosceles";
    case SymmetryTag::semi_isohedral: return "semi-isohedral";
    case SymmetryTag::isohedral: return "isohedral";
    case SymmetryTag::isohedral_isosceles: return "isohedral-isosceles";
    case SymmetryTag::equilateral: return "equilateral";
    case SymmetryTag::regular: return "regular";
  }
  return "?";
}

struct SymmetryClass {
  SymmetryTag tag = SymmetryTag::scalene;
  int isomorph_count = 1;
  bool operator==(const SymmetryClass&) const = default;
};

/// Classify by the group of vertex permutations fixing the hexad. Counts 2
/// and 4 each split according to whether the group contains a transposition
/// (a mirror through an edge) or only double transpositions.
inline SymmetryClass classify_symmetry(const EdgeHexad& h) {
  const auto stab = stabilizer(h);
  const int n = static_cast<int>(stab.size());
  const bool mirror = std::any_of(stab.begin(), stab.end(), [](const VertexPerm& p) { return p.is_transposition(); });
  switch (n) {
    case 1: return {SymmetryTag::scalene, 1};
    case 2: return {mirror ? SymmetryTag::semi_isosceles : SymmetryTag::semi_isohedral, 2};
    case 4: return {mirror ? SymmetryTag::isosceles : SymmetryTag::isohedral, 4};
    case 6: return {SymmetryTag::equilateral, 6};
    case 8: return {SymmetryTag::isohedral_isosceles, 8};
    case 24: return {SymmetryTag::regular, 24};
    default: throw DomainError("unexpected stabilizer order " + std::to_string(n));
  }
}

enum class TriangleVertex { P, Q, R };

/// cot(angle/2) = (s - a) s / d with s the semiperimeter, a the opposite
/// edge and d the area.
inline Rat cot_half_angle(const EdgeTriple& t, TriangleVertex vertex) {
  const auto four_d = area_times_4(t);
  if (!four_d || *four_d == 0) throw DomainError("improper or irrational triangle");
  const Length opposite = vertex == TriangleVertex::P ? t.w() : vertex == TriangleVertex::Q ? t.v() : t.u();
  const Rat s = Rat(Int(t.u()) + t.v() + t.w(), 2);
  const Rat d = Rat(*four_d, 4);
  return (s - Rat(opposite)) * s / d;
}

// ---- text format ----

/// Comma-separated positive decimal integers, optional brackets and spaces.
inline std::vector<Length> parse_lengths(std::string_view text) {
  std::vector<Length> out;
  std::string cleaned;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ' && c != '\t' && c != '\r') cleaned += c;
  std::string_view rest = cleaned;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    Length v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw std::invalid_argument("bad integer '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw std::invalid_argument("trailing comma");
  }
  return out;
}

inline EdgeHexad parse_hexad(std::string_view text) {
  const auto v = parse_lengths(text);
  if (v.size() != 6) throw std::invalid_argument("hexad needs six edge lengths [QP,RP,RQ,SP,SQ,SR]");
  EdgeHexad h;
  for (int i = 0; i < 6; ++i) {
    if (v[i] <= 0) throw std::invalid_argument("edge lengths must be positive");
    h.e[i] = v[i];
  }
  return h;
}

inline EdgeTriple parse_triple(std::string_view text) {
  const auto v = parse_lengths(text);
  if (v.size() != 3) throw std::invalid_argument("triangle needs three edge lengths [QP,RP,RQ]");
  EdgeTriple t;
  for (int i = 0; i < 3; ++i) {
    if (v[i] <= 0) throw std::invalid_argument("edge lengths must be positive");
    t.e[i] = v[i];
  }
  return t;
}

template <std::size_t N>
std::string format_lengths(const std::array<Length, N>& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < N; ++i) os << (i ? "," : "") << e[i];
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const EdgeHexad& h) { return os << '[' << format_lengths(h.e) << ']'; }
inline std::ostream& operator<<(std::ostream& os, const EdgeTriple& t) { return os << '[' << format_lengths(t.e) << ']'; }

}  // namespace heron
