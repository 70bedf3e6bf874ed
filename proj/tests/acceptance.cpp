// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace heron;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<Verdict()> check;
};

const EdgeHexad kExample{{2431, 2375, 1044, 2296, 2175, 1479}};
const EdgeHexad kIsohedral{{8484, 6625, 6409, 6409, 6625, 8484}};
constexpr std::uint64_t kSearchBudget = 1'000'000'000;

VertexPerm perm(const char* name) { return *VertexPerm::parse(name); }

template <class T>
bool contains(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::string count_text(std::size_t strong, std::size_t weak) {
  return std::to_string(strong) + " strong / " + std::to_string(weak) + " weak";
}

Verdict example_one() {
  const auto e = embed_tetra_z3(kExample, perm("QRPS"));
  const std::vector<Quat> raw{{1, 0, 0, 0}, {1, 396, 864, 432}, {1, 396, -561, 2332}, {1, 1740, 783, 1044}};
  const PointSet<3> canon{{0, 0, 396}, {561, 2332, 0}, {1344, 1288, 1740}, {1425, 1900, 396}};
  const bool rotors = e.rotors.size() == 2 && associated(e.rotors[0], Quat{-5, 0, 0, 2}, Side::right) &&
                      associated(e.rotors[1], Quat{-2, 2, 2, 1}, Side::right);
  const bool ok = rotors && e.vertices == raw && strong_canonical(lattice_points3(e.vertices)).vertices == canon &&
                  verify_embedding(e);
  return {ok, rotors ? "rotors, raw vertices, canonical form" : "rotor mismatch"};
}

Verdict example_two() {
  const PointSet<3> one{{0, 0, 396}, {561, 2332, 0}, {1344, 1288, 1740}, {1425, 1900, 396}};
  const PointSet<3> two{{0, 0, 396}, {224, 1848, 1740}, {665, 2280, 396}, {1529, 1848, 0}};
  const auto e = embed_tetra_z3(kExample, perm("PQSR"));
  const bool two_ok = strong_canonical(lattice_points3(e.vertices)).vertices == two;
  std::set<PointSet<3>> forms;
  for (const auto& p : all_vertex_perms()) forms.insert(strong_canonical(lattice_points3(embed_tetra_z3(kExample, p).vertices)).vertices);
  const bool ok = two_ok && forms == std::set<PointSet<3>>{one, two};
  return {ok, std::to_string(forms.size()) + " strong forms over 24 relabellings"};
}

Verdict example_three() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto e = embed_tetra_z3(kIsohedral, perm("PRQS"));
  const bool rotor = e.rotors.size() == 1 && associated(e.rotors[0], Quat{0, -1, -2, 0}, Side::right);
  const auto gcd = gcd_embedding_family(kIsohedral);
  const double gcd_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto ex = exhaustive_embeddings(kIsohedral, {kSearchBudget, 1});
  const bool ok = rotor && gcd.strong.size() == 1 && gcd.weak.size() == 4 && gcd_s < 1.0 && ex.complete &&
                  ex.family.strong.size() == 9 && ex.family.weak.size() == 36;
  std::ostringstream d;
  d << "GCD " << count_text(gcd.strong.size(), gcd.weak.size()) << " in " << gcd_s << " s; exhaustive "
    << count_text(ex.family.strong.size(), ex.family.weak.size()) << ", " << ex.nodes << " nodes of budget "
    << kSearchBudget;
  return {ok, d.str()};
}

Verdict family_counts(const std::vector<EdgeHexad>& corpus) {
  const bool named = gcd_embedding_family(EdgeHexad{{1073, 975, 448, 495, 952, 840}}).strong.size() == 2 &&
                     gcd_embedding_family(EdgeHexad{{1360, 1092, 548, 975, 865, 663}}).strong.size() == 3 &&
                     gcd_embedding_family(EdgeHexad{{45100, 43911, 6929, 34476, 40544, 36975}}).strong.size() == 4;
  std::size_t most = 0;
  for (const auto& h : corpus) most = std::max(most, gcd_embedding_family(h).strong.size());
  return {named && most <= 4,
          "2, 3, 4 for the named cases; max " + std::to_string(most) + " over " + std::to_string(corpus.size()) +
              " primitive cases with diameter <= 600"};
}

Verdict third_embedding() {
  const auto ex = exhaustive_embeddings(kExample, {kSearchBudget, 1});
  const auto third = strong_canonical(PointSet<3>{{0, 0, 0}, {224, 672, 2184}, {665, 1824, 1368}, {1529, 1716, 792}});
  const auto gcd = gcd_embedding_family(kExample);
  const bool ok = ex.complete && ex.family.strong.size() == 3 && contains(ex.family.strong, third) &&
                  !contains(gcd.strong, third);
  return {ok, count_text(ex.family.strong.size(), ex.family.weak.size()) + ", " + std::to_string(ex.nodes) + " nodes"};
}

Verdict triangle_uniqueness() {
  constexpr std::size_t count = 1000;
  const auto tris = heronian_triangles(600, true);
  if (tris.size() < count) return {false, "too few primitive triangles enumerated"};
  for (std::size_t i = 0; i < count; ++i) {
    const auto r = exhaustive_triangle_embeddings(tris[i]);
    if (r.family.strong.size() != 1) return {false, "two or more embeddings of " + format_lengths(tris[i].e)};
    if (r.family.strong[0].vertices != strong_canonical(lattice_points2(embed_triangle_z2(tris[i]).vertices)).vertices)
      return {false, "GCD embedding differs for " + format_lengths(tris[i].e)};
  }
  return {true, std::to_string(count) + " triangles, diameter <= " + std::to_string(tris[count - 1].diameter())};
}

Verdict corpus_embedding() {
  const auto corpus = heronian_tetrahedra(300, true);
  const auto frozen = fixture::read_hexads("tetra_primitive_300.txt");
  if (corpus != frozen) return {false, "enumeration differs from the frozen oracle list"};
  std::size_t embeddings = 0;
  for (const auto& h : corpus)
    for (const auto& p : all_vertex_perms()) {
      for (int sign : {1, -1})
        if (!check_denominators_1mod4(axial_pose(h, p, sign)))
          return {false, "denominator check failed for " + format_lengths(h.e) + " " + p.name()};
      if (!verify_embedding(embed_tetra_z3(h, p))) return {false, "bad embedding " + format_lengths(h.e) + " " + p.name()};
      ++embeddings;
    }
  return {true, std::to_string(corpus.size()) + " tetrahedra, " + std::to_string(embeddings) + " embeddings verified"};
}

Verdict stuck_gcd() {
  try {
    quat_gcd(Quat{2}, Quat{1, 1, 1, 1}, Side::left);
  } catch (const GcdAbort&) {
    return {true, "abort raised"};
  }
  return {false, "no abort"};
}

Verdict pentatope() {
  const PentatopeSpec spec{{1, 2, 3, 2, 3, 2, 1, 2, 1, 1}};
  const auto found = search_z4(spec, 2);
  std::vector<std::vector<Int>> m{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 1, 2, 2}};
  const bool volume = Rat(abs(determinant(m)), 3) == Rat(1);
  const std::array<Int, 10> sq{1, 2, 3, 2, 3, 2, 1, 2, 1, 1};
  const bool cm = cayley_menger_det(squared_distance_matrix(sq, 5)) == Int(-16);
  std::ostringstream d;
  d << "volume 1/24 " << (volume && cm ? "confirmed" : "NOT confirmed") << "; search_z4 found " << found.size()
    << " embeddings";
  if (!found.empty()) {
    d << ", e.g.";
    for (const auto& p : found.front()) d << " (" << p[0] << ',' << p[1] << ',' << p[2] << ',' << p[3] << ')';
  }
  return {found.empty() && volume && cm, d.str()};
}

Verdict three_squares() {
  for (std::int64_t w = 1; w <= 200; ++w) {
    const auto s = solve_three_squares(w);
    if (std::set<ThreeSquaresSolution>(s.begin(), s.end()) != oracle::three_squares(w))
      return {false, "mismatch at w = " + std::to_string(w)};
  }
  return {true, "w = 1..200"};
}

Verdict properties() {
  constexpr int n = 10000;
  int failures = 0;
  for (int i = 0; i < n; ++i) {
    const Quat x = gen::quat(1'000'000), y = gen::quat(1'000'000);
    failures += norm(x * y) != norm(x) * norm(y);
    const GaussInt a = gen::gauss(1'000'000), b = gen::gauss(1'000'000);
    failures += norm(a * b) != norm(a) * norm(b);
  }
  for (int i = 0; i < n; ++i) {
    const GaussInt x = gen::gauss(100000), y = gen::gauss(100000);
    if (x.is_zero() && y.is_zero()) continue;
    const GaussInt g = gauss_gcd(x, y);
    failures += !gauss_div_exact(x, g) || !gauss_div_exact(y, g);
  }
  int quat_gcds = 0, aborts = 0;
  while (quat_gcds < n) {
    Quat y = gen::quat(300), z = gen::quat(300);
    if (norm(y) % 2 == 0) y.s += 1;
    const Side side = quat_gcds % 2 ? Side::left : Side::right;
    Quat g;
    try {
      g = quat_gcd(y, z, side);
    } catch (const GcdAbort&) {
      ++aborts;
      continue;
    }
    ++quat_gcds;
    failures += !quat_div_exact(y, g, side) || !quat_div_exact(z, g, side);
  }
  const auto& group = lattice_isometries<3>();
  for (int i = 0; i < n; ++i) {
    const auto pts = gen::point_set<3>(4, 50);
    const auto w = weak_canonical(pts), s = strong_canonical(pts);
    auto moved = apply(group[gen::uniform(0, 47)], pts);
    for (auto& p : moved) p[0] += 7;
    failures += weak_canonical(w.vertices) != w || strong_canonical(s.vertices) != s;
    failures += weak_canonical(moved) != w;
    std::shuffle(moved.begin(), moved.end(), gen::rng());
    failures += strong_canonical(moved) != s;
  }
  for (int i = 0; i < n; ++i) {
    const Length a = gen::uniform(1, 100000), b = gen::uniform(1, 100000);
    const Length c = gen::uniform(std::abs(a - b), a + b);
    const EdgeTriple t{{a, b, c}};
    failures += cm_area_sq(t) != hero_area_sq16(t);
  }
  for (int i = 0; i < n; ++i) {
    const auto t = gen::heronian_triangle(14);
    const auto p = embed_triangle_z2(t), q = embed_triangle_via_z3(t);
    failures += !verify_embedding(p) || !verify_embedding(q) ||
                strong_canonical(lattice_points2(p.vertices)) != strong_canonical(lattice_points2(q.vertices));
  }
  std::ostringstream d;
  d << n << " instances per suite, " << failures << " failures (" << aborts << " quaternion GCD aborts skipped)";
  return {failures == 0, d.str()};
}

}  // namespace

int main() {
  const auto corpus600 = fixture::read_hexads("tetra_primitive_600.txt");
  const std::vector<Criterion> criteria{
      {1, "worked example QRPS", 1, example_one},
      {2, "worked example PQSR and the 24 relabellings", 5, example_two},
      {3, "isohedral single rotor and 9/36 exhaustive", 3600, example_three},
      {4, "GCD family sizes", 10, [&] { return family_counts(corpus600); }},
      {5, "exhaustive third embedding", 3600, third_embedding},
      {6, "triangle uniqueness, first 1000 primitive", 600, triangle_uniqueness},
      {7, "corpus embedding, diameter <= 300", 600, corpus_embedding},
      {8, "stuck quaternion GCD aborts", 1, stuck_gcd},
      {9, "pentatope without Z^4 embedding", 1, pentatope},
      {10, "three-squares completeness", 60, three_squares},
      {11, "property suites", 600, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = v.pass && s < c.limit_s;
    failed += !pass;
    std::printf("%s %2d %s: %s [%.2f s, limit %g s]\n", pass ? "PASS" : "FAIL", c.id, c.title, v.detail.c_str(), s,
                c.limit_s);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
