// Core combinatorial-map tests.  The expected values below are derived by
// hand from the definition of the pseudo-double wheel and from two solids
// (cube, octahedron) whose rotation systems are written out explicitly from
// coordinates, independently of the library code.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "pdw/planar_code.hpp"
#include "pdw/planar_map.hpp"

using namespace pdw;

namespace {

// Cube rotations read off from coordinates (+-1 corners), counterclockwise
// as seen from outside.  Top square 0,1,2,3; bottom square 4,5,6,7 with k+4
// below k.
PlanarMap make_cube() {
  return PlanarMap::from_rotations({
      {1, 3, 4},
      {2, 0, 5},
      {3, 1, 6},
      {0, 2, 7},
      {0, 7, 5},
      {1, 4, 6},
      {2, 5, 7},
      {3, 6, 4},
  });
}

// Octahedron: 0 top, 1..4 equator (+x,+y,-x,-y), 5 bottom.
PlanarMap make_octahedron() {
  return PlanarMap::from_rotations({
      {1, 2, 3, 4},
      {0, 4, 5, 2},
      {0, 1, 5, 3},
      {0, 2, 5, 4},
      {0, 3, 5, 1},
      {1, 4, 3, 2},
  });
}

// Does some face of m, read cyclically, equal `want`?
bool has_face_cycle(const PlanarMap& m, const std::vector<int>& want) {
  for (int f = 0; f < m.face_count(); ++f) {
    auto w = m.face_vertices(f);
    if (w.size() != want.size()) continue;
    for (size_t s = 0; s < w.size(); ++s) {
      bool ok = true;
      for (size_t k = 0; k < w.size(); ++k)
        if (w[(s + k) % w.size()] != want[k]) { ok = false; break; }
      if (ok) return true;
    }
  }
  return false;
}

std::vector<int> random_permutation(int n, unsigned seed) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::mt19937 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("pseudo-double wheel structure") {
  for (int F : {6, 8, 10, 12, 16}) {
    CAPTURE(F);
    PlanarMap m = make_pdw(F);
    CHECK(m.vertex_count() == F + 2);
    CHECK(m.edge_count() == 2 * F);
    CHECK(m.face_count() == F);
    CHECK(m.is_simple());
    CHECK(m.is_quadrangulation());
    CHECK(m.min_degree() == 3);
    CHECK(m.degree(pdw_north(F)) == F / 2);
    CHECK(m.degree(pdw_south(F)) == F / 2);
    for (int j = 0; j < F; ++j) CHECK(m.degree(j) == 3);
    CHECK(m.distinct_degree_count() == (F == 6 ? 1 : 2));
    CHECK(m.is_three_connected());
    // Every face touches exactly one pole.
    for (int f = 0; f < m.face_count(); ++f) {
      auto w = m.face_vertices(f);
      int poles = 0;
      for (int v : w) poles += (v == pdw_north(F) || v == pdw_south(F)) ? 1 : 0;
      CHECK(poles == 1);
    }
  }
}

TEST_CASE("pseudo-double wheel face walks match the hand-traced ones") {
  // Northern face walks are (N, v_{2i}, v_{2i+1}, v_{2i+2}); southern ones
  // are (S, v_{2j+1}, v_{2j}, v_{2j-1}).
  const int F = 8;
  PlanarMap m = make_pdw(F);
  const int N = pdw_north(F), S = pdw_south(F);
  for (int i = 0; i < F / 2; ++i) {
    CHECK(has_face_cycle(m, {N, 2 * i, 2 * i + 1, (2 * i + 2) % F}));
    CHECK(has_face_cycle(m, {S, 2 * i + 1, 2 * i, (2 * i - 1 + F) % F}));
  }
}

TEST_CASE("face tracing closes quadrilaterals and covers all darts") {
  PlanarMap m = make_pdw(10);
  int covered = 0;
  for (int f = 0; f < m.face_count(); ++f) {
    const auto& w = m.face_walk(f);
    CHECK(w.size() == 4);
    covered += static_cast<int>(w.size());
    for (size_t k = 0; k < w.size(); ++k) {
      int d = w[k];
      CHECK(m.face_of(d) == f);
      CHECK(m.face_pos(d) == static_cast<int>(k));
      CHECK(m.next_face_dart(d) == w[(k + 1) % w.size()]);
      CHECK(m.prev_face_dart(w[(k + 1) % w.size()]) == d);
      // Consecutive walk darts chain head-to-tail.
      CHECK(m.head(d) == m.tail(w[(k + 1) % w.size()]));
    }
  }
  CHECK(covered == m.dart_count());
}

TEST_CASE("pdw_6 is the cube") {
  PlanarMap p = make_pdw(6);
  PlanarMap cube = make_cube();
  CHECK(p.isomorphic_to(cube));
  CHECK(p.isomorphic_with_mirror_to(cube));
  CHECK(cube.automorphisms().size() == 24);
  CHECK(cube.automorphisms_with_mirror().size() == 48);
}

TEST_CASE("pseudo-double wheel automorphism groups") {
  // For F >= 8 the orientation-preserving group has order F (rotations and
  // pole-swapping half-turns); reflections double it.
  for (int F : {8, 10, 12}) {
    CAPTURE(F);
    PlanarMap m = make_pdw(F);
    CHECK(m.automorphisms().size() == static_cast<size_t>(F));
    CHECK(m.automorphisms_with_mirror().size() == static_cast<size_t>(2 * F));
    CHECK(m.isomorphic_to(m.mirrored()));
  }
}

TEST_CASE("automorphisms behave like a group and preserve the map") {
  PlanarMap m = make_pdw(8);
  auto autos = m.automorphisms_with_mirror();
  // Identity present.
  bool has_id = false;
  for (const auto& a : autos) {
    bool is_id = !a.reversing;
    for (int d = 0; is_id && d < m.dart_count(); ++d)
      if (a.dart_image[d] != d) is_id = false;
    has_id = has_id || is_id;
    // Dart images commute with rev and tail/vertex images.
    for (int d = 0; d < m.dart_count(); ++d) {
      CHECK(a.dart_image[m.rev(d)] == m.rev(a.dart_image[d]));
      CHECK(a.vertex_image[m.tail(d)] == m.tail(a.dart_image[d]));
      int next = m.next_at_vertex(d);
      if (!a.reversing)
        CHECK(a.dart_image[next] == m.next_at_vertex(a.dart_image[d]));
      else
        CHECK(a.dart_image[next] == m.prev_at_vertex(a.dart_image[d]));
    }
  }
  CHECK(has_id);
  // Closure of dart-image composition.
  std::set<std::vector<int>> images;
  for (const auto& a : autos) images.insert(a.dart_image);
  for (const auto& a : autos)
    for (const auto& b : autos) {
      std::vector<int> comp(m.dart_count());
      for (int d = 0; d < m.dart_count(); ++d) comp[d] = a.dart_image[b.dart_image[d]];
      CHECK(images.count(comp) == 1);
    }
}

TEST_CASE("dual maps") {
  PlanarMap cube = make_cube();
  PlanarMap oct = make_octahedron();
  CHECK(cube.dual().isomorphic_with_mirror_to(oct));
  CHECK(make_pdw(6).dual().isomorphic_with_mirror_to(oct));
  CHECK(oct.dual().isomorphic_with_mirror_to(cube));
  for (int F : {6, 8, 12}) {
    CAPTURE(F);
    PlanarMap m = make_pdw(F);
    PlanarMap d = m.dual();
    CHECK(d.vertex_count() == m.face_count());
    CHECK(d.face_count() == m.vertex_count());
    CHECK(d.edge_count() == m.edge_count());
    CHECK(d.dual().isomorphic_to(m));
  }
}

TEST_CASE("canonical code is a relabeling invariant") {
  for (int F : {6, 8, 10}) {
    CAPTURE(F);
    PlanarMap m = make_pdw(F);
    auto code = m.canonical_code();
    auto code_mir = m.canonical_code_with_mirror();
    for (unsigned seed = 1; seed <= 5; ++seed) {
      PlanarMap r = m.relabeled(random_permutation(m.vertex_count(), seed));
      CHECK(r.canonical_code() == code);
      CHECK(r.canonical_code_with_mirror() == code_mir);
      CHECK(r.isomorphic_to(m));
    }
    CHECK(m.mirrored().canonical_code_with_mirror() == code_mir);
  }
}

TEST_CASE("distinct maps get distinct codes") {
  PlanarMap a = make_pdw(8);
  PlanarMap b = make_pdw(10);
  CHECK(a.canonical_code() != b.canonical_code());
  CHECK(!a.isomorphic_with_mirror_to(b));
  CHECK(make_cube().canonical_code() == make_pdw(6).canonical_code());
}

TEST_CASE("mirroring reverses rotations but keeps faces quadrilateral") {
  PlanarMap m = make_pdw(8);
  PlanarMap w = m.mirrored();
  CHECK(w.vertex_count() == m.vertex_count());
  CHECK(w.is_quadrangulation());
  for (int v = 0; v < m.vertex_count(); ++v) {
    std::vector<int> fwd, bwd;
    for (int d : m.rotation(v)) fwd.push_back(m.head(d));
    for (int d : w.rotation(v)) bwd.push_back(w.head(d));
    std::reverse(bwd.begin(), bwd.end());
    // Equal as cyclic sequences.
    bool cyclic_equal = false;
    const int n = static_cast<int>(fwd.size());
    for (int s = 0; s < n && !cyclic_equal; ++s) {
      bool ok = true;
      for (int k = 0; k < n; ++k)
        if (fwd[(s + k) % n] != bwd[k]) { ok = false; break; }
      cyclic_equal = ok;
    }
    CHECK(cyclic_equal);
  }
}

TEST_CASE("planar code round trip") {
  std::stringstream ss;
  write_planar_code_header(ss);
  write_planar_code(ss, make_pdw(10));
  write_planar_code(ss, make_cube());
  auto maps = read_planar_code(ss);
  REQUIRE(maps.size() == 2);
  CHECK(maps[0].isomorphic_to(make_pdw(10)));
  CHECK(maps[1].isomorphic_to(make_cube()));
  CHECK(maps[0].canonical_code() == make_pdw(10).canonical_code());
}

TEST_CASE("three-connectivity check") {
  CHECK(make_cube().is_three_connected());
  CHECK(make_pdw(12).is_three_connected());
  // Negative case: a plain 4-cycle (two square faces); {0,2} is a cutting
  // pair.
  PlanarMap banana = PlanarMap::from_rotations({
      {1, 3},
      {2, 0},
      {3, 1},
      {0, 2},
  });
  CHECK(!banana.is_three_connected());
}
