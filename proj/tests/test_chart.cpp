// Chart-layer tests.  The expected vertex types, edge-label placements and
// symmetry orbit structure below were derived by hand-propagating the tile
// shape around the pseudo-double wheel, independently of the builders.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <map>
#include <set>

#include "pdw/chart.hpp"

using namespace pdw;

namespace {

int edge_between(const PlanarMap& m, int u, int v) {
  for (int d : m.rotation(u))
    if (m.head(d) == v) return m.edge_of(d);
  REQUIRE(false);
  return -1;
}

std::set<int> b_edges(const Chart& c) {
  std::set<int> out;
  for (int e = 0; e < c.map.edge_count(); ++e)
    if (c.L[e] == LengthLabel::b) out.insert(e);
  return out;
}

using VT = std::array<int, 4>;

}  // namespace

TEST_CASE("area sum") {
  CHECK(area_sum(6) == Rational(8, 3));
  CHECK(area_sum(8) == Rational(5, 2));
  CHECK(area_sum(12) == Rational(7, 3));
}

TEST_CASE("side labels follow the tile's cyclic order") {
  CHECK(side_label(Symbol::alpha, Symbol::beta) == LengthLabel::a);
  CHECK(side_label(Symbol::gamma, Symbol::beta) == LengthLabel::a);
  CHECK(side_label(Symbol::delta, Symbol::gamma) == LengthLabel::c);
  CHECK(side_label(Symbol::alpha, Symbol::delta) == LengthLabel::b);
}

TEST_CASE("chart P_F") {
  for (int F : {6, 8, 10, 12}) {
    CAPTURE(F);
    Chart c = build_P(F);
    CHECK(chart_decoration_ok(c));
    // Pole types (F/2) beta, equator types alpha+gamma+delta.
    CHECK(vertex_type(c, pdw_north(F)) == VT{0, F / 2, 0, 0});
    CHECK(vertex_type(c, pdw_south(F)) == VT{0, F / 2, 0, 0});
    for (int v = 0; v < F; ++v) CHECK(vertex_type(c, v) == VT{1, 0, 1, 1});
    // b on the equator edges (v_{2i}, v_{2i+1}); c on (v_{2i+1}, v_{2i+2});
    // meridians a.
    for (int i = 0; i < F / 2; ++i) {
      CHECK(c.L[edge_between(c.map, 2 * i, 2 * i + 1)] == LengthLabel::b);
      CHECK(c.L[edge_between(c.map, 2 * i + 1, (2 * i + 2) % F)] == LengthLabel::c);
      CHECK(c.L[edge_between(c.map, 2 * i, pdw_north(F))] == LengthLabel::a);
      CHECK(c.L[edge_between(c.map, 2 * i + 1, pdw_south(F))] == LengthLabel::a);
    }
    // Uniform chirality.
    for (int f = 0; f < F; ++f) CHECK(!face_chirality_forward(c, f));
  }
  // The same length assignment is consistent as a type-4 chart.
  Chart c4 = build_P(12, TileType::type4);
  CHECK(chart_decoration_ok(c4));
  CHECK(c4.tile_type == TileType::type4);
}

TEST_CASE("chart P_F via per-face decoration") {
  const int F = 12;
  Chart p = build_P(F);
  Chart c;
  c.map = make_pdw(F);
  c.tile_type = TileType::type2;
  c.K.assign(c.map.dart_count(), Symbol::alpha);
  for (int f = 0; f < F; ++f) {
    // Find the walk position of this face's equatorial b-edge.
    const auto& w = c.map.face_walk(f);
    int pos = -1;
    for (int k = 0; k < 4; ++k) {
      int u = c.map.tail(w[k]), v = c.map.head(w[k]);
      if (u < F && v < F && (u / 2 == v / 2)) pos = k;  // both equatorial, same pair
    }
    REQUIRE(pos >= 0);
    decorate_face(c, f, pos, /*forward=*/false);
  }
  REQUIRE(infer_edge_labels(c.map, c.K, c.tile_type, c.L));
  CHECK(charts_identical(c, p));
}

TEST_CASE("chart Q_F") {
  for (int F : {8, 12}) {
    CAPTURE(F);
    Chart c = build_Q(F);
    CHECK(chart_decoration_ok(c));
    // Poles mix beta and gamma: (F/4)(beta+gamma).
    CHECK(vertex_type(c, pdw_north(F)) == VT{0, F / 4, F / 4, 0});
    CHECK(vertex_type(c, pdw_south(F)) == VT{0, F / 4, F / 4, 0});
    // Equator has period 4: v = 0,3 mod 4 collect gamma+2delta, v = 1,2
    // mod 4 collect 2alpha+beta (hand propagation around the swapped and
    // unswapped faces).
    for (int v = 0; v < F; ++v) {
      bool gd = (v % 4 == 0) || (v % 4 == 3);
      CHECK(vertex_type(c, v) == (gd ? VT{0, 0, 1, 2} : VT{2, 1, 0, 0}));
    }
    // Same b-placement as P_F.
    CHECK(b_edges(c) == b_edges(build_P(F)));
  }
}

TEST_CASE("chart A") {
  Chart c = build_A();
  const int F = 12;
  CHECK(chart_decoration_ok(c));
  // The six b-edges: N v_0, S v_1, (v_3, v_4) and the half-turn images.
  std::set<int> expect;
  expect.insert(edge_between(c.map, pdw_north(F), 0));
  expect.insert(edge_between(c.map, pdw_south(F), 1));
  expect.insert(edge_between(c.map, 3, 4));
  expect.insert(edge_between(c.map, pdw_north(F), 6));
  expect.insert(edge_between(c.map, pdw_south(F), 7));
  expect.insert(edge_between(c.map, 9, 10));
  CHECK(b_edges(c) == expect);
  // Pole types 2(alpha+gamma+delta); equator: eight alpha+beta+delta and
  // four beta+2gamma vertices, in the period-6 pattern derived by hand.
  CHECK(vertex_type(c, pdw_north(F)) == VT{2, 0, 2, 2});
  CHECK(vertex_type(c, pdw_south(F)) == VT{2, 0, 2, 2});
  for (int v = 0; v < F; ++v)
    CHECK(vertex_type(c, v) == (v % 3 == 2 ? VT{0, 1, 2, 0} : VT{1, 1, 0, 1}));
}

TEST_CASE("conjugate") {
  Chart p = build_P(12);
  Chart cp = conjugate(p);
  CHECK(chart_decoration_ok(cp));
  // Involution.
  CHECK(charts_identical(conjugate(cp), p));
  // Pole types move from beta to gamma.
  CHECK(vertex_type(cp, pdw_north(12)) == VT{0, 0, 6, 0});
  // The b-placement is unchanged.
  CHECK(b_edges(cp) == b_edges(p));
}

TEST_CASE("mirror chart") {
  for (const Chart& c : {build_P(10), build_A()}) {
    Chart m = mirror_chart(c);
    CHECK(chart_decoration_ok(m));
    // Involution (the doubly mirrored map has the original rotations).
    Chart mm = mirror_chart(m);
    CHECK(charts_identical(mm, c));
    // Corner symbols at each vertex are preserved as counts.
    for (int v = 0; v < c.map.vertex_count(); ++v)
      CHECK(vertex_type(m, v) == vertex_type(c, v));
    // Chirality flips on every face.
    for (int f = 0; f < c.map.face_count(); ++f)
      CHECK(face_chirality_forward(m, f) != face_chirality_forward(c, f));
  }
}

TEST_CASE("transport along self-maps") {
  Chart p = build_P(12);
  auto autos = p.map.automorphisms_with_mirror();
  REQUIRE(autos.size() == 24);
  int preserving_hits = 0, reversing_hits = 0;
  for (const auto& h : autos) {
    Chart t = transport_chart(p, h);
    CHECK(chart_decoration_ok(t));
    if (charts_identical(t, p)) (h.reversing ? reversing_hits : preserving_hits)++;
  }
  // Every rotation/half-turn preserves P; no reflection does.
  CHECK(preserving_hits == 12);
  CHECK(reversing_hits == 0);
}

TEST_CASE("isohedrality of the named charts") {
  Isohedrality p = is_isohedral_chart(build_P(12));
  CHECK(p.transitive);
  CHECK(p.orbit_count == 1);
  CHECK(p.group_order == 12);

  Isohedrality a = is_isohedral_chart(build_A());
  CHECK(!a.transitive);
  CHECK(a.orbit_count == 3);
  CHECK(a.group_order == 4);
  // Orbits have equal size 4.
  std::map<int, int> sizes;
  for (int id : a.face_orbit) sizes[id]++;
  for (auto& [id, n] : sizes) CHECK(n == 4);

  // The swapped chart Q_12 splits the faces into the two reading classes.
  Isohedrality q = is_isohedral_chart(build_Q(12));
  CHECK(!q.transitive);
  CHECK(q.orbit_count == 2);
  CHECK(q.group_order == 6);
}

TEST_CASE("chart equivalence") {
  Chart p = build_P(12);
  CHECK(chart_equivalent(p, p, false));
  CHECK(chart_equivalent(p, conjugate(p), false));
  // A reversing transport is the mirror image expressed over the same map;
  // equivalence covers it by searching all self-maps.
  for (const auto& h : p.map.automorphisms_with_mirror())
    if (h.reversing) {
      CHECK(chart_equivalent(p, transport_chart(p, h), false));
      break;
    }
  CHECK(!chart_equivalent(p, build_Q(12), false));
  CHECK(!chart_equivalent(p, build_A(), false));
  CHECK(!chart_equivalent(build_Q(12), build_A(), false));
}

TEST_CASE("swap normalization") {
  Chart p = build_P(12);
  CHECK(charts_identical(swap_normalized(p, false), p));
  Chart n = swap_normalized(p, true);
  CHECK(chart_decoration_ok(n));
  // Idempotent.
  CHECK(charts_identical(swap_normalized(n, true), n));
  // Normalizing the conjugate gives the same normal form (every face's
  // reading pair is the same two candidates).
  CHECK(charts_identical(swap_normalized(conjugate(p), true), n));
}
