#pragma once
// Charts: maps decorated with edge-length labels and symbolic corner angles.
//
// The tile is a spherical quadrangle with corners A, B, C, D carrying angle
// symbols alpha, beta, gamma, delta (units of pi radians throughout) and
// sides AB = a, BC = a, CD = c, DA = b.  A type-2 tile has a = c != b as
// lengths (the a/c distinction is then positional only); a type-4 tile has
// a, b, c pairwise distinct.  Exactly one side per tile is the b-side, and
// its endpoints carry alpha and delta.
//
// A corner of the map is a (vertex, face) incidence, represented by the
// unique face-walk dart leaving that vertex inside that face.  K stores one
// symbol per dart under that identification; L stores one label per edge.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pdw/planar_map.hpp"
#include "pdw/rational.hpp"

namespace pdw {

enum class TileType : std::uint8_t { type2, type4 };
enum class Symbol : std::uint8_t { alpha = 0, beta = 1, gamma = 2, delta = 3 };
enum class LengthLabel : std::uint8_t { a = 0, b = 1, c = 2 };

const char* tile_type_name(TileType t);
const char* symbol_name(Symbol s);
char length_char(LengthLabel l);

// Reading the tile backwards: alpha <-> delta, beta <-> gamma.
Symbol conjugate_symbol(Symbol s);

// Label of the side between two cyclically adjacent corner symbols.
LengthLabel side_label(Symbol s, Symbol t);

struct Chart {
  PlanarMap map;
  TileType tile_type = TileType::type2;
  std::vector<Symbol> K;       // per dart: corner symbol at tail(d) in face_of(d)
  std::vector<LengthLabel> L;  // per edge
};

// The side label edge_of(d) presents inside face_of(d).
LengthLabel dart_side_label(const Chart& c, int d);

// Edge labels induced by an angle decoration.  b-sides must agree across
// every edge; a/c may disagree only for type-2 tiles (equal lengths), in
// which case the stored label is c exactly when both sides present c.
// Returns false (and leaves the result empty) on an inconsistency.
bool infer_edge_labels(const PlanarMap& m, const std::vector<Symbol>& K,
                       TileType type, std::vector<LengthLabel>& out);

// Structural soundness of a decoration: every face reads the tile's cyclic
// corner order forwards or backwards, has exactly one b-side, and L matches
// the inferred labels.
bool chart_decoration_ok(const Chart& c);
void validate_chart(const Chart& c);  // fatal() on violation

// True if face f reads (alpha, beta, gamma, delta) along the face walk
// (possibly rotated); false for the reversed reading.
bool face_chirality_forward(const Chart& c, int f);

// Write the decoration of one face: the b-side lies on walk position
// b_walk_pos (between corners b_walk_pos and b_walk_pos+1); `forward`
// selects the chirality.  Sets K only (L is inferred separately).
void decorate_face(Chart& c, int f, int b_walk_pos, bool forward);

// Counts (n_alpha, n_beta, n_gamma, n_delta) of the corner symbols at v.
std::array<int, 4> vertex_type(const Chart& c, int v);

// Required total angle of one tile: 2 + 4/F (pi-radian units).
Rational area_sum(int F);

// The named charts over the pseudo-double wheel.
//
// P_F: every b-side is equatorial ((v_{2i}, v_{2i+1})); every face reads
// (beta, alpha, delta, gamma) along its walk starting at the pole corner.
// Valid as a type-2 or type-4 chart.
Chart build_P(int F, TileType type = TileType::type2);
// Q_F (F a multiple of 4): P_F's lengths, with the angle reading of every
// other face replaced by (gamma, delta, alpha, beta) so the poles get type
// (F/4)(beta+gamma).  Type 2 only.
Chart build_Q(int F);
// A (F = 12): the alternating chart; b-sides N v_0, S v_1, (v_3, v_4) and
// their half-turn images N v_6, S v_7, (v_9, v_10).  Type 2 only.
Chart build_A();

// Global conjugation (alpha <-> delta, beta <-> gamma on every corner).
// For type-2 tiles this re-reads every tile backwards and describes the
// same geometric decoration.
Chart conjugate(const Chart& c);

// Mirror image: mirrored map, K^R(angle u v w) = K(angle w v u), L kept.
Chart mirror_chart(const Chart& c);

// Push the decoration through a self-map h (from automorphisms_with_mirror
// of c.map): the result decorates the same map.
Chart transport_chart(const Chart& c, const MapIso& h);

// Image of a face under a self-map.
int face_image(const PlanarMap& m, const MapIso& h, int f);

bool charts_identical(const Chart& x, const Chart& y);

// When the linear system forces alpha = delta and beta = gamma, the two
// chiralities of a face are indistinguishable; normalize each face to the
// lexicographically smaller of its two readings.
Chart swap_normalized(const Chart& c, bool swap_symmetric);

// Equivalence for reporting: equal modulo map self-maps (mirror included),
// global conjugation (type 2 only), and — when swap_symmetric — per-face
// swaps.  Both charts must decorate the same map.
bool chart_equivalent(const Chart& x, const Chart& y, bool swap_symmetric);

struct Isohedrality {
  bool transitive = false;
  int orbit_count = 0;
  int group_order = 0;
  std::vector<int> face_orbit;  // orbit id per face
};

// Decorated symmetry group = self-maps preserving K and L exactly; the
// chart is isohedral iff that group acts transitively on faces.
Isohedrality is_isohedral_chart(const Chart& c);

}  // namespace pdw
