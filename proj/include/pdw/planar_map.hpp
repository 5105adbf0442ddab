#pragma once
// Combinatorial maps (rotation systems) over darts.
//
// A map is a graph embedded in an oriented surface, encoded purely
// combinatorially: every edge is split into two opposite darts, and every
// vertex carries the cyclic order of its outgoing darts.  Faces are never
// stored; they are orbits of the face-successor permutation
//
//     next_face_dart(d) = prev_at_vertex(rev(d))
//
// which walks each face boundary once.  All higher layers (quadrangulation
// generation, charts, pattern matching) are built on this one convention.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pdw {

// A map isomorphism as a dart bijection.  `reversing` marks whether it
// reverses the global orientation (rotations map to reversed rotations).
struct MapIso {
  std::vector<int> dart_image;
  std::vector<int> vertex_image;
  bool reversing = false;
};

class PlanarMap {
 public:
  PlanarMap() = default;

  // Build from per-vertex neighbor lists in rotation order.  Requires a
  // connected simple graph (no loops, no parallel edges): dart pairing is
  // then unambiguous.
  static PlanarMap from_rotations(const std::vector<std::vector<int>>& nbrs);

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int dart_count() const { return static_cast<int>(rev_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return static_cast<int>(face_walks_.size()); }

  int tail(int d) const { return tail_[d]; }
  int head(int d) const { return tail_[rev_[d]]; }
  int rev(int d) const { return rev_[d]; }
  int edge_of(int d) const { return edge_of_[d]; }
  // The two darts of an edge; dart(e,0) is the lower-numbered one.
  int edge_dart(int e, int side) const { return edge_darts_[e * 2 + side]; }

  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }

  int next_at_vertex(int d) const {
    const auto& r = rot_[tail_[d]];
    int i = pos_[d] + 1;
    return r[i == static_cast<int>(r.size()) ? 0 : i];
  }
  int prev_at_vertex(int d) const {
    const auto& r = rot_[tail_[d]];
    int i = pos_[d];
    return r[i == 0 ? r.size() - 1 : i - 1];
  }

  int next_face_dart(int d) const { return prev_at_vertex(rev_[d]); }

  // Faces as dart walks; walk_vertices(f)[i] == tail(walk(f)[i]).
  const std::vector<std::vector<int>>& face_walks() const { return face_walks_; }
  const std::vector<int>& face_walk(int f) const { return face_walks_[f]; }
  std::vector<int> face_vertices(int f) const;
  int face_of(int d) const { return face_of_[d]; }
  // Position of dart d within its face walk.
  int face_pos(int d) const { return face_pos_[d]; }
  // The dart preceding d in its face walk.
  int prev_face_dart(int d) const {
    const auto& w = face_walks_[face_of_[d]];
    int i = face_pos_[d];
    return w[i == 0 ? w.size() - 1 : i - 1];
  }

  bool is_quadrangulation() const;
  bool is_simple() const;
  int min_degree() const;
  int distinct_degree_count() const;
  bool is_three_connected() const;

  PlanarMap dual() const;
  PlanarMap mirrored() const;
  PlanarMap relabeled(const std::vector<int>& new_id_of_vertex) const;

  // Canonical forms.  The code is a complete invariant of the oriented map;
  // the mirror-invariant variant is the minimum over both orientations and
  // matches the counting convention "isomorphism classes if
  // orientation-reversing isomorphisms are permitted".
  std::vector<std::uint8_t> canonical_code() const;
  std::vector<std::uint8_t> canonical_code_with_mirror() const;
  bool isomorphic_to(const PlanarMap& other) const;
  bool isomorphic_with_mirror_to(const PlanarMap& other) const;

  // All orientation-preserving automorphisms (an automorphism is determined
  // by the image of a single dart).
  std::vector<MapIso> automorphisms() const;
  // Orientation-preserving and -reversing self-isomorphisms.
  std::vector<MapIso> automorphisms_with_mirror() const;

  // BFS code of the oriented map rooted at a dart; exposed because the
  // canonical-code and automorphism machinery of higher layers reuses it.
  std::vector<std::uint8_t> code_from(int root_dart, bool reversed) const;
  // Dart traversal order underlying code_from; maps traversal index -> dart.
  std::vector<int> traversal_from(int root_dart, bool reversed) const;

 private:
  void index_faces();

  std::vector<std::vector<int>> rot_;  // rot_[v] = darts leaving v, in order
  std::vector<int> tail_;
  std::vector<int> pos_;  // pos_[d] = index of d in rot_[tail_[d]]
  std::vector<int> rev_;
  std::vector<int> edge_of_;
  std::vector<int> edge_darts_;
  std::vector<std::vector<int>> face_walks_;
  std::vector<int> face_of_;
  std::vector<int> face_pos_;
};

// The pseudo-double wheel with F faces (F even, >= 6): an equatorial cycle
// v_0..v_{F-1} (vertex ids 0..F-1), a north pole adjacent to the even
// vertices and a south pole adjacent to the odd ones.  Pole ids are the two
// highest: N = F, S = F+1.
PlanarMap make_pdw(int F);

inline int pdw_north(int F) { return F; }
inline int pdw_south(int F) { return F + 1; }

}  // namespace pdw
