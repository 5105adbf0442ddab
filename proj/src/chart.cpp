#include "pdw/chart.hpp"

#include <algorithm>
#include <map>

namespace pdw {

const char* tile_type_name(TileType t) {
  return t == TileType::type2 ? "type2" : "type4";
}

const char* symbol_name(Symbol s) {
  switch (s) {
    case Symbol::alpha: return "alpha";
    case Symbol::beta: return "beta";
    case Symbol::gamma: return "gamma";
    case Symbol::delta: return "delta";
  }
  fatal("bad symbol");
}

char length_char(LengthLabel l) {
  switch (l) {
    case LengthLabel::a: return 'a';
    case LengthLabel::b: return 'b';
    case LengthLabel::c: return 'c';
  }
  fatal("bad length label");
}

Symbol conjugate_symbol(Symbol s) {
  switch (s) {
    case Symbol::alpha: return Symbol::delta;
    case Symbol::beta: return Symbol::gamma;
    case Symbol::gamma: return Symbol::beta;
    case Symbol::delta: return Symbol::alpha;
  }
  fatal("bad symbol");
}

LengthLabel side_label(Symbol s, Symbol t) {
  int lo = std::min(static_cast<int>(s), static_cast<int>(t));
  int hi = std::max(static_cast<int>(s), static_cast<int>(t));
  if (lo == 0 && hi == 1) return LengthLabel::a;  // alpha-beta
  if (lo == 1 && hi == 2) return LengthLabel::a;  // beta-gamma
  if (lo == 2 && hi == 3) return LengthLabel::c;  // gamma-delta
  if (lo == 0 && hi == 3) return LengthLabel::b;  // delta-alpha
  fatal("corner symbols are not cyclically adjacent");
}

LengthLabel dart_side_label(const Chart& c, int d) {
  const auto& w = c.map.face_walk(c.map.face_of(d));
  int k = c.map.face_pos(d);
  return side_label(c.K[d], c.K[w[(k + 1) % w.size()]]);
}

bool infer_edge_labels(const PlanarMap& m, const std::vector<Symbol>& K,
                       TileType type, std::vector<LengthLabel>& out) {
  out.clear();
  auto side_of = [&](int d) {
    const auto& w = m.face_walk(m.face_of(d));
    int k = m.face_pos(d);
    return side_label(K[d], K[w[(k + 1) % w.size()]]);
  };
  std::vector<LengthLabel> labels(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) {
    LengthLabel s1 = side_of(m.edge_dart(e, 0));
    LengthLabel s2 = side_of(m.edge_dart(e, 1));
    if ((s1 == LengthLabel::b) != (s2 == LengthLabel::b)) return false;
    if (s1 == LengthLabel::b) {
      labels[e] = LengthLabel::b;
      continue;
    }
    if (type == TileType::type4 && s1 != s2) return false;
    labels[e] = (s1 == LengthLabel::c && s2 == LengthLabel::c) ? LengthLabel::c
                                                               : LengthLabel::a;
  }
  out = std::move(labels);
  return true;
}

namespace {

// The four symbols of face f in walk order.
std::array<Symbol, 4> face_reading(const Chart& c, int f) {
  const auto& w = c.map.face_walk(f);
  return {c.K[w[0]], c.K[w[1]], c.K[w[2]], c.K[w[3]]};
}

bool is_cyclic_rotation(const std::array<Symbol, 4>& seq,
                        const std::array<Symbol, 4>& base) {
  for (int s = 0; s < 4; ++s) {
    bool ok = true;
    for (int k = 0; k < 4; ++k)
      if (seq[(s + k) % 4] != base[k]) { ok = false; break; }
    if (ok) return true;
  }
  return false;
}

const std::array<Symbol, 4> kForward = {Symbol::alpha, Symbol::beta,
                                        Symbol::gamma, Symbol::delta};
const std::array<Symbol, 4> kBackward = {Symbol::alpha, Symbol::delta,
                                         Symbol::gamma, Symbol::beta};

}  // namespace

bool chart_decoration_ok(const Chart& c) {
  if (static_cast<int>(c.K.size()) != c.map.dart_count()) return false;
  if (static_cast<int>(c.L.size()) != c.map.edge_count()) return false;
  for (int f = 0; f < c.map.face_count(); ++f) {
    if (c.map.face_walk(f).size() != 4) return false;
    auto seq = face_reading(c, f);
    if (!is_cyclic_rotation(seq, kForward) && !is_cyclic_rotation(seq, kBackward))
      return false;
  }
  std::vector<LengthLabel> inferred;
  if (!infer_edge_labels(c.map, c.K, c.tile_type, inferred)) return false;
  return inferred == c.L;
}

void validate_chart(const Chart& c) {
  check(chart_decoration_ok(c), "chart decoration violates the tile shape");
}

bool face_chirality_forward(const Chart& c, int f) {
  const auto& w = c.map.face_walk(f);
  for (int k = 0; k < 4; ++k)
    if (c.K[w[k]] == Symbol::alpha)
      return c.K[w[(k + 1) % 4]] == Symbol::beta;
  fatal("face has no alpha corner");
}

void decorate_face(Chart& c, int f, int b_walk_pos, bool forward) {
  const auto& w = c.map.face_walk(f);
  check(w.size() == 4 && b_walk_pos >= 0 && b_walk_pos < 4, "bad face decoration");
  static const std::array<Symbol, 4> fwd = {Symbol::delta, Symbol::alpha,
                                            Symbol::beta, Symbol::gamma};
  static const std::array<Symbol, 4> bwd = {Symbol::alpha, Symbol::delta,
                                            Symbol::gamma, Symbol::beta};
  const auto& seq = forward ? fwd : bwd;
  for (int k = 0; k < 4; ++k) c.K[w[(b_walk_pos + k) % 4]] = seq[k];
}

std::array<int, 4> vertex_type(const Chart& c, int v) {
  std::array<int, 4> n = {0, 0, 0, 0};
  for (int d : c.map.rotation(v)) ++n[static_cast<int>(c.K[d])];
  return n;
}

Rational area_sum(int F) {
  check(F >= 6 && F % 2 == 0, "area sum needs even F >= 6");
  return Rational(2) + Rational(4, F);
}

namespace {

// For a pseudo-double-wheel face, the walk position of its pole corner and
// the wheel index of the face: northern face T_i = (N, v_{2i}, v_{2i+1},
// v_{2i+2}), southern face U_j = (S, v_{2j+1}, v_{2j}, v_{2j-1}).
struct PdwFace {
  bool northern;
  int index;    // i or j
  int pole_pos; // walk position of the pole corner
};

PdwFace pdw_face_info(const PlanarMap& m, int F, int f) {
  auto w = m.face_vertices(f);
  for (int k = 0; k < 4; ++k) {
    if (w[k] == pdw_north(F))
      return {true, w[(k + 1) % 4] / 2, k};
    if (w[k] == pdw_south(F))
      return {false, (w[(k + 1) % 4] - 1) / 2, k};
  }
  fatal("pseudo-double-wheel face has no pole corner");
}

// Assign the walk-aligned reading starting at the pole corner.
void set_from_pole(Chart& c, int f, const PdwFace& info,
                   const std::array<Symbol, 4>& seq) {
  const auto& w = c.map.face_walk(f);
  for (int k = 0; k < 4; ++k) c.K[w[(info.pole_pos + k) % 4]] = seq[k];
}

Chart finish_chart(PlanarMap m, TileType type, std::vector<Symbol> K) {
  Chart c;
  c.map = std::move(m);
  c.tile_type = type;
  c.K = std::move(K);
  check(infer_edge_labels(c.map, c.K, c.tile_type, c.L),
        "named chart has inconsistent edge labels");
  validate_chart(c);
  return c;
}

}  // namespace

Chart build_P(int F, TileType type) {
  PlanarMap m = make_pdw(F);
  std::vector<Symbol> K(m.dart_count());
  Chart tmp;
  tmp.map = m;
  tmp.K = std::move(K);
  const std::array<Symbol, 4> seq = {Symbol::beta, Symbol::alpha, Symbol::delta,
                                     Symbol::gamma};
  for (int f = 0; f < m.face_count(); ++f)
    set_from_pole(tmp, f, pdw_face_info(m, F, f), seq);
  return finish_chart(std::move(tmp.map), type, std::move(tmp.K));
}

Chart build_Q(int F) {
  check(F >= 8 && F % 4 == 0, "Q_F needs F a multiple of 4");
  PlanarMap m = make_pdw(F);
  Chart tmp;
  tmp.map = m;
  tmp.K.assign(m.dart_count(), Symbol::alpha);
  const std::array<Symbol, 4> plain = {Symbol::beta, Symbol::alpha, Symbol::delta,
                                       Symbol::gamma};
  const std::array<Symbol, 4> swapped = {Symbol::gamma, Symbol::delta,
                                         Symbol::alpha, Symbol::beta};
  for (int f = 0; f < m.face_count(); ++f) {
    PdwFace info = pdw_face_info(m, F, f);
    bool swap = info.northern ? (info.index % 2 == 0) : (info.index % 2 == 1);
    set_from_pole(tmp, f, info, swap ? swapped : plain);
  }
  return finish_chart(std::move(tmp.map), TileType::type2, std::move(tmp.K));
}

Chart build_A() {
  const int F = 12;
  PlanarMap m = make_pdw(F);
  Chart tmp;
  tmp.map = m;
  tmp.K.assign(m.dart_count(), Symbol::alpha);
  using S = Symbol;
  static const std::array<Symbol, 4> northern[3] = {
      {S::delta, S::alpha, S::beta, S::gamma},
      {S::gamma, S::beta, S::alpha, S::delta},
      {S::alpha, S::beta, S::gamma, S::delta},
  };
  static const std::array<Symbol, 4> southern[3] = {
      {S::delta, S::alpha, S::beta, S::gamma},
      {S::alpha, S::beta, S::gamma, S::delta},
      {S::gamma, S::beta, S::alpha, S::delta},
  };
  for (int f = 0; f < m.face_count(); ++f) {
    PdwFace info = pdw_face_info(m, F, f);
    const auto& seq =
        info.northern ? northern[info.index % 3] : southern[info.index % 3];
    set_from_pole(tmp, f, info, seq);
  }
  return finish_chart(std::move(tmp.map), TileType::type2, std::move(tmp.K));
}

Chart conjugate(const Chart& c) {
  Chart out = c;
  for (auto& s : out.K) s = conjugate_symbol(s);
  check(infer_edge_labels(out.map, out.K, out.tile_type, out.L),
        "conjugate produced inconsistent edge labels");
  return out;
}

Chart mirror_chart(const Chart& c) {
  Chart out;
  out.map = c.map.mirrored();
  out.tile_type = c.tile_type;
  out.K.assign(c.K.size(), Symbol::alpha);
  for (int d = 0; d < c.map.dart_count(); ++d)
    out.K[c.map.rev(c.map.prev_face_dart(d))] = c.K[d];
  check(infer_edge_labels(out.map, out.K, out.tile_type, out.L),
        "mirror produced inconsistent edge labels");
  validate_chart(out);
  return out;
}

Chart transport_chart(const Chart& c, const MapIso& h) {
  Chart out;
  out.map = c.map;
  out.tile_type = c.tile_type;
  out.K.assign(c.K.size(), Symbol::alpha);
  out.L.assign(c.L.size(), LengthLabel::a);
  for (int d = 0; d < c.map.dart_count(); ++d) {
    int image = h.reversing
                    ? h.dart_image[c.map.rev(c.map.prev_face_dart(d))]
                    : h.dart_image[d];
    out.K[image] = c.K[d];
  }
  for (int e = 0; e < c.map.edge_count(); ++e)
    out.L[c.map.edge_of(h.dart_image[c.map.edge_dart(e, 0)])] = c.L[e];
  return out;
}

int face_image(const PlanarMap& m, const MapIso& h, int f) {
  int d0 = m.face_walk(f)[0];
  return m.face_of(h.dart_image[h.reversing ? m.rev(d0) : d0]);
}

bool charts_identical(const Chart& x, const Chart& y) {
  return x.tile_type == y.tile_type && x.K == y.K && x.L == y.L;
}

Chart swap_normalized(const Chart& c, bool swap_symmetric) {
  if (!swap_symmetric) return c;
  Chart out = c;
  for (int f = 0; f < c.map.face_count(); ++f) {
    const auto& w = c.map.face_walk(f);
    std::array<Symbol, 4> cur, swp;
    for (int k = 0; k < 4; ++k) {
      cur[k] = out.K[w[k]];
      swp[k] = conjugate_symbol(cur[k]);
    }
    if (std::lexicographical_compare(swp.begin(), swp.end(), cur.begin(), cur.end()))
      for (int k = 0; k < 4; ++k) out.K[w[k]] = swp[k];
  }
  check(infer_edge_labels(out.map, out.K, out.tile_type, out.L),
        "swap normalization produced inconsistent edge labels");
  return out;
}

bool chart_equivalent(const Chart& x, const Chart& y, bool swap_symmetric) {
  check(x.map.dart_count() == y.map.dart_count() && x.tile_type == y.tile_type,
        "chart equivalence needs charts over the same map and tile type");
  std::vector<Chart> targets;
  targets.push_back(swap_normalized(y, swap_symmetric));
  if (x.tile_type == TileType::type2)
    targets.push_back(swap_normalized(conjugate(y), swap_symmetric));
  for (const auto& h : x.map.automorphisms_with_mirror()) {
    Chart t = swap_normalized(transport_chart(x, h), swap_symmetric);
    for (const auto& target : targets)
      if (charts_identical(t, target)) return true;
  }
  return false;
}

Isohedrality is_isohedral_chart(const Chart& c) {
  Isohedrality out;
  std::vector<MapIso> group;
  for (const auto& h : c.map.automorphisms_with_mirror())
    if (charts_identical(transport_chart(c, h), c)) group.push_back(h);
  out.group_order = static_cast<int>(group.size());

  const int F = c.map.face_count();
  out.face_orbit.assign(F, -1);
  int orbits = 0;
  for (int f = 0; f < F; ++f) {
    if (out.face_orbit[f] != -1) continue;
    int id = orbits++;
    // Orbit of f under the decorated group.
    std::vector<int> stack = {f};
    out.face_orbit[f] = id;
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      for (const auto& h : group) {
        int img = face_image(c.map, h, g);
        if (out.face_orbit[img] == -1) {
          out.face_orbit[img] = id;
          stack.push_back(img);
        }
      }
    }
  }
  out.orbit_count = orbits;
  out.transitive = (orbits == 1);
  return out;
}

}  // namespace pdw
