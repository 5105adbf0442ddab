#include "pdw/feasibility.hpp"

#include <algorithm>
#include <set>

namespace pdw {

namespace {

Rational dot(const Vec4& a, const Vec4& b) {
  Rational s;
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

Vec4 normalized_row(Vec4 lhs, Rational& rhs) {
  for (int i = 0; i < 4; ++i) {
    if (!lhs[i].is_zero()) {
      Rational pivot = lhs[i];
      for (int j = 0; j < 4; ++j) lhs[j] /= pivot;
      rhs /= pivot;
      break;
    }
  }
  return lhs;
}

}  // namespace

void LinearSystem::add_equation(const Vec4& lhs, const Rational& rhs) {
  Rational r = rhs;
  Vec4 l = normalized_row(lhs, r);
  for (size_t i = 0; i < eq_lhs.size(); ++i)
    if (eq_lhs[i] == l && eq_rhs[i] == r) return;
  eq_lhs.push_back(l);
  eq_rhs.push_back(r);
}

void LinearSystem::add_avoid(const Vec4& lhs, const Rational& rhs, std::string tag) {
  avoid_lhs.push_back(lhs);
  avoid_rhs.push_back(rhs);
  avoid_tag.push_back(std::move(tag));
}

bool Feasibility::forces(const Vec4& lhs, const Rational& rhs) const {
  if (dot(lhs, particular) != rhs) return false;
  for (const auto& h : basis)
    if (!dot(lhs, h).is_zero()) return false;
  return true;
}

bool Feasibility::forces_equal(Symbol x, Symbol y) const {
  Vec4 lhs{};
  lhs[static_cast<int>(x)] = Rational(1);
  lhs[static_cast<int>(y)] -= Rational(1);
  return forces(lhs, Rational(0));
}

namespace {

// Row-reduced affine solution space of the equations.
struct Reduced {
  bool consistent = true;
  Vec4 particular{};
  std::vector<Vec4> basis;
};

Reduced reduce_equations(const LinearSystem& S) {
  std::vector<Vec4> rows = S.eq_lhs;
  std::vector<Rational> rhs = S.eq_rhs;
  const int n = static_cast<int>(rows.size());
  int pivot_row = 0;
  std::array<int, 4> pivot_of_col = {-1, -1, -1, -1};
  for (int col = 0; col < 4 && pivot_row < n; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < n; ++r)
      if (!rows[r][col].is_zero()) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(rows[sel], rows[pivot_row]);
    std::swap(rhs[sel], rhs[pivot_row]);
    Rational p = rows[pivot_row][col];
    for (int j = 0; j < 4; ++j) rows[pivot_row][j] /= p;
    rhs[pivot_row] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      Rational f = rows[r][col];
      for (int j = 0; j < 4; ++j) rows[r][j] -= f * rows[pivot_row][j];
      rhs[r] -= f * rhs[pivot_row];
    }
    pivot_of_col[col] = pivot_row;
    ++pivot_row;
  }
  Reduced out;
  for (int r = pivot_row; r < n; ++r)
    if (!rhs[r].is_zero()) { out.consistent = false; return out; }
  // Particular solution: free symbols 0, pivots from rhs.
  for (int col = 0; col < 4; ++col)
    if (pivot_of_col[col] >= 0) out.particular[col] = rhs[pivot_of_col[col]];
  // Basis: one direction per free symbol.
  for (int free = 0; free < 4; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Vec4 h{};
    h[free] = Rational(1);
    for (int col = 0; col < 4; ++col)
      if (pivot_of_col[col] >= 0) h[col] = -rows[pivot_of_col[col]][free];
    out.basis.push_back(h);
  }
  return out;
}

// One inequality c . y <= d over variables y = (t_0..t_{k-1}, s).
struct Row {
  std::vector<Rational> c;
  Rational d;
};

// Fourier-Motzkin elimination state for the margin program
//   lower + s <= particular + B t <= upper - s   (componentwise)
// maximizing the margin s.
struct Margin {
  bool empty = false;
  Rational s_max;                       // valid when !empty
  std::vector<std::vector<Row>> steps;  // system before eliminating t_j
  std::vector<Row> final_rows;          // rows over s only
};

Margin run_margin(const Vec4& particular, const std::vector<Vec4>& basis,
                  const Rational& lower, const Rational& upper) {
  const int k = static_cast<int>(basis.size());
  std::vector<Row> rows;
  for (int i = 0; i < 4; ++i) {
    Row lo, hi;  // lower + s <= x_i;  x_i <= upper - s
    lo.c.assign(k + 1, Rational(0));
    hi.c.assign(k + 1, Rational(0));
    for (int j = 0; j < k; ++j) {
      lo.c[j] = -basis[j][i];
      hi.c[j] = basis[j][i];
    }
    lo.c[k] = Rational(1);
    lo.d = particular[i] - lower;
    hi.c[k] = Rational(1);
    hi.d = upper - particular[i];
    rows.push_back(std::move(lo));
    rows.push_back(std::move(hi));
  }
  Margin m;
  for (int v = 0; v < k; ++v) {
    m.steps.push_back(rows);
    std::vector<Row> next;
    std::vector<int> pos, neg;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].c[v].is_zero()) next.push_back(rows[r]);
      else if (rows[r].c[v] > Rational(0)) pos.push_back(static_cast<int>(r));
      else neg.push_back(static_cast<int>(r));
    }
    for (int p : pos)
      for (int q : neg) {
        Row comb;
        comb.c.assign(k + 1, Rational(0));
        Rational fp = rows[p].c[v], fq = -rows[q].c[v];
        for (int j = 0; j <= k; ++j)
          comb.c[j] = rows[p].c[j] / fp + rows[q].c[j] / fq;
        comb.d = rows[p].d / fp + rows[q].d / fq;
        next.push_back(std::move(comb));
      }
    rows = std::move(next);
  }
  // Remaining rows involve s only.
  Rational best = (upper - lower) / Rational(2);
  for (const Row& r : rows) {
    const Rational& cs = r.c[k];
    if (cs.is_zero()) {
      if (r.d < Rational(0)) { m.empty = true; return m; }
      continue;
    }
    // s coefficients are nonnegative by construction.
    check(cs > Rational(0), "margin program produced a negative s coefficient");
    Rational bound = r.d / cs;
    if (bound < best) best = bound;
  }
  m.s_max = best;
  m.final_rows = std::move(rows);
  return m;
}

// Back-substitute a point with margin s_bar through the recorded steps.
std::vector<Rational> back_substitute(const Margin& m, int k, const Rational& s_bar) {
  std::vector<Rational> t(k, Rational(0));
  for (int v = k - 1; v >= 0; --v) {
    const auto& rows = m.steps[v];
    bool has_lo = false, has_hi = false;
    Rational lo, hi;
    for (const Row& r : rows) {
      if (r.c[v].is_zero()) continue;
      // r.c[v] * t_v <= d - (other terms)
      Rational rest = r.c[k] * s_bar;
      for (int j = v + 1; j < k; ++j) rest += r.c[j] * t[j];
      Rational bound = (r.d - rest) / r.c[v];
      if (r.c[v] > Rational(0)) {
        if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
      } else {
        if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
      }
    }
    if (has_lo && has_hi) {
      check(lo <= hi, "margin back-substitution produced an empty interval");
      t[v] = (lo + hi) / Rational(2);
    } else if (has_lo) {
      t[v] = lo + Rational(1);
    } else if (has_hi) {
      t[v] = hi - Rational(1);
    }
  }
  return t;
}

Vec4 point_at(const Vec4& particular, const std::vector<Vec4>& basis,
              const std::vector<Rational>& t) {
  Vec4 x = particular;
  for (size_t j = 0; j < basis.size(); ++j)
    for (int i = 0; i < 4; ++i) x[i] += basis[j][i] * t[j];
  return x;
}

Rational interior_margin(const Vec4& x, const Rational& lower, const Rational& upper) {
  Rational best = upper - lower;
  for (int i = 0; i < 4; ++i) {
    if (x[i] - lower < best) best = x[i] - lower;
    if (upper - x[i] < best) best = upper - x[i];
  }
  return best;
}

// Move the sample off every non-forced avoid-form while keeping strict
// interiority.  Directions (1, rho, rho^2, ...) for enough values of rho
// guarantee a direction on which no relevant form is constant.
bool nudge_off_avoids(const LinearSystem& S, const Feasibility& fz, Vec4& x,
                      const std::vector<Rational>& t_base,
                      const std::vector<Vec4>& basis) {
  auto violated = [&](const Vec4& p) {
    for (size_t m = 0; m < S.avoid_lhs.size(); ++m)
      if (dot(S.avoid_lhs[m], p) == S.avoid_rhs[m]) return true;
    return false;
  };
  if (!violated(x)) return true;
  const int k = static_cast<int>(basis.size());
  if (k == 0) return false;  // a point on a forbidden form cannot move
  Rational margin = interior_margin(x, S.lower, S.upper);
  for (long long rho = 1; rho <= 40; ++rho) {
    // Direction w = (1, rho, rho^2) in t-space.
    std::vector<Rational> w(k);
    Rational pw(1);
    for (int j = 0; j < k; ++j) { w[j] = pw; pw *= Rational(rho); }
    // Scale so the x-space displacement stays inside half the margin.
    Rational reach(0);
    for (int i = 0; i < 4; ++i) {
      Rational comp(0);
      for (int j = 0; j < k; ++j) comp += basis[j][i] * w[j];
      if (comp < Rational(0)) comp = -comp;
      if (comp > reach) reach = comp;
    }
    if (reach.is_zero()) continue;
    Rational step = margin / (Rational(2) * reach);
    for (int halvings = 0; halvings < 8; ++halvings, step /= Rational(2)) {
      std::vector<Rational> t = t_base;
      for (int j = 0; j < k; ++j) t[j] += step * w[j];
      Vec4 cand = point_at(fz.particular, basis, t);
      if (interior_margin(cand, S.lower, S.upper) > Rational(0) && !violated(cand)) {
        x = cand;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Feasibility solve(const LinearSystem& S) {
  Feasibility fz;
  Reduced red = reduce_equations(S);
  if (!red.consistent) {
    fz.rejection = "inconsistent-equations";
    return fz;
  }
  fz.particular = red.particular;
  fz.basis = red.basis;
  for (size_t m = 0; m < S.avoid_lhs.size(); ++m) {
    if (fz.forces(S.avoid_lhs[m], S.avoid_rhs[m])) {
      fz.rejection = "forced-" + S.avoid_tag[m];
      return fz;
    }
  }
  Margin mg = run_margin(fz.particular, fz.basis, S.lower, S.upper);
  if (mg.empty || !(mg.s_max > Rational(0))) {
    fz.rejection = "empty-open-region";
    return fz;
  }
  Rational s_bar = mg.s_max / Rational(2);
  std::vector<Rational> t = back_substitute(mg, fz.dimension(), s_bar);
  fz.sample = point_at(fz.particular, fz.basis, t);
  check(interior_margin(fz.sample, S.lower, S.upper) > Rational(0),
        "margin sample is not interior");
  if (!nudge_off_avoids(S, fz, fz.sample, t, fz.basis)) {
    fz.rejection = "sample-on-forbidden-form";
    return fz;
  }
  fz.margin = interior_margin(fz.sample, S.lower, S.upper);
  fz.feasible = true;
  return fz;
}

std::vector<Vec4> feasible_samples(const LinearSystem& S, int n) {
  std::vector<Vec4> out;
  Feasibility fz = solve(S);
  if (!fz.feasible) return out;
  const int k = fz.dimension();
  if (k == 0 || n <= 1) {
    out.push_back(fz.sample);
    return out;
  }
  // Per-axis bounds of the closed region in t-space: eliminate all other
  // variables with a zero margin.
  std::vector<Rational> lo(k), hi(k);
  for (int axis = 0; axis < k; ++axis) {
    // Reorder the basis so `axis` is eliminated last, then read the bounds
    // off the final recorded step.
    std::vector<Vec4> reordered;
    for (int j = 0; j < k; ++j)
      if (j != axis) reordered.push_back(fz.basis[j]);
    reordered.push_back(fz.basis[axis]);
    Margin mg = run_margin(fz.particular, reordered, S.lower, S.upper);
    check(!mg.empty, "axis bound program empty for a feasible system");
    bool has_lo = false, has_hi = false;
    Rational alo, ahi;
    const auto& rows = mg.steps.back();
    for (const Row& r : rows) {
      const Rational& cv = r.c[k - 1];
      if (cv.is_zero()) continue;
      Rational bound = r.d / cv;  // at s = 0, other t already eliminated
      if (cv > Rational(0)) {
        if (!has_hi || bound < ahi) { ahi = bound; has_hi = true; }
      } else {
        if (!has_lo || bound > alo) { alo = bound; has_lo = true; }
      }
    }
    check(has_lo && has_hi, "feasible region is unbounded along a basis axis");
    lo[axis] = alo;
    hi[axis] = ahi;
  }
  int per_axis = 1;
  while (per_axis < 64) {
    long long total = 1;
    for (int j = 0; j < k; ++j) total *= per_axis;
    if (total >= n) break;
    ++per_axis;
  }
  for (int rounds = 0; rounds < 4 && static_cast<int>(out.size()) < n;
       ++rounds, per_axis *= 2) {
    out.clear();
    std::vector<int> idx(k, 0);
    while (true) {
      std::vector<Rational> t(k);
      for (int j = 0; j < k; ++j)
        t[j] = lo[j] + (hi[j] - lo[j]) * Rational(2 * idx[j] + 1, 2 * per_axis);
      Vec4 x = point_at(fz.particular, fz.basis, t);
      if (interior_margin(x, S.lower, S.upper) > Rational(0) &&
          nudge_off_avoids(S, fz, x, t, fz.basis))
        out.push_back(x);
      int j = 0;
      for (; j < k; ++j) {
        if (++idx[j] < per_axis) break;
        idx[j] = 0;
      }
      if (j == k) break;
      if (static_cast<int>(out.size()) >= n) break;
    }
  }
  if (out.empty()) out.push_back(fz.sample);
  return out;
}

LinearSystem constraints(const Chart& c) {
  LinearSystem S;
  const int F = c.map.face_count();
  for (int v = 0; v < c.map.vertex_count(); ++v) {
    auto counts = vertex_type(c, v);
    Vec4 lhs{Rational(counts[0]), Rational(counts[1]), Rational(counts[2]),
             Rational(counts[3])};
    S.add_equation(lhs, Rational(2));
  }
  S.add_equation({Rational(1), Rational(1), Rational(1), Rational(1)}, area_sum(F));
  return S;
}

std::vector<std::vector<int>> b_placements(const PlanarMap& m) {
  check(m.is_quadrangulation(), "b placements need a quadrangulation");
  const int F = m.face_count();
  std::vector<std::vector<int>> out;
  std::vector<bool> covered(F, false);
  std::vector<int> chosen;
  auto rec = [&](auto&& self) -> void {
    int f = -1;
    for (int i = 0; i < F; ++i)
      if (!covered[i]) { f = i; break; }
    if (f < 0) {
      std::vector<int> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
      return;
    }
    for (int d : m.face_walk(f)) {
      int g = m.face_of(m.rev(d));
      if (g == f || covered[g]) continue;
      covered[f] = covered[g] = true;
      chosen.push_back(m.edge_of(d));
      self(self);
      chosen.pop_back();
      covered[f] = covered[g] = false;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  check(!out.empty(), "quadrangulation dual has no perfect matching");
  return out;
}

namespace {

// Incremental exact consistency of accumulated vertex equations.
struct IncrementalRows {
  std::vector<Vec4> lhs;
  std::vector<Rational> rhs;

  bool add(Vec4 l, Rational r) {
    for (size_t i = 0; i < lhs.size(); ++i) {
      int p = -1;
      for (int j = 0; j < 4; ++j)
        if (!lhs[i][j].is_zero()) { p = j; break; }
      check(p >= 0, "stored zero row");
      if (l[p].is_zero()) continue;
      Rational f = l[p] / lhs[i][p];
      for (int j = 0; j < 4; ++j) l[j] -= f * lhs[i][j];
      r -= f * rhs[i];
    }
    bool zero = true;
    for (int j = 0; j < 4; ++j) zero = zero && l[j].is_zero();
    if (zero) return r.is_zero();
    lhs.push_back(l);
    rhs.push_back(r);
    return true;
  }
};

}  // namespace

std::vector<Chart> angle_assignments(const PlanarMap& m,
                                     const std::vector<int>& placement,
                                     TileType type) {
  const int F = m.face_count();
  std::vector<bool> is_b(m.edge_count(), false);
  for (int e : placement) is_b[e] = true;
  // The walk position of each face's b-side.
  std::vector<int> b_pos(F, -1);
  for (int f = 0; f < F; ++f) {
    const auto& w = m.face_walk(f);
    for (int k = 0; k < 4; ++k)
      if (is_b[m.edge_of(w[k])]) {
        check(b_pos[f] < 0, "placement has two b-sides on one face");
        b_pos[f] = k;
      }
    check(b_pos[f] >= 0, "placement misses a face");
  }

  Chart work;
  work.map = m;
  work.tile_type = type;
  work.K.assign(m.dart_count(), Symbol::alpha);
  std::vector<bool> decorated(F, false);
  std::vector<int> corners_done(m.vertex_count(), 0);
  std::vector<Chart> found;

  // Stabilizer of the placement, for removing symmetric duplicates.
  std::vector<MapIso> stabilizer;
  for (const auto& h : m.automorphisms_with_mirror()) {
    std::vector<int> mapped;
    mapped.reserve(placement.size());
    for (int e : placement)
      mapped.push_back(m.edge_of(h.dart_image[m.edge_dart(e, 0)]));
    std::sort(mapped.begin(), mapped.end());
    if (mapped == placement) stabilizer.push_back(h);
  }
  std::set<std::vector<std::uint8_t>> seen;

  auto emit = [&]() {
    Chart c = work;
    if (!infer_edge_labels(m, c.K, type, c.L)) return;
    std::vector<std::uint8_t> best;
    for (const auto& h : stabilizer) {
      Chart t = transport_chart(c, h);
      std::vector<std::uint8_t> key(t.K.size());
      for (size_t i = 0; i < t.K.size(); ++i)
        key[i] = static_cast<std::uint8_t>(t.K[i]);
      if (best.empty() || key < best) best = std::move(key);
    }
    if (seen.insert(best).second) found.push_back(std::move(c));
  };

  auto rec = [&](auto&& self, int f, const IncrementalRows& rows) -> void {
    if (f == F) {
      emit();
      return;
    }
    for (int forward = 0; forward < 2; ++forward) {
      decorate_face(work, f, b_pos[f], forward == 1);
      decorated[f] = true;
      // Type-4 positional consistency across already decorated neighbors.
      bool ok = true;
      if (type == TileType::type4) {
        for (int d : m.face_walk(f)) {
          if (is_b[m.edge_of(d)]) continue;
          int g = m.face_of(m.rev(d));
          if (g == f || !decorated[g]) continue;
          if (dart_side_label(work, d) != dart_side_label(work, m.rev(d))) {
            ok = false;
            break;
          }
        }
      }
      // Complete-vertex equations must stay consistent.
      IncrementalRows next = rows;
      if (ok) {
        for (int d : m.face_walk(f)) {
          int v = m.tail(d);
          if (++corners_done[v] == m.degree(v)) {
            auto counts = vertex_type(work, v);
            Vec4 lhs{Rational(counts[0]), Rational(counts[1]),
                     Rational(counts[2]), Rational(counts[3])};
            if (!next.add(lhs, Rational(2))) { ok = false; }
          }
        }
        if (ok) self(self, f + 1, next);
        for (int d : m.face_walk(f)) --corners_done[m.tail(d)];
      } else {
        for (int d : m.face_walk(f)) ++corners_done[m.tail(d)], --corners_done[m.tail(d)];
      }
      decorated[f] = false;
    }
  };
  IncrementalRows start;
  rec(rec, 0, start);
  return found;
}

FilterResult lemma_filters(const Chart& c, const Feasibility& fz) {
  check(fz.feasible, "lemma filters need a feasible system");
  using S = Symbol;
  FilterResult r;
  if (fz.forces_equal(S::alpha, S::beta) && fz.forces_equal(S::gamma, S::delta)) {
    r.pass = false;
    r.reason = "filter-lune";
    return r;
  }
  if (c.tile_type == TileType::type4 && fz.forces_equal(S::alpha, S::delta) &&
      fz.forces_equal(S::beta, S::gamma)) {
    r.pass = false;
    r.reason = "filter-lune-conjugate";
    return r;
  }
  if (fz.forces_equal(S::alpha, S::gamma)) {
    r.pass = false;
    r.reason = "filter-diagonal-alpha-gamma";
    return r;
  }
  if (c.tile_type == TileType::type2 && fz.forces_equal(S::beta, S::delta)) {
    r.pass = false;
    r.reason = "filter-diagonal-beta-delta";
    return r;
  }
  if (c.tile_type == TileType::type2) {
    bool witness_all_a = false, witness_a_and_b = false;
    for (int v = 0; v < c.map.vertex_count(); ++v) {
      if (c.map.degree(v) != 3) continue;
      int bs = 0;
      for (int d : c.map.rotation(v))
        bs += (c.L[c.map.edge_of(d)] == LengthLabel::b) ? 1 : 0;
      if (bs == 0) witness_all_a = true;
      if (bs >= 1 && bs < 3) witness_a_and_b = true;
    }
    if (witness_all_a && witness_a_and_b &&
        (fz.forces_equal(S::alpha, S::delta) || fz.forces_equal(S::beta, S::gamma))) {
      r.pass = false;
      r.reason = "filter-three-valent";
      return r;
    }
  }
  return r;
}

}  // namespace pdw
