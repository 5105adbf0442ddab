#pragma once
// Exact feasibility engine for angle systems.
//
// Every chart induces one linear equation per vertex (its corner symbols sum
// to a full angle, 2 in pi-radian units) plus the area equation
// alpha+beta+gamma+delta = 2 + 4/F.  This module enumerates b-edge
// placements (perfect matchings of the dual), generates all angle
// decorations compatible with the tile shape, and decides strict rational
// feasibility of the resulting systems inside open angle bounds, entirely
// without floating point.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pdw/chart.hpp"
#include "pdw/rational.hpp"

namespace pdw {

using Vec4 = std::array<Rational, 4>;  // coefficients over (alpha, beta, gamma, delta)

struct LinearSystem {
  std::vector<Vec4> eq_lhs;
  std::vector<Rational> eq_rhs;
  // Linear forms (lhs, rhs) that must NOT be satisfied identically; a form
  // that vanishes on the whole solution space makes the system infeasible.
  std::vector<Vec4> avoid_lhs;
  std::vector<Rational> avoid_rhs;
  std::vector<std::string> avoid_tag;
  // Open bounds: every symbol strictly between lower and upper.
  Rational lower = Rational(0);
  Rational upper = Rational(1);

  void add_equation(const Vec4& lhs, const Rational& rhs);
  void add_avoid(const Vec4& lhs, const Rational& rhs, std::string tag);
};

struct Feasibility {
  bool feasible = false;
  std::string rejection;  // stable tag when infeasible

  // Affine solution space of the equations: particular + span(basis).
  Vec4 particular{};
  std::vector<Vec4> basis;
  int dimension() const { return static_cast<int>(basis.size()); }

  // A strictly interior rational sample avoiding all non-forced avoid-forms.
  Vec4 sample{};
  Rational margin;  // interiority margin of `sample` w.r.t. the open bounds

  // Does lhs . x == rhs hold identically on the solution space?
  bool forces(const Vec4& lhs, const Rational& rhs) const;
  bool forces_equal(Symbol x, Symbol y) const;
};

// Exact solve: Gaussian elimination for the equations, Fourier-Motzkin with
// an interiority margin for the open bounds, forced-vanishing test for the
// avoid-forms.
Feasibility solve(const LinearSystem& S);

// Up to n strictly interior rational samples spread over the feasible
// region (grid over the solution space's bounding box, nudged off the
// non-forced avoid-forms).  Returns the single point for dimension 0.
std::vector<Vec4> feasible_samples(const LinearSystem& S, int n);

// One equation per vertex plus the area equation, deduplicated; bounds are
// left at the caller's default.
LinearSystem constraints(const Chart& c);

// All b-edge placements: perfect matchings of the dual graph, each given as
// the sorted primal edge ids to be labeled b (one per face).
std::vector<std::vector<int>> b_placements(const PlanarMap& m);

// All angle decorations over a placement: every face gets its b-side on the
// placement edge (endpoints alpha/delta) in one of the two chiralities.
// Branches whose vertex equations are already inconsistent are pruned, as
// are type-4 branches with a/c label conflicts; completed decorations are
// deduplicated modulo the self-maps of the map that fix the placement.
std::vector<Chart> angle_assignments(const PlanarMap& m,
                                     const std::vector<int>& placement,
                                     TileType type);

struct FilterResult {
  bool pass = true;
  std::string reason;  // stable tag when failed
};

// The forced-equality tile filters.  A filter fires only when the solution
// space forces the forbidden equality everywhere:
//   - lune filter: alpha=beta and gamma=delta cannot both be forced; for
//     type 4, alpha=delta and beta=gamma cannot both be forced either.
//   - diagonal filter: type 2 forbids forced beta=delta or forced
//     alpha=gamma; type 4 forbids forced alpha=gamma.
//   - 3-valent filter (type 2 only), applied when the chart has both a
//     3-valent vertex with three a-length sides and a 3-valent vertex with
//     an a-length and a b side: forbids forced alpha=delta or beta=gamma.
FilterResult lemma_filters(const Chart& c, const Feasibility& fz);

}  // namespace pdw
