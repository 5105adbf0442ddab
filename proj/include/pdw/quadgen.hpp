#pragma once
// Generation of simple spherical quadrangulations with minimum degree 3
// (class Q2) and their 3-connected subclass (Q3), by local expansions from
// pseudo-double wheels.
//
// Two expansions suffice (every Q2 quadrangulation is reachable from a
// pseudo-double wheel through Q2 members only):
//   * vertex split   — a vertex of degree >= 4 splits into two vertices of
//     degree >= 3 sharing two attachment neighbors; one new quad face.
//     The inverse contracts a quadrilateral across a diagonal, so this is
//     the "degree-3 vertex insertion" when one side keeps exactly 3 edges.
//   * cube expansion — a face gains an inner 4-cycle joined corner to
//     corner (the corner figure of a cube); four new quad faces.
//
// Correctness of the whole generator is validated against the published
// counts of isomorphism classes per (faces, number of distinct degrees).

#include <functional>
#include <vector>

#include "pdw/planar_map.hpp"

namespace pdw {

enum class QClass { Q2, Q3 };

struct ExpansionSite {
  // kind 0: vertex split at vertex v, attachment neighbor indices i and j
  // into v's rotation (both resulting degrees >= 3).
  // kind 1: cube expansion at face f.
  int kind = 0;
  int v = -1;
  int i = -1;
  int j = -1;
  int face = -1;
};

PlanarMap expand(const PlanarMap& m, const ExpansionSite& site);
std::vector<ExpansionSite> expansion_sites(const PlanarMap& m);

// Streams every isomorphism class (orientation-reversing isomorphisms
// permitted) of the requested class with exactly F faces, in a
// deterministic order.  Returns the number of maps emitted.
long long enumerate_quadrangulations(int F, QClass cls,
                                     const std::function<void(const PlanarMap&)>& emit);
std::vector<PlanarMap> enumerate_quadrangulations(int F, QClass cls);

// p(F, delta): count of Q2 classes with F faces and exactly delta distinct
// vertex degrees; index delta-1.
std::vector<long long> degree_class_count(int F);

}  // namespace pdw
