#include "pdw/quadgen.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pdw/rational.hpp"  // fatal/check

namespace pdw {

namespace {

std::vector<std::vector<int>> neighbor_lists(const PlanarMap& m) {
  std::vector<std::vector<int>> nbrs(m.vertex_count());
  for (int v = 0; v < m.vertex_count(); ++v) {
    nbrs[v].reserve(m.degree(v));
    for (int d : m.rotation(v)) nbrs[v].push_back(m.head(d));
  }
  return nbrs;
}

// Replace the unique occurrence of `old_v` in `list` by the run `repl`.
void splice_at(std::vector<int>& list, int old_v, const std::vector<int>& repl) {
  auto it = std::find(list.begin(), list.end(), old_v);
  check(it != list.end(), "expansion splice target missing");
  it = list.erase(it);
  list.insert(it, repl.begin(), repl.end());
}

PlanarMap split_vertex(const PlanarMap& m, int v, int i, int j) {
  auto nbrs = neighbor_lists(m);
  const int d = static_cast<int>(nbrs[v].size());
  const int len1 = ((j - i) % d + d) % d + 1;  // arc n_i..n_j inclusive
  const int len2 = d + 2 - len1;
  check(i != j && len1 >= 3 && len2 >= 3, "vertex split arcs must keep degree >= 3");
  const int v2 = static_cast<int>(nbrs.size());
  const int ni = nbrs[v][i], nj = nbrs[v][j];
  std::vector<int> arc1, arc2;
  for (int k = 0; k < len1; ++k) arc1.push_back(nbrs[v][(i + k) % d]);
  for (int k = 0; k < len2; ++k) arc2.push_back(nbrs[v][(j + k) % d]);
  // v keeps arc1; the new vertex v2 takes arc2.  The shared attachment
  // neighbors see (v, v2) at n_i and (v2, v) at n_j, which is exactly the
  // order that makes the new face (v, n_i, v2, n_j) quadrilateral.
  nbrs[v] = arc1;
  nbrs.push_back(arc2);
  for (int k = 1; k + 1 < len2; ++k) {
    int w = arc2[k];
    std::replace(nbrs[w].begin(), nbrs[w].end(), v, v2);
  }
  splice_at(nbrs[ni], v, {v, v2});
  splice_at(nbrs[nj], v, {v2, v});
  return PlanarMap::from_rotations(nbrs);
}

bool face_has_distinct_corners(const PlanarMap& m, int f) {
  auto w = m.face_vertices(f);
  std::sort(w.begin(), w.end());
  return std::adjacent_find(w.begin(), w.end()) == w.end();
}

PlanarMap cube_expand(const PlanarMap& m, int f) {
  auto nbrs = neighbor_lists(m);
  const auto walk = m.face_vertices(f);
  check(walk.size() == 4 && face_has_distinct_corners(m, f),
        "cube expansion needs a quadrilateral face with distinct corners");
  const int V = static_cast<int>(nbrs.size());
  // New vertices w_k' = V+k paired with walk vertices w_k.
  // w_k' rotation: (w_k, w_{k+1}', w_{k-1}').
  for (int k = 0; k < 4; ++k)
    nbrs.push_back({walk[k], V + (k + 1) % 4, V + (k + 3) % 4});
  // At w_k, the face corner lies between the entries w_{k+1} and w_{k-1}
  // (consecutive by the face-tracing convention); insert w_k' between them.
  for (int k = 0; k < 4; ++k) {
    auto& list = nbrs[walk[k]];
    const int after = walk[(k + 1) % 4];
    auto it = std::find(list.begin(), list.end(), after);
    check(it != list.end(), "cube expansion corner missing");
    list.insert(std::next(it), V + k);
  }
  return PlanarMap::from_rotations(nbrs);
}

bool in_q2(const PlanarMap& m) {
  return m.is_simple() && m.min_degree() >= 3 && m.is_quadrangulation();
}

}  // namespace

PlanarMap expand(const PlanarMap& m, const ExpansionSite& s) {
  return s.kind == 0 ? split_vertex(m, s.v, s.i, s.j) : cube_expand(m, s.face);
}

std::vector<ExpansionSite> expansion_sites(const PlanarMap& m) {
  std::vector<ExpansionSite> out;
  for (int v = 0; v < m.vertex_count(); ++v) {
    const int d = m.degree(v);
    if (d < 4) continue;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        const int len1 = ((j - i) % d + d) % d + 1;
        if (len1 < 3 || d + 2 - len1 < 3) continue;
        ExpansionSite s;
        s.kind = 0;
        s.v = v;
        s.i = i;
        s.j = j;
        out.push_back(s);
      }
    }
  }
  for (int f = 0; f < m.face_count(); ++f) {
    if (!face_has_distinct_corners(m, f)) continue;
    ExpansionSite s;
    s.kind = 1;
    s.face = f;
    out.push_back(s);
  }
  return out;
}

long long enumerate_quadrangulations(int F, QClass cls,
                                     const std::function<void(const PlanarMap&)>& emit) {
  check(F >= 6 && F % 2 == 0, "quadrangulation enumeration needs even F >= 6");
  // Search the expansion dag level by level (face count is monotone), with a
  // visited set of mirror-invariant canonical codes per level.
  std::map<int, std::vector<PlanarMap>> frontier;  // face count -> maps
  std::map<int, std::set<std::vector<std::uint8_t>>> seen;
  for (int f0 = 6; f0 <= F; f0 += 2) {
    PlanarMap m = make_pdw(f0);
    if (seen[f0].insert(m.canonical_code_with_mirror()).second)
      frontier[f0].push_back(std::move(m));
  }
  for (int level = 6; level < F; ++level) {
    auto it = frontier.find(level);
    if (it == frontier.end()) continue;
    for (const PlanarMap& m : it->second) {
      for (const ExpansionSite& s : expansion_sites(m)) {
        const int nf = level + (s.kind == 0 ? 1 : 4);
        if (nf > F) continue;
        PlanarMap next = expand(m, s);
        if (!in_q2(next)) continue;
        if (seen[nf].insert(next.canonical_code_with_mirror()).second)
          frontier[nf].push_back(std::move(next));
      }
    }
    // This level is fully expanded and never needed again.
    frontier.erase(it);
    seen.erase(level);
  }
  long long count = 0;
  auto it = frontier.find(F);
  if (it != frontier.end()) {
    for (const PlanarMap& m : it->second) {
      if (cls == QClass::Q3 && !m.is_three_connected()) continue;
      ++count;
      emit(m);
    }
  }
  return count;
}

std::vector<PlanarMap> enumerate_quadrangulations(int F, QClass cls) {
  std::vector<PlanarMap> out;
  enumerate_quadrangulations(F, cls, [&](const PlanarMap& m) { out.push_back(m); });
  return out;
}

std::vector<long long> degree_class_count(int F) {
  std::vector<long long> counts;
  enumerate_quadrangulations(F, QClass::Q2, [&](const PlanarMap& m) {
    int delta = m.distinct_degree_count();
    if (static_cast<int>(counts.size()) < delta) counts.resize(delta, 0);
    ++counts[delta - 1];
  });
  return counts;
}

}  // namespace pdw
