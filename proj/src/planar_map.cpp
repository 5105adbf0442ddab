#include "pdw/planar_map.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "pdw/rational.hpp"  // for fatal/check

namespace pdw {

PlanarMap PlanarMap::from_rotations(const std::vector<std::vector<int>>& nbrs) {
  const int V = static_cast<int>(nbrs.size());
  PlanarMap m;
  m.rot_.resize(V);
  // First pass: create darts.
  std::map<std::pair<int, int>, int> dart_of;  // (tail, head) -> dart id
  for (int v = 0; v < V; ++v) {
    for (int w : nbrs[v]) {
      check(w >= 0 && w < V, "neighbor id out of range");
      check(w != v, "loop edge not supported");
      int d = static_cast<int>(m.tail_.size());
      auto inserted = dart_of.emplace(std::make_pair(v, w), d);
      check(inserted.second, "parallel edge not supported");
      m.tail_.push_back(v);
      m.pos_.push_back(static_cast<int>(m.rot_[v].size()));
      m.rot_[v].push_back(d);
    }
  }
  // Second pass: pair opposite darts into edges.
  const int D = static_cast<int>(m.tail_.size());
  m.rev_.assign(D, -1);
  m.edge_of_.assign(D, -1);
  for (const auto& [key, d] : dart_of) {
    auto it = dart_of.find(std::make_pair(key.second, key.first));
    check(it != dart_of.end(), "asymmetric adjacency lists");
    m.rev_[d] = it->second;
  }
  int E = 0;
  for (int d = 0; d < D; ++d) {
    if (m.edge_of_[d] >= 0) continue;
    m.edge_of_[d] = m.edge_of_[m.rev_[d]] = E++;
    m.edge_darts_.push_back(d);
    m.edge_darts_.push_back(m.rev_[d]);
  }
  // Connectivity: every layer assumes one component.
  if (V > 0) {
    std::vector<char> seen(V, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int d : m.rot_[v]) {
        int w = m.head(d);
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          q.push(w);
        }
      }
    }
    check(cnt == V, "map must be connected");
  }
  m.index_faces();
  return m;
}

void PlanarMap::index_faces() {
  const int D = dart_count();
  face_of_.assign(D, -1);
  face_pos_.assign(D, -1);
  face_walks_.clear();
  for (int d0 = 0; d0 < D; ++d0) {
    if (face_of_[d0] >= 0) continue;
    int f = static_cast<int>(face_walks_.size());
    face_walks_.emplace_back();
    int d = d0;
    do {
      face_of_[d] = f;
      face_pos_[d] = static_cast<int>(face_walks_[f].size());
      face_walks_[f].push_back(d);
      d = next_face_dart(d);
    } while (d != d0);
  }
}

std::vector<int> PlanarMap::face_vertices(int f) const {
  std::vector<int> out;
  out.reserve(face_walks_[f].size());
  for (int d : face_walks_[f]) out.push_back(tail_[d]);
  return out;
}

bool PlanarMap::is_quadrangulation() const {
  for (const auto& w : face_walks_)
    if (w.size() != 4) return false;
  // Euler characteristic of the sphere.
  return vertex_count() - edge_count() + face_count() == 2;
}

bool PlanarMap::is_simple() const {
  for (int v = 0; v < vertex_count(); ++v) {
    std::set<int> seen;
    for (int d : rot_[v]) {
      int w = head(d);
      if (w == v || !seen.insert(w).second) return false;
    }
  }
  return true;
}

int PlanarMap::min_degree() const {
  int md = dart_count();
  for (const auto& r : rot_) md = std::min(md, static_cast<int>(r.size()));
  return md;
}

int PlanarMap::distinct_degree_count() const {
  std::set<int> degs;
  for (const auto& r : rot_) degs.insert(static_cast<int>(r.size()));
  return static_cast<int>(degs.size());
}

bool PlanarMap::is_three_connected() const {
  const int V = vertex_count();
  if (V < 4) return false;
  // No cut set of size <= 2: remove each vertex pair and test connectivity.
  auto connected_without = [&](int a, int b) {
    int start = -1;
    for (int v = 0; v < V; ++v)
      if (v != a && v != b) { start = v; break; }
    if (start < 0) return true;
    std::vector<char> seen(V, 0);
    seen[start] = 1;
    if (a >= 0) seen[a] = 1;
    if (b >= 0) seen[b] = 1;
    std::queue<int> q;
    q.push(start);
    int cnt = 1;
    const int want = V - (a >= 0) - (b >= 0);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int d : rot_[v]) {
        int w = head(d);
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          q.push(w);
        }
      }
    }
    return cnt == want;
  };
  for (int a = 0; a < V; ++a) {
    if (!connected_without(a, -1)) return false;
    for (int b = a + 1; b < V; ++b)
      if (!connected_without(a, b)) return false;
  }
  return true;
}

PlanarMap PlanarMap::dual() const {
  // Dual vertices are faces; the dual dart of primal dart d crosses edge(d)
  // from face_of(d) into face_of(rev(d)).  Around a face, dual darts occur
  // in face-walk order, which is a valid rotation for the dual map.
  PlanarMap m;
  const int D = dart_count();
  m.rot_.resize(face_count());
  m.tail_.assign(D, -1);
  m.pos_.assign(D, -1);
  m.rev_ = rev_;
  m.edge_of_ = edge_of_;
  m.edge_darts_ = edge_darts_;
  for (int f = 0; f < face_count(); ++f) {
    for (int d : face_walks_[f]) {
      m.tail_[d] = f;
      m.pos_[d] = static_cast<int>(m.rot_[f].size());
      m.rot_[f].push_back(d);
    }
  }
  m.index_faces();
  return m;
}

PlanarMap PlanarMap::mirrored() const {
  // Reverse every rotation; dart identities are preserved.
  PlanarMap m = *this;
  for (int v = 0; v < vertex_count(); ++v) {
    std::reverse(m.rot_[v].begin(), m.rot_[v].end());
    for (int i = 0; i < static_cast<int>(m.rot_[v].size()); ++i)
      m.pos_[m.rot_[v][i]] = i;
  }
  m.index_faces();
  return m;
}

PlanarMap PlanarMap::relabeled(const std::vector<int>& new_id) const {
  const int V = vertex_count();
  std::vector<std::vector<int>> nbrs(V);
  for (int v = 0; v < V; ++v) {
    auto& out = nbrs[new_id[v]];
    out.reserve(rot_[v].size());
    for (int d : rot_[v]) out.push_back(new_id[head(d)]);
  }
  return from_rotations(nbrs);
}

std::vector<std::uint8_t> PlanarMap::code_from(int root_dart, bool reversed) const {
  const int V = vertex_count();
  check(V < 255, "canonical code supports fewer than 255 vertices");
  std::vector<int> label(V, -1);
  std::vector<int> start(V, -1);  // dart at which the rotation walk begins
  std::vector<int> order;         // vertices in label order
  order.reserve(V);
  label[tail_[root_dart]] = 0;
  start[tail_[root_dart]] = root_dart;
  order.push_back(tail_[root_dart]);
  std::vector<std::uint8_t> code;
  code.reserve(dart_count() + V);
  int next_label = 1;
  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    int v = order[k];
    int d = start[v];
    const int deg = degree(v);
    for (int i = 0; i < deg; ++i) {
      int w = head(d);
      if (label[w] < 0) {
        label[w] = next_label++;
        start[w] = rev_[d];
        order.push_back(w);
      }
      code.push_back(static_cast<std::uint8_t>(label[w] + 1));
      d = reversed ? prev_at_vertex(d) : next_at_vertex(d);
    }
    code.push_back(0);
  }
  check(next_label == V, "code_from requires a connected map");
  return code;
}

std::vector<int> PlanarMap::traversal_from(int root_dart, bool reversed) const {
  const int V = vertex_count();
  std::vector<int> label(V, -1);
  std::vector<int> start(V, -1);
  std::vector<int> order;
  order.reserve(V);
  label[tail_[root_dart]] = 0;
  start[tail_[root_dart]] = root_dart;
  order.push_back(tail_[root_dart]);
  std::vector<int> darts;
  darts.reserve(dart_count());
  int next_label = 1;
  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    int v = order[k];
    int d = start[v];
    const int deg = degree(v);
    for (int i = 0; i < deg; ++i) {
      int w = head(d);
      if (label[w] < 0) {
        label[w] = next_label++;
        start[w] = rev_[d];
        order.push_back(w);
      }
      darts.push_back(d);
      d = reversed ? prev_at_vertex(d) : next_at_vertex(d);
    }
  }
  return darts;
}

std::vector<std::uint8_t> PlanarMap::canonical_code() const {
  std::vector<std::uint8_t> best;
  for (int d = 0; d < dart_count(); ++d) {
    auto c = code_from(d, false);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

std::vector<std::uint8_t> PlanarMap::canonical_code_with_mirror() const {
  auto best = canonical_code();
  for (int d = 0; d < dart_count(); ++d) {
    auto c = code_from(d, true);
    if (c < best) best = std::move(c);
  }
  return best;
}

bool PlanarMap::isomorphic_to(const PlanarMap& other) const {
  if (vertex_count() != other.vertex_count() || dart_count() != other.dart_count())
    return false;
  return canonical_code() == other.canonical_code();
}

bool PlanarMap::isomorphic_with_mirror_to(const PlanarMap& other) const {
  if (vertex_count() != other.vertex_count() || dart_count() != other.dart_count())
    return false;
  return canonical_code_with_mirror() == other.canonical_code_with_mirror();
}

namespace {

MapIso iso_from_traversals(const PlanarMap& m, const std::vector<int>& base_darts,
                           const std::vector<int>& image_darts, bool reversing) {
  MapIso iso;
  iso.reversing = reversing;
  iso.dart_image.assign(m.dart_count(), -1);
  iso.vertex_image.assign(m.vertex_count(), -1);
  for (size_t i = 0; i < base_darts.size(); ++i) {
    iso.dart_image[base_darts[i]] = image_darts[i];
    iso.vertex_image[m.tail(base_darts[i])] = m.tail(image_darts[i]);
  }
  return iso;
}

}  // namespace

std::vector<MapIso> PlanarMap::automorphisms() const {
  std::vector<MapIso> out;
  if (dart_count() == 0) return out;
  const auto base_code = code_from(0, false);
  const auto base_darts = traversal_from(0, false);
  for (int d = 0; d < dart_count(); ++d) {
    if (code_from(d, false) != base_code) continue;
    out.push_back(iso_from_traversals(*this, base_darts, traversal_from(d, false), false));
  }
  return out;
}

std::vector<MapIso> PlanarMap::automorphisms_with_mirror() const {
  std::vector<MapIso> out = automorphisms();
  if (dart_count() == 0) return out;
  const auto base_code = code_from(0, false);
  const auto base_darts = traversal_from(0, false);
  for (int d = 0; d < dart_count(); ++d) {
    if (code_from(d, true) != base_code) continue;
    out.push_back(iso_from_traversals(*this, base_darts, traversal_from(d, true), true));
  }
  return out;
}

PlanarMap make_pdw(int F) {
  check(F >= 6 && F % 2 == 0, "pseudo-double wheel needs an even face count >= 6");
  const int N = pdw_north(F), S = pdw_south(F);
  std::vector<std::vector<int>> nbrs(F + 2);
  auto eq = [&](int i) { return ((i % F) + F) % F; };
  for (int i = 0; i < F / 2; ++i) {
    // Even equatorial vertex: (v_{2i-1}, v_{2i+1}, N).
    nbrs[2 * i] = {eq(2 * i - 1), eq(2 * i + 1), N};
    // Odd equatorial vertex: (v_{2i+2}, v_{2i}, S).
    nbrs[2 * i + 1] = {eq(2 * i + 2), 2 * i, S};
  }
  for (int i = 0; i < F / 2; ++i) nbrs[N].push_back(2 * i);           // ascending evens
  for (int i = F / 2 - 1; i >= 0; --i) nbrs[S].push_back(2 * i + 1);  // descending odds
  PlanarMap m = PlanarMap::from_rotations(nbrs);
  check(m.is_quadrangulation(), "pseudo-double wheel must be a quadrangulation");
  return m;
}

}  // namespace pdw
