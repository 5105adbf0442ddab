#include "pdw/planar_code.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "pdw/rational.hpp"  // fatal/check

namespace pdw {

void write_planar_code_header(std::ostream& os) { os << kPlanarCodeHeader; }

void write_planar_code(std::ostream& os, const PlanarMap& m) {
  const int V = m.vertex_count();
  check(V > 0 && V < 255, "planar code supports 1..254 vertices");
  os.put(static_cast<char>(V));
  for (int v = 0; v < V; ++v) {
    for (int d : m.rotation(v)) os.put(static_cast<char>(m.head(d) + 1));
    os.put(0);
  }
}

std::vector<PlanarMap> read_planar_code(std::istream& is) {
  std::string header(std::string(kPlanarCodeHeader).size(), '\0');
  is.read(header.data(), static_cast<std::streamsize>(header.size()));
  check(is.good() && header == kPlanarCodeHeader, "missing planar code header");
  std::vector<PlanarMap> out;
  for (;;) {
    int v0 = is.get();
    if (v0 == std::char_traits<char>::eof()) break;
    const int V = v0;
    check(V > 0 && V < 255, "planar code vertex count out of range");
    std::vector<std::vector<int>> nbrs(V);
    for (int v = 0; v < V; ++v) {
      for (;;) {
        int b = is.get();
        check(b != std::char_traits<char>::eof(), "truncated planar code");
        if (b == 0) break;
        nbrs[v].push_back(b - 1);
      }
    }
    out.push_back(PlanarMap::from_rotations(nbrs));
  }
  return out;
}

}  // namespace pdw
