#pragma once
// Binary interchange format for embedded planar graphs ("planar code"):
// the ASCII header ">>planar_code<<" followed, per graph, by the vertex
// count and then each vertex's neighbors in rotation order (1-based bytes),
// each list terminated by 0.  This is the format spoken by the standard
// planar-graph generation ecosystem, so generated quadrangulations can be
// cross-checked with external tools.

#include <iosfwd>
#include <vector>

#include "pdw/planar_map.hpp"

namespace pdw {

inline constexpr const char* kPlanarCodeHeader = ">>planar_code<<";

void write_planar_code_header(std::ostream& os);
void write_planar_code(std::ostream& os, const PlanarMap& m);

// Reads every graph in the stream (header mandatory).
std::vector<PlanarMap> read_planar_code(std::istream& is);

}  // namespace pdw
