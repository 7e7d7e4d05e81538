#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lincut/mesh.hpp"

namespace lincut {

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

/// Raw contents of a 2D OFF file (z is read and must be 0).
struct OffData {
  std::vector<Point2> points;
  std::vector<VertexTriple> faces;
};

/// "OFF", then "V F 0", V lines "x y 0", F lines "3 i j k" (alive triangles
/// in id order). Coordinates round-trip exactly.
void write_off(std::ostream& out, const TriMesh& mesh);

/// Parses the format written by write_off. Accepts '#' comments and the
/// header keyword on its own line or merged with the counts line.
/// Throws Error(ParseError) with a line-level diagnostic.
OffData read_off(std::istream& in);

/// Edge drawing fitted into a 1024 x 1024 viewport: black mesh edges,
/// red constrained edges.
void write_svg(std::ostream& out, const TriMesh& mesh);

}  // namespace lincut
