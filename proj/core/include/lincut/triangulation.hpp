#pragma once

#include <array>
#include <span>
#include <vector>

#include "lincut/mesh.hpp"

namespace lincut {

/// Points plus index pairs that must become (chains of) mesh edges.
struct ProblemInput {
  std::vector<Point2> points;
  std::vector<std::array<VertexId, 2>> segments;
};

/// Triangulates the convex hull of `points`, keeping every point as a vertex
/// (vertex i is points[i]). Points are inserted in input order; a point
/// outside the current hull is joined to every hull edge it sees, so hull
/// points that are collinear stay as vertices. No Delaunay property.
///
/// Throws Error(TooFewPoints), Error(DuplicatePoints) or
/// Error(CollinearPoints).
TriMesh triangulate_points(std::span<const Point2> points);

/// Checks ProblemInput invariants: distinct points, segment endpoints in
/// range and distinct, no two segments crossing properly.
void check_problem(const ProblemInput& input);

/// triangulate_points, then insert_segment for every segment in input order.
TriMesh build_constrained(const ProblemInput& input);

/// True iff the points lying on segment (a, b), taken in order, are joined
/// by constrained edges.
bool segment_covered(const TriMesh& mesh, VertexId a, VertexId b);

}  // namespace lincut
