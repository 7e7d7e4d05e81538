#pragma once

#include <vector>

#include "lincut/earcut.hpp"
#include "lincut/mesh.hpp"

namespace lincut {

struct SegmentConstraint {
  VertexId a;
  VertexId b;
};

/// The two polygons left on either side of a segment once the triangles it
/// crosses are removed. `upper` lies left of a -> b and runs b ... a;
/// `lower` lies right of a -> b and runs a ... b. Both are CCW.
struct PocketPair {
  PocketPolygon upper;
  PocketPolygon lower;
};

/// Alive triangles properly crossed by the open segment (a, b), in order
/// from a to b. Starts from a's triangle fan and follows adjacency.
///
/// Throws SegmentThroughVertex when the segment hits a vertex exactly,
/// Error(SegmentOutsideMesh) when the walk leaves the mesh, and
/// Error(SegmentCrossesConstraint) when it crosses a constrained edge.
/// Precondition: (a, b) is not already an edge.
std::vector<TriangleId> collect_intersected(const TriMesh& mesh, SegmentConstraint s);

/// Boundary chains of the crossed region on both sides of the segment.
/// A mesh vertex met more than once along one side (dangling edges, holes)
/// is emitted once per visit, each visit its own chain position.
/// Throws Error(InconsistentBoundary) if the triangle list is not a strip
/// crossed by the segment.
PocketPair extract_pockets(const TriMesh& mesh, std::span<const TriangleId> intersected,
                           SegmentConstraint s);

struct InsertionStats {
  std::size_t removed = 0;
  std::size_t added = 0;
  std::size_t pieces = 0;  // constrained edges the segment was split into
};

/// Makes (a, b) a chain of constrained mesh edges.
///
/// A segment running exactly through vertices is split there, and pieces that
/// are already edges are only marked. Every other piece goes through
/// collect -> remove -> extract -> linear earcut on both pockets -> add.
/// On error the mesh is left as it was before the failing piece.
InsertionStats insert_segment(TriMesh& mesh, SegmentConstraint s);

}  // namespace lincut
