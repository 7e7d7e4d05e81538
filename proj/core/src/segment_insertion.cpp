#include "lincut/segment_insertion.hpp"

#include <algorithm>

#include "lincut/error.hpp"

namespace lincut {

namespace {

std::string seg_str(SegmentConstraint s) {
  return "(" + std::to_string(s.a) + ", " + std::to_string(s.b) + ")";
}

int slot_of(const VertexTriple& tv, VertexId from, VertexId to) {
  for (int k = 0; k < 3; ++k) {
    if (tv[k] == from && tv[(k + 1) % 3] == to) return k;
  }
  return -1;
}

[[noreturn]] void through_vertex(VertexId v, SegmentConstraint s) {
  throw SegmentThroughVertex(
      v, "segment " + seg_str(s) + " runs exactly through vertex " + std::to_string(v));
}

void check_ids(const TriMesh& mesh, SegmentConstraint s) {
  if (s.a >= mesh.vertex_count() || s.b >= mesh.vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "segment " + seg_str(s) + " is out of range");
  }
  if (s.a == s.b || mesh.point(s.a) == mesh.point(s.b)) {
    throw Error(ErrorCode::DegenerateSegment, "segment " + seg_str(s) + " has zero length");
  }
}

}  // namespace

std::vector<TriangleId> collect_intersected(const TriMesh& mesh, SegmentConstraint s) {
  check_ids(mesh, s);
  const Point2& pa = mesh.point(s.a);
  const Point2& pb = mesh.point(s.b);

  // Find the triangle of a's fan whose angle at a contains the direction to b.
  TriangleId start = kBoundary;
  VertexId right = 0;  // crossed edge endpoint right of a -> b
  VertexId left = 0;   // crossed edge endpoint left of a -> b
  for (TriangleId t : mesh.incident(s.a)) {
    const VertexTriple& tv = mesh.triangle(t);
    const int i = tv[0] == s.a ? 0 : (tv[1] == s.a ? 1 : 2);
    const VertexId p = tv[(i + 1) % 3];
    const VertexId q = tv[(i + 2) % 3];
    if (p == s.b || q == s.b) {
      throw Error(ErrorCode::InvalidArgument, "segment " + seg_str(s) + " is already an edge");
    }
    const Orientation op = orient2d(pa, pb, mesh.point(p));
    const Orientation oq = orient2d(pa, pb, mesh.point(q));
    if (op == Orientation::Collinear && strictly_between(mesh.point(p), pa, pb)) {
      through_vertex(p, s);
    }
    if (oq == Orientation::Collinear && strictly_between(mesh.point(q), pa, pb)) {
      through_vertex(q, s);
    }
    if (op == Orientation::CW && oq == Orientation::CCW) {
      start = t;
      right = p;
      left = q;
      break;
    }
  }
  if (start == kBoundary) {
    throw Error(ErrorCode::SegmentOutsideMesh,
                "segment " + seg_str(s) + " leaves the mesh at its first endpoint");
  }

  std::vector<TriangleId> out{start};
  TriangleId t = start;
  for (;;) {
    if (mesh.is_constrained(right, left)) {
      throw Error(ErrorCode::SegmentCrossesConstraint,
                  "segment " + seg_str(s) + " crosses constrained edge (" +
                      std::to_string(right) + ", " + std::to_string(left) + ")");
    }
    const int slot = slot_of(mesh.triangle(t), right, left);
    if (slot < 0) {
      throw Error(ErrorCode::InconsistentBoundary, "walk lost track of the crossed edge");
    }
    const TriangleId n = mesh.neighbor(t, slot);
    if (n == kBoundary) {
      throw Error(ErrorCode::SegmentOutsideMesh,
                  "segment " + seg_str(s) + " leaves the mesh through boundary edge (" +
                      std::to_string(right) + ", " + std::to_string(left) + ")");
    }
    out.push_back(n);
    const VertexTriple& nv = mesh.triangle(n);
    const int k = slot_of(nv, left, right);
    if (k < 0) throw Error(ErrorCode::InconsistentBoundary, "asymmetric adjacency in walk");
    const VertexId w = nv[(k + 2) % 3];
    if (w == s.b) return out;

    const Orientation ow = orient2d(pa, pb, mesh.point(w));
    if (ow == Orientation::Collinear) {
      if (strictly_between(mesh.point(w), pa, pb)) through_vertex(w, s);
      throw Error(ErrorCode::InconsistentBoundary,
                  "walk met a collinear vertex beyond the segment end");
    }
    if (ow == Orientation::CW) {
      right = w;
    } else {
      left = w;
    }
    t = n;
  }
}

PocketPair extract_pockets(const TriMesh& mesh, std::span<const TriangleId> intersected,
                           SegmentConstraint s) {
  check_ids(mesh, s);
  if (intersected.empty()) {
    throw Error(ErrorCode::InconsistentBoundary, "extract_pockets: no intersected triangles");
  }
  auto contains = [&](TriangleId t, VertexId v) {
    const VertexTriple& tv = mesh.triangle(t);
    return tv[0] == v || tv[1] == v || tv[2] == v;
  };
  if (!contains(intersected.front(), s.a) || !contains(intersected.back(), s.b)) {
    throw Error(ErrorCode::InconsistentBoundary,
                "extract_pockets: strip does not start at a and end at b");
  }

  const Point2& pa = mesh.point(s.a);
  const Point2& pb = mesh.point(s.b);
  std::vector<VertexId> upper{s.a};
  std::vector<VertexId> lower{s.a};
  for (std::size_t i = 0; i + 1 < intersected.size(); ++i) {
    const TriangleId t = intersected[i];
    const TriangleId u = intersected[i + 1];
    int slot = -1;
    for (int k = 0; k < 3; ++k) {
      if (mesh.neighbor(t, k) == u) slot = k;
    }
    if (slot < 0) {
      throw Error(ErrorCode::InconsistentBoundary,
                  "extract_pockets: consecutive triangles " + std::to_string(t) + " and " +
                      std::to_string(u) + " are not adjacent");
    }
    const VertexId x = mesh.triangle(t)[slot];
    const VertexId y = mesh.triangle(t)[(slot + 1) % 3];
    const Orientation ox = orient2d(pa, pb, mesh.point(x));
    const Orientation oy = orient2d(pa, pb, mesh.point(y));
    VertexId up, lo;
    if (ox == Orientation::CCW && oy == Orientation::CW) {
      up = x;
      lo = y;
    } else if (ox == Orientation::CW && oy == Orientation::CCW) {
      up = y;
      lo = x;
    } else {
      throw Error(ErrorCode::InconsistentBoundary,
                  "extract_pockets: shared edge (" + std::to_string(x) + ", " +
                      std::to_string(y) + ") is not crossed by the segment");
    }
    if (upper.back() != up) upper.push_back(up);
    if (lower.back() != lo) lower.push_back(lo);
  }
  upper.push_back(s.b);
  lower.push_back(s.b);

  auto make = [&](std::vector<VertexId> ids) {
    PocketPolygon poly;
    poly.points.reserve(ids.size());
    for (VertexId v : ids) poly.points.push_back(mesh.point(v));
    poly.sources = std::move(ids);
    return poly;
  };
  std::reverse(upper.begin(), upper.end());
  return {make(std::move(upper)), make(std::move(lower))};
}

InsertionStats insert_segment(TriMesh& mesh, SegmentConstraint s) {
  InsertionStats stats;
  std::vector<SegmentConstraint> pending{s};
  while (!pending.empty()) {
    const SegmentConstraint cur = pending.back();
    pending.pop_back();
    check_ids(mesh, cur);

    if (mesh.edge_exists(cur.a, cur.b)) {
      mesh.mark_constraint(cur.a, cur.b);
      ++stats.pieces;
      continue;
    }

    std::vector<TriangleId> crossed;
    try {
      crossed = collect_intersected(mesh, cur);
    } catch (const SegmentThroughVertex& hit) {
      pending.push_back({hit.vertex(), cur.b});
      pending.push_back({cur.a, hit.vertex()});
      continue;
    }

    const PocketPair pockets = extract_pockets(mesh, crossed, cur);
    std::vector<VertexTriple> fill;
    fill.reserve(pockets.upper.size() + pockets.lower.size() - 4);
    for (const PocketPolygon* poly : {&pockets.upper, &pockets.lower}) {
      for (const ChainTriangle& t : linear_earcut(*poly)) {
        fill.push_back({poly->sources[t[0]], poly->sources[t[1]], poly->sources[t[2]]});
      }
    }

    std::vector<VertexTriple> removed;
    removed.reserve(crossed.size());
    for (TriangleId t : crossed) removed.push_back(mesh.triangle(t));
    mesh.remove_triangles(crossed);
    try {
      mesh.add_triangles(fill);
    } catch (...) {
      mesh.add_triangles(removed);
      throw;
    }
    mesh.mark_constraint(cur.a, cur.b);
    stats.removed += crossed.size();
    stats.added += fill.size();
    ++stats.pieces;
  }
  return stats;
}

}  // namespace lincut
