#include "lincut/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "lincut/error.hpp"
#include "lincut/segment_insertion.hpp"

namespace lincut {

namespace {

struct Location {
  enum class Kind { Inside, OnEdge, Outside } kind;
  TriangleId tri;
  int slot;  // edge for OnEdge / Outside
};

// xorshift64*; only used to randomize the walk's edge order.
class WalkRng {
 public:
  std::uint32_t next() noexcept {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return static_cast<std::uint32_t>((state_ * 2685821657736338717ull) >> 32);
  }

 private:
  std::uint64_t state_ = 0x9e3779b97f4a7c15ull;
};

class Inserter {
 public:
  explicit Inserter(TriMesh& mesh) : mesh_(mesh) {}

  void insert(VertexId v, TriangleId& hint) {
    const Location loc = locate(mesh_.point(v), hint);
    std::vector<TriangleId> gone;
    std::vector<VertexTriple> fresh;
    const VertexTriple tv = mesh_.triangle(loc.tri);
    switch (loc.kind) {
      case Location::Kind::Inside:
        gone = {loc.tri};
        fresh = {{tv[0], tv[1], v}, {tv[1], tv[2], v}, {tv[2], tv[0], v}};
        break;
      case Location::Kind::OnEdge: {
        const VertexId a = tv[loc.slot];
        const VertexId b = tv[(loc.slot + 1) % 3];
        const VertexId c = tv[(loc.slot + 2) % 3];
        gone = {loc.tri};
        fresh = {{a, v, c}, {v, b, c}};
        const TriangleId n = mesh_.neighbor(loc.tri, loc.slot);
        if (n != kBoundary) {
          const VertexTriple& nv = mesh_.triangle(n);
          VertexId d = nv[0];
          for (VertexId x : nv) {
            if (x != a && x != b) d = x;
          }
          gone.push_back(n);
          fresh.push_back({b, v, d});
          fresh.push_back({v, a, d});
        }
        break;
      }
      case Location::Kind::Outside:
        for (const auto& [a, b] : visible_hull_edges(mesh_.point(v), loc)) {
          fresh.push_back({b, a, v});
        }
        break;
    }
    mesh_.remove_triangles(gone);
    hint = mesh_.add_triangles(fresh).front();
  }

 private:
  Location locate(const Point2& p, TriangleId start) {
    TriangleId t = start;
    TriangleId came_from = kBoundary;
    const std::size_t max_steps = 4 * mesh_.alive_count() + 64;
    for (std::size_t step = 0; step < max_steps; ++step) {
      const VertexTriple& tv = mesh_.triangle(t);
      const std::uint32_t r = rng_.next() % 3;
      bool moved = false;
      for (int j = 0; j < 3; ++j) {
        const int s = static_cast<int>((r + j) % 3);
        const TriangleId n = mesh_.neighbor(t, s);
        if (n != kBoundary && n == came_from) continue;
        if (orient2d(mesh_.point(tv[s]), mesh_.point(tv[(s + 1) % 3]), p) == Orientation::CW) {
          if (n == kBoundary) return {Location::Kind::Outside, t, s};
          came_from = t;
          t = n;
          moved = true;
          break;
        }
      }
      if (!moved) return classify(p, t);
    }
    // The stochastic walk is only expected to terminate; fall back to a scan.
    for (TriangleId u : mesh_.alive_triangles()) {
      const VertexTriple& tv = mesh_.triangle(u);
      bool inside = true;
      for (int s = 0; s < 3 && inside; ++s) {
        const Orientation o = orient2d(mesh_.point(tv[s]), mesh_.point(tv[(s + 1) % 3]), p);
        if (o == Orientation::CW) {
          inside = false;
          if (mesh_.neighbor(u, s) == kBoundary) return {Location::Kind::Outside, u, s};
        }
      }
      if (inside) return classify(p, u);
    }
    throw Error(ErrorCode::InconsistentBoundary, "point location failed");
  }

  Location classify(const Point2& p, TriangleId t) const {
    const VertexTriple& tv = mesh_.triangle(t);
    int zeros = 0;
    int zero_slot = 0;
    for (int s = 0; s < 3; ++s) {
      const Orientation o = orient2d(mesh_.point(tv[s]), mesh_.point(tv[(s + 1) % 3]), p);
      if (o == Orientation::Collinear) {
        ++zeros;
        zero_slot = s;
      }
    }
    if (zeros == 0) return {Location::Kind::Inside, t, 0};
    if (zeros == 1) return {Location::Kind::OnEdge, t, zero_slot};
    throw Error(ErrorCode::DuplicatePoints, "point coincides with an existing vertex");
  }

  // Boundary half-edge leaving / entering v (hull vertices have exactly one each).
  std::optional<HalfEdge> boundary_from(VertexId v) const {
    for (TriangleId t : mesh_.incident(v)) {
      const VertexTriple& tv = mesh_.triangle(t);
      for (int s = 0; s < 3; ++s) {
        if (tv[s] == v && mesh_.neighbor(t, s) == kBoundary) return HalfEdge{t, s};
      }
    }
    return std::nullopt;
  }
  std::optional<HalfEdge> boundary_into(VertexId v) const {
    for (TriangleId t : mesh_.incident(v)) {
      const VertexTriple& tv = mesh_.triangle(t);
      for (int s = 0; s < 3; ++s) {
        if (tv[(s + 1) % 3] == v && mesh_.neighbor(t, s) == kBoundary) return HalfEdge{t, s};
      }
    }
    return std::nullopt;
  }

  std::vector<std::array<VertexId, 2>> visible_hull_edges(const Point2& p, const Location& loc) {
    auto ends = [&](const HalfEdge& h) {
      const VertexTriple& tv = mesh_.triangle(h.tri);
      return std::array<VertexId, 2>{tv[h.slot], tv[(h.slot + 1) % 3]};
    };
    auto visible = [&](const std::array<VertexId, 2>& e) {
      return orient2d(mesh_.point(e[0]), mesh_.point(e[1]), p) == Orientation::CW;
    };
    const auto first = ends(HalfEdge{loc.tri, loc.slot});
    std::vector<std::array<VertexId, 2>> before;
    std::vector<std::array<VertexId, 2>> after;
    for (auto e = first;;) {
      const auto h = boundary_into(e[0]);
      if (!h) break;
      e = ends(*h);
      if (e == first || !visible(e)) break;
      before.push_back(e);
    }
    for (auto e = first;;) {
      const auto h = boundary_from(e[1]);
      if (!h) break;
      e = ends(*h);
      if (e == first || !visible(e)) break;
      after.push_back(e);
    }
    std::vector<std::array<VertexId, 2>> out(before.rbegin(), before.rend());
    out.push_back(first);
    out.insert(out.end(), after.begin(), after.end());
    return out;
  }

  TriMesh& mesh_;
  WalkRng rng_;
};

}  // namespace

TriMesh triangulate_points(std::span<const Point2> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewPoints,
                "triangulate_points: need at least 3 points, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw Error(ErrorCode::InvalidArgument,
                  "triangulate_points: point " + std::to_string(i) + " is not finite");
    }
  }
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return lex_less(points[a], points[b]); });
  for (std::size_t i = 1; i < n; ++i) {
    if (points[order[i]] == points[order[i - 1]]) {
      throw Error(ErrorCode::DuplicatePoints,
                  "triangulate_points: points " + std::to_string(order[i - 1]) + " and " +
                      std::to_string(order[i]) + " coincide");
    }
  }

  VertexId third = 0;
  for (VertexId k = 2; k < n; ++k) {
    if (orient2d(points[0], points[1], points[k]) != Orientation::Collinear) {
      third = k;
      break;
    }
  }
  if (third == 0) {
    throw Error(ErrorCode::CollinearPoints, "triangulate_points: all points are collinear");
  }

  const VertexTriple seed{0, 1, third};
  TriMesh mesh = TriMesh::from_triangles(std::vector<Point2>(points.begin(), points.end()),
                                         std::span<const VertexTriple>(&seed, 1));
  Inserter inserter(mesh);
  TriangleId hint = 0;
  for (VertexId v = 2; v < n; ++v) {
    if (v != third) inserter.insert(v, hint);
  }
  mesh.compact();
  return mesh;
}

void check_problem(const ProblemInput& input) {
  const std::size_t n = input.points.size();
  for (std::size_t i = 0; i < input.segments.size(); ++i) {
    const auto [a, b] = input.segments[i];
    if (a >= n || b >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "segment " + std::to_string(i) + " references a missing point");
    }
    if (a == b || input.points[a] == input.points[b]) {
      throw Error(ErrorCode::DegenerateSegment,
                  "segment " + std::to_string(i) + " has zero length");
    }
  }
  for (std::size_t i = 0; i < input.segments.size(); ++i) {
    const auto [a, b] = input.segments[i];
    for (std::size_t j = i + 1; j < input.segments.size(); ++j) {
      const auto [c, d] = input.segments[j];
      if (segment_crossing(input.points[a], input.points[b], input.points[c],
                           input.points[d]) == Crossing::Proper) {
        throw Error(ErrorCode::CrossingSegments,
                    "segments " + std::to_string(i) + " and " + std::to_string(j) +
                        " cross; split them at their intersection first");
      }
    }
  }
}

TriMesh build_constrained(const ProblemInput& input) {
  check_problem(input);
  TriMesh mesh = triangulate_points(input.points);
  for (const auto& [a, b] : input.segments) insert_segment(mesh, {a, b});
  mesh.compact();
  return mesh;
}

bool segment_covered(const TriMesh& mesh, VertexId a, VertexId b) {
  const Point2& pa = mesh.point(a);
  const Point2& pb = mesh.point(b);
  std::vector<VertexId> on;
  for (VertexId v = 0; v < mesh.vertex_count(); ++v) {
    if (on_segment(mesh.point(v), pa, pb)) on.push_back(v);
  }
  const bool forward = lex_less(pa, pb);
  std::sort(on.begin(), on.end(), [&](VertexId u, VertexId v) {
    return forward ? lex_less(mesh.point(u), mesh.point(v))
                   : lex_less(mesh.point(v), mesh.point(u));
  });
  if (on.size() < 2 || on.front() != a || on.back() != b) return false;
  for (std::size_t i = 0; i + 1 < on.size(); ++i) {
    if (!mesh.edge_exists(on[i], on[i + 1]) || !mesh.is_constrained(on[i], on[i + 1])) {
      return false;
    }
  }
  return true;
}

}  // namespace lincut
