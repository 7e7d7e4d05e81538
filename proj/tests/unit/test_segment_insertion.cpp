#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "repeated_vertex_fixtures.hpp"
#include "lincut/error.hpp"
#include "lincut/generators.hpp"
#include "lincut/segment_insertion.hpp"
#include "lincut/triangulation.hpp"
#include "rational.hpp"

using namespace lincut;

namespace {

TriMesh square_with_diagonal() {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const std::vector<VertexTriple> tris{{0, 1, 2}, {0, 2, 3}};
  return TriMesh::from_triangles(pts, tris);
}

// (cells+1)^2 vertices, id = row * (cells+1) + col, each cell split by its
// lower-left to upper-right diagonal.
TriMesh grid(int cells) {
  std::vector<Point2> pts;
  for (int r = 0; r <= cells; ++r) {
    for (int c = 0; c <= cells; ++c) pts.push_back({double(c), double(r)});
  }
  std::vector<VertexTriple> tris;
  const auto id = [&](int r, int c) { return static_cast<VertexId>(r * (cells + 1) + c); };
  for (int r = 0; r < cells; ++r) {
    for (int c = 0; c < cells; ++c) {
      tris.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1)});
      tris.push_back({id(r, c), id(r + 1, c + 1), id(r + 1, c)});
    }
  }
  return TriMesh::from_triangles(pts, tris);
}

mpq_class twice_mesh_area(const TriMesh& m) {
  mpq_class s = 0;
  for (const auto& t : m.alive_triples()) {
    s += oracle::twice_area(m.point(t[0]), m.point(t[1]), m.point(t[2]));
  }
  return s;
}

// Brute force: every alive triangle whose interior meets the open segment,
// ordered by the parameter at which the segment enters it.
std::vector<TriangleId> brute_force_crossed(const TriMesh& m, VertexId a, VertexId b) {
  const oracle::QPoint A = oracle::q(m.point(a)), B = oracle::q(m.point(b));
  std::vector<std::pair<mpq_class, TriangleId>> hits;
  for (TriangleId t : m.alive_triangles()) {
    const auto& tv = m.triangle(t);
    std::optional<mpq_class> entry;
    if (tv[0] == a || tv[1] == a || tv[2] == a) entry = 0;
    for (int s = 0; s < 3; ++s) {
      const oracle::QPoint P = oracle::q(m.point(tv[s]));
      const oracle::QPoint Q = oracle::q(m.point(tv[(s + 1) % 3]));
      if (!oracle::proper_cross(A, B, P, Q)) continue;
      const mpq_class t_cross = oracle::cross(P, Q, A) / (oracle::cross(P, Q, A) - oracle::cross(P, Q, B));
      if (!entry || t_cross < *entry) entry = t_cross;
    }
    // A triangle touched only at a or b, not entered, is not crossed.
    if (entry && *entry == 0) {
      bool enters = false;
      for (int s = 0; s < 3; ++s) {
        const oracle::QPoint P = oracle::q(m.point(tv[s]));
        const oracle::QPoint Q = oracle::q(m.point(tv[(s + 1) % 3]));
        if (oracle::proper_cross(A, B, P, Q)) enters = true;
      }
      const bool has_b = tv[0] == b || tv[1] == b || tv[2] == b;
      if (!enters && !has_b) entry.reset();
    }
    if (entry) hits.emplace_back(*entry, t);
  }
  std::sort(hits.begin(), hits.end());
  std::vector<TriangleId> out;
  for (const auto& h : hits) out.push_back(h.second);
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no lincut::Error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(CollectIntersected, SquareOtherDiagonal) {
  const TriMesh m = square_with_diagonal();
  EXPECT_EQ(collect_intersected(m, {1, 3}), (std::vector<TriangleId>{0, 1}));
  EXPECT_EQ(collect_intersected(m, {3, 1}), (std::vector<TriangleId>{1, 0}));
}

TEST(CollectIntersected, ExistingEdgeRejected) {
  const TriMesh m = square_with_diagonal();
  EXPECT_EQ(code_of([&] { collect_intersected(m, {0, 2}); }), ErrorCode::InvalidArgument);
}

TEST(CollectIntersected, GridRowMatchesBruteForce) {
  const TriMesh m = grid(4);
  // Row 0, from (0,0) to (4,1): hits no vertex on the way.
  const auto walk = collect_intersected(m, {0, 9});
  EXPECT_EQ(walk, brute_force_crossed(m, 0, 9));
  EXPECT_EQ(walk.size(), 6u);
  // Several more spans, including ones that cross rows.
  for (auto [a, b] : std::vector<std::pair<VertexId, VertexId>>{
           {5, 14}, {0, 13}, {20, 9}, {24, 5}, {4, 15}, {10, 3}}) {
    EXPECT_EQ(collect_intersected(m, {a, b}), brute_force_crossed(m, a, b)) << a << "-" << b;
  }
}

TEST(CollectIntersected, ThroughVertexReportsIt) {
  const TriMesh m = grid(4);
  try {
    collect_intersected(m, {0, 24});  // main diagonal, first hit is (1,1)
    FAIL();
  } catch (const SegmentThroughVertex& e) {
    EXPECT_EQ(e.vertex(), 6u);
  }
  try {
    collect_intersected(m, {0, 22});  // (0,0) -> (2,4) passes (1,2) = vertex 11
    FAIL();
  } catch (const SegmentThroughVertex& e) {
    EXPECT_EQ(e.vertex(), 11u);
  }
}

TEST(CollectIntersected, LeavesNonConvexMesh) {
  // L-shaped domain; (0,2)-(2,0) leaves through the notch.
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}};
  const std::vector<VertexTriple> tris{{0, 1, 4}, {0, 4, 3}, {1, 2, 5}, {1, 5, 4},
                                       {3, 4, 7}, {3, 7, 6}};
  const TriMesh m = TriMesh::from_triangles(pts, tris);
  EXPECT_EQ(code_of([&] { collect_intersected(m, {7, 5}); }), ErrorCode::SegmentOutsideMesh);
}

TEST(ExtractPockets, SquareGivesTwoTriangles) {
  const TriMesh m = square_with_diagonal();
  const auto crossed = collect_intersected(m, {1, 3});
  const PocketPair p = extract_pockets(m, crossed, {1, 3});
  // (0,0) lies left of (1,0) -> (0,1), (1,1) right of it.
  EXPECT_EQ(p.upper.sources, (std::vector<VertexId>{3, 0, 1}));
  EXPECT_EQ(p.lower.sources, (std::vector<VertexId>{1, 2, 3}));
  EXPECT_TRUE(audit_pocket(p.upper));
  EXPECT_TRUE(audit_pocket(p.lower));
}

class RepeatedVertexPockets : public ::testing::TestWithParam<int> {};

TEST_P(RepeatedVertexPockets, ExtractTriangulateInsert) {
  fixtures::RepeatedVertexCase fx = GetParam() == 0   ? fixtures::dangling_edge()
                                    : GetParam() == 1 ? fixtures::enclosed_triangle()
                                                      : fixtures::combined();
  ASSERT_TRUE(audit(fx.mesh)) << audit(fx.mesh).message;
  const auto crossed = collect_intersected(fx.mesh, fx.segment);
  const PocketPair p = extract_pockets(fx.mesh, crossed, fx.segment);
  EXPECT_EQ(p.upper.sources, fx.upper) << fx.name;
  EXPECT_EQ(p.lower.sources, fx.lower) << fx.name;

  // Some mesh vertex occurs at two chain positions with equal coordinates.
  std::map<VertexId, int> seen;
  for (VertexId v : p.upper.sources) ++seen[v];
  EXPECT_TRUE(std::any_of(seen.begin(), seen.end(), [](auto& kv) { return kv.second == 2; }));

  for (const PocketPolygon* poly : {&p.upper, &p.lower}) {
    EXPECT_TRUE(audit_pocket(*poly)) << audit_pocket(*poly).message;
    const auto tris = linear_earcut(*poly);
    EXPECT_TRUE(validate_triangulation(*poly, tris)) << validate_triangulation(*poly, tris).message;
  }

  const mpq_class area = twice_mesh_area(fx.mesh);
  const std::size_t vertices = fx.mesh.vertex_count();
  const InsertionStats st = insert_segment(fx.mesh, fx.segment);
  EXPECT_EQ(st.removed, crossed.size());
  EXPECT_EQ(st.added, p.upper.size() + p.lower.size() - 4);
  EXPECT_TRUE(audit(fx.mesh)) << audit(fx.mesh).message;
  EXPECT_TRUE(fx.mesh.is_constrained(fx.segment.a, fx.segment.b));
  EXPECT_EQ(twice_mesh_area(fx.mesh), area);
  EXPECT_EQ(fx.mesh.vertex_count(), vertices);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, RepeatedVertexPockets, ::testing::Values(0, 1, 2));

TEST(ExtractPockets, RandomMeshPocketsAreWeaklyVisible) {
  std::mt19937_64 rng(99);
  const auto corpus = gen_random_pockets(60, 60, 4242);
  ASSERT_EQ(corpus.size(), 120u);
  for (const PocketPolygon& poly : corpus) {
    ASSERT_TRUE(audit_pocket(poly)) << audit_pocket(poly).message;
    const auto tris = classic_earcut(poly);
    for (int k = 0; k < 10; ++k) {
      // Random rational point strictly inside a random triangle of the pocket.
      const ChainTriangle& t = tris[rng() % tris.size()];
      const long i = static_cast<long>(rng() % 1000) + 1;
      const long j = static_cast<long>(rng() % 1000) + 1;
      const long k2 = static_cast<long>(rng() % 1000) + 1;
      const mpq_class u(i, i + j + k2), v(j, i + j + k2), w(k2, i + j + k2);
      const auto A = oracle::q(poly.points[t[0]]);
      const auto B = oracle::q(poly.points[t[1]]);
      const auto C = oracle::q(poly.points[t[2]]);
      const oracle::QPoint p{u * A.x + v * B.x + w * C.x, u * A.y + v * B.y + w * C.y};
      EXPECT_TRUE(oracle::sees_base(poly.points, p));
    }
  }
}

TEST(InsertSegment, SquareOtherDiagonal) {
  TriMesh m = square_with_diagonal();
  const InsertionStats st = insert_segment(m, {1, 3});
  EXPECT_EQ(st.removed, 2u);
  EXPECT_EQ(st.added, 2u);
  EXPECT_TRUE(m.edge_exists(1, 3));
  EXPECT_TRUE(m.is_constrained(1, 3));
  EXPECT_FALSE(m.edge_exists(0, 2));
  EXPECT_TRUE(audit(m));
}

TEST(InsertSegment, ExistingEdgeOnlyMarked) {
  TriMesh m = square_with_diagonal();
  const auto before = m.alive_triples();
  const InsertionStats st = insert_segment(m, {2, 0});
  EXPECT_EQ(st.removed, 0u);
  EXPECT_EQ(m.alive_triples(), before);
  EXPECT_TRUE(m.is_constrained(0, 2));
}

TEST(InsertSegment, ThroughGridVertexSplits) {
  TriMesh m = grid(4);
  const InsertionStats st = insert_segment(m, {0, 22});  // through vertex 11
  EXPECT_EQ(st.pieces, 2u);
  EXPECT_TRUE(m.is_constrained(0, 11));
  EXPECT_TRUE(m.is_constrained(11, 22));
  EXPECT_FALSE(m.is_constrained(0, 22));
  EXPECT_TRUE(segment_covered(m, 0, 22));
  EXPECT_TRUE(audit(m));
}

TEST(InsertSegment, CollinearOverlapWithConstraintSplitsAtItsEnds) {
  TriMesh m = grid(4);
  insert_segment(m, {1, 3});  // along the bottom row, existing edges
  EXPECT_TRUE(m.is_constrained(1, 2));
  EXPECT_TRUE(m.is_constrained(2, 3));
  insert_segment(m, {0, 4});
  for (VertexId v = 0; v < 4; ++v) EXPECT_TRUE(m.is_constrained(v, v + 1));
  EXPECT_TRUE(audit(m));
}

TEST(InsertSegment, CrossingConstraintRejectedWithoutMutation) {
  TriMesh m = grid(4);
  insert_segment(m, {0, 9});
  const auto before = m.alive_triples();
  EXPECT_EQ(code_of([&] { insert_segment(m, {5, 3}); }), ErrorCode::SegmentCrossesConstraint);
  EXPECT_EQ(m.alive_triples(), before);
  EXPECT_TRUE(audit(m));
}

TEST(InsertSegment, Idempotent) {
  TriMesh once = grid(4);
  insert_segment(once, {0, 14});
  TriMesh twice = grid(4);
  insert_segment(twice, {0, 14});
  insert_segment(twice, {0, 14});
  EXPECT_EQ(once.alive_triples(), twice.alive_triples());
  EXPECT_EQ(once.constraints(), twice.constraints());
}

TEST(InsertSegment, ConservesAreaExactly) {
  TriMesh m = triangulate_points(gen_random_points(200, 5));
  const mpq_class area = twice_mesh_area(m);
  std::mt19937_64 rng(6);
  int inserted = 0;
  for (int k = 0; k < 40; ++k) {
    const auto a = static_cast<VertexId>(rng() % 200);
    const auto b = static_cast<VertexId>(rng() % 200);
    if (a == b) continue;
    try {
      insert_segment(m, {a, b});
      ++inserted;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::SegmentCrossesConstraint) << e.what();
    }
    ASSERT_EQ(twice_mesh_area(m), area);
    ASSERT_TRUE(audit(m)) << audit(m).message;
  }
  EXPECT_GT(inserted, 5);
}

TEST(InsertSegment, HundredSegmentsIntoThousandPoints) {
  const ProblemInput input = gen_random_problem(1000, 100, 77);
  ASSERT_EQ(input.segments.size(), 100u);
  TriMesh m = triangulate_points(input.points);
  for (const auto& [a, b] : input.segments) insert_segment(m, {a, b});
  EXPECT_TRUE(audit(m)) << audit(m).message;
  for (const auto& [a, b] : input.segments) EXPECT_TRUE(segment_covered(m, a, b));
}

TEST(InsertSegment, RejectsBadIds) {
  TriMesh m = square_with_diagonal();
  EXPECT_EQ(code_of([&] { insert_segment(m, {0, 9}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { insert_segment(m, {1, 1}); }), ErrorCode::DegenerateSegment);
}
