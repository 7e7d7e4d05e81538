#include "repeated_vertex_fixtures.hpp"

namespace fixtures {

using lincut::Point2;
using lincut::TriMesh;
using lincut::VertexTriple;

RepeatedVertexCase dangling_edge() {
  enum : lincut::VertexId { a, b, x, w, q1, q2 };
  std::vector<Point2> pts{{0, 0}, {4, 0}, {2, 0.5}, {2, 2}, {0.5, -1}, {3.5, -1}};
  const std::vector<VertexTriple> tris{
      {a, q1, w}, {x, w, q1}, {x, q1, q2}, {x, q2, w}, {b, w, q2}};
  return {"dangling edge", TriMesh::from_triangles(pts, tris, false), {a, b},
          {b, w, x, w, a}, {a, q1, q2, b}};
}

RepeatedVertexCase enclosed_triangle() {
  enum : lincut::VertexId { a, r, p, q, b, h1, h2, h3 };
  std::vector<Point2> pts{{-1, 0}, {0, -1}, {2, -1}, {4, -1},
                          {5, 0},  {1.5, 1}, {2.5, 1}, {2, 2}};
  const std::vector<VertexTriple> tris{{h3, a, r},  {h1, h3, r}, {h1, r, p}, {h2, h1, p},
                                       {h2, p, q},  {h3, h2, q}, {h3, q, b}, {h1, h2, h3}};
  return {"enclosed triangle", TriMesh::from_triangles(pts, tris, false), {a, b},
          {b, h3, h2, h1, h3, a}, {a, r, p, q, b}};
}

RepeatedVertexCase combined() {
  enum : lincut::VertexId { a, r, p, q, h1, h2, h3, q1, w, x, q2, b };
  std::vector<Point2> pts{{-1, 0},  {0, -1}, {2, -1}, {4, -1},   {1.5, 1},  {2.5, 1},
                          {2, 2},   {4.5, -1}, {6, 2}, {6, 0.5}, {7.5, -1}, {8, 0}};
  const std::vector<VertexTriple> tris{
      {h3, a, r},  {h1, h3, r},  {h1, r, p}, {h2, h1, p}, {h2, p, q},  {h3, h2, q},
      {h1, h2, h3}, {h3, q, q1}, {h3, q1, w}, {x, w, q1}, {x, q1, q2}, {x, q2, w},
      {b, w, q2}};
  return {"combined", TriMesh::from_triangles(pts, tris, false), {a, b},
          {b, w, x, w, h3, h2, h1, h3, a}, {a, r, p, q, q1, q2, b}};
}

}  // namespace fixtures
