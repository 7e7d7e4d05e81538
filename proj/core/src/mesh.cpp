#include "lincut/mesh.hpp"

#include <algorithm>
#include <unordered_map>

#include "lincut/error.hpp"

namespace lincut {

namespace {

std::uint64_t directed_key(VertexId a, VertexId b) noexcept {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::string tri_str(const VertexTriple& t) {
  return "(" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
         std::to_string(t[2]) + ")";
}

}  // namespace

TriMesh TriMesh::from_triangles(std::vector<Point2> points,
                                std::span<const VertexTriple> triangles, bool reorient) {
  TriMesh mesh;
  mesh.points_ = std::move(points);
  const std::size_t nv = mesh.points_.size();
  mesh.incidence_.resize(nv);

  std::unordered_map<std::uint64_t, HalfEdge> half_edges;
  half_edges.reserve(triangles.size() * 3);

  mesh.tris_.reserve(triangles.size());
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    VertexTriple t = triangles[i];
    for (VertexId v : t) {
      if (v >= nv) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "triangle " + std::to_string(i) + " references vertex " +
                        std::to_string(v) + " of " + std::to_string(nv));
      }
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(ErrorCode::DegenerateTriangle,
                  "triangle " + std::to_string(i) + " repeats a vertex " + tri_str(t));
    }
    const Orientation o = orient2d(mesh.points_[t[0]], mesh.points_[t[1]], mesh.points_[t[2]]);
    if (o == Orientation::Collinear) {
      throw Error(ErrorCode::DegenerateTriangle,
                  "triangle " + std::to_string(i) + " has zero area " + tri_str(t));
    }
    if (o == Orientation::CW) {
      if (!reorient) {
        throw Error(ErrorCode::DegenerateTriangle,
                    "orientation: triangle " + std::to_string(i) + " is clockwise " +
                        tri_str(t));
      }
      std::swap(t[1], t[2]);
    }
    const auto id = static_cast<TriangleId>(mesh.tris_.size());
    for (int s = 0; s < 3; ++s) {
      const auto [it, inserted] =
          half_edges.emplace(directed_key(t[s], t[(s + 1) % 3]), HalfEdge{id, s});
      if (!inserted) {
        throw Error(ErrorCode::NonManifoldEdge,
                    "edge (" + std::to_string(t[s]) + ", " + std::to_string(t[(s + 1) % 3]) +
                        ") is used by more than two triangles or by two with the same "
                        "orientation");
      }
    }
    mesh.tris_.push_back(t);
    for (VertexId v : t) mesh.incidence_[v].push_back(id);
  }

  const std::size_t nt = mesh.tris_.size();
  mesh.adj_.assign(nt, {kBoundary, kBoundary, kBoundary});
  mesh.alive_.assign(nt, 1);
  mesh.alive_count_ = nt;
  for (TriangleId t = 0; t < nt; ++t) {
    for (int s = 0; s < 3; ++s) {
      const VertexId a = mesh.tris_[t][s];
      const VertexId b = mesh.tris_[t][(s + 1) % 3];
      const auto it = half_edges.find(directed_key(b, a));
      if (it != half_edges.end()) mesh.adj_[t][s] = it->second.tri;
    }
  }
  return mesh;
}

VertexId TriMesh::add_vertex(const Point2& p) {
  points_.push_back(p);
  incidence_.emplace_back();
  return static_cast<VertexId>(points_.size() - 1);
}

void TriMesh::remove_triangles(std::span<const TriangleId> ids) {
  std::vector<TriangleId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!is_alive(sorted[i]) || (i > 0 && sorted[i] == sorted[i - 1])) {
      throw Error(ErrorCode::DeadTriangle,
                  "remove_triangles: triangle " + std::to_string(sorted[i]) +
                      " is not alive (or listed twice)");
    }
  }

  for (TriangleId t : ids) {
    alive_[t] = 0;
    --alive_count_;
    for (int s = 0; s < 3; ++s) {
      const TriangleId u = adj_[t][s];
      if (u != kBoundary && alive_[u]) {
        for (int k = 0; k < 3; ++k) {
          if (adj_[u][k] == t) adj_[u][k] = kBoundary;
        }
      }
      adj_[t][s] = kBoundary;
      auto& inc = incidence_[tris_[t][s]];
      const auto it = std::find(inc.begin(), inc.end(), t);
      if (it != inc.end()) {
        *it = inc.back();
        inc.pop_back();
      }
    }
  }
}

std::vector<TriangleId> TriMesh::add_triangles(std::span<const VertexTriple> triangles) {
  std::unordered_set<std::uint64_t> batch;
  batch.reserve(triangles.size() * 3);
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const VertexTriple& t = triangles[i];
    for (VertexId v : t) {
      if (v >= points_.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "add_triangles: vertex " + std::to_string(v) + " out of range");
      }
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2] ||
        orient2d(points_[t[0]], points_[t[1]], points_[t[2]]) != Orientation::CCW) {
      throw Error(ErrorCode::DegenerateTriangle,
                  "add_triangles: triangle " + tri_str(t) + " is not strictly CCW");
    }
    for (int s = 0; s < 3; ++s) {
      const VertexId a = t[s];
      const VertexId b = t[(s + 1) % 3];
      if (!batch.insert(directed_key(a, b)).second || find_half_edge(a, b)) {
        throw Error(ErrorCode::NonManifoldEdge,
                    "add_triangles: edge (" + std::to_string(a) + ", " + std::to_string(b) +
                        ") would be shared by more than two triangles");
      }
    }
  }

  std::vector<TriangleId> ids;
  ids.reserve(triangles.size());
  for (const VertexTriple& t : triangles) {
    const auto id = static_cast<TriangleId>(tris_.size());
    tris_.push_back(t);
    adj_.push_back({kBoundary, kBoundary, kBoundary});
    alive_.push_back(1);
    ++alive_count_;
    for (VertexId v : t) incidence_[v].push_back(id);
    ids.push_back(id);
  }
  for (TriangleId id : ids) {
    for (int s = 0; s < 3; ++s) {
      const VertexId a = tris_[id][s];
      const VertexId b = tris_[id][(s + 1) % 3];
      if (const auto twin = find_half_edge(b, a)) {
        adj_[id][s] = twin->tri;
        adj_[twin->tri][twin->slot] = id;
      }
    }
  }
  return ids;
}

std::optional<HalfEdge> TriMesh::find_half_edge(VertexId a, VertexId b) const {
  if (a >= incidence_.size()) return std::nullopt;
  for (TriangleId t : incidence_[a]) {
    const VertexTriple& tv = tris_[t];
    for (int s = 0; s < 3; ++s) {
      if (tv[s] == a && tv[(s + 1) % 3] == b) return HalfEdge{t, s};
    }
  }
  return std::nullopt;
}

bool TriMesh::edge_exists(VertexId a, VertexId b) const {
  return find_half_edge(a, b).has_value() || find_half_edge(b, a).has_value();
}

void TriMesh::mark_constraint(VertexId a, VertexId b) {
  if (!edge_exists(a, b)) {
    throw Error(ErrorCode::InvalidArgument,
                "mark_constraint: (" + std::to_string(a) + ", " + std::to_string(b) +
                    ") is not a mesh edge");
  }
  constraints_.insert(edge_key(a, b));
}

bool TriMesh::is_constrained(VertexId a, VertexId b) const {
  return constraints_.count(edge_key(a, b)) != 0;
}

std::vector<std::array<VertexId, 2>> TriMesh::constraints() const {
  std::vector<std::array<VertexId, 2>> out;
  out.reserve(constraints_.size());
  for (std::uint64_t k : constraints_) {
    out.push_back({static_cast<VertexId>(k >> 32), static_cast<VertexId>(k & 0xffffffffu)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TriangleId> TriMesh::alive_triangles() const {
  std::vector<TriangleId> out;
  out.reserve(alive_count_);
  for (TriangleId t = 0; t < tris_.size(); ++t) {
    if (alive_[t]) out.push_back(t);
  }
  return out;
}

std::vector<VertexTriple> TriMesh::alive_triples() const {
  std::vector<VertexTriple> out;
  out.reserve(alive_count_);
  for (TriangleId t = 0; t < tris_.size(); ++t) {
    if (alive_[t]) out.push_back(tris_[t]);
  }
  return out;
}

void TriMesh::compact() {
  std::vector<TriangleId> remap(tris_.size(), kBoundary);
  TriangleId next = 0;
  for (TriangleId t = 0; t < tris_.size(); ++t) {
    if (alive_[t]) remap[t] = next++;
  }
  std::vector<VertexTriple> tris;
  std::vector<std::array<TriangleId, 3>> adj;
  tris.reserve(next);
  adj.reserve(next);
  for (TriangleId t = 0; t < tris_.size(); ++t) {
    if (!alive_[t]) continue;
    tris.push_back(tris_[t]);
    std::array<TriangleId, 3> a{};
    for (int s = 0; s < 3; ++s) a[s] = adj_[t][s] == kBoundary ? kBoundary : remap[adj_[t][s]];
    adj.push_back(a);
  }
  tris_ = std::move(tris);
  adj_ = std::move(adj);
  alive_.assign(tris_.size(), 1);
  for (auto& inc : incidence_) {
    for (TriangleId& t : inc) t = remap[t];
    std::sort(inc.begin(), inc.end());
  }
}

AuditReport audit(const TriMesh& mesh) {
  auto fail = [](std::string msg) { return AuditReport{false, std::move(msg)}; };
  const std::size_t nv = mesh.vertex_count();

  std::unordered_map<std::uint64_t, HalfEdge> half_edges;
  std::size_t alive = 0;
  for (TriangleId t = 0; t < mesh.triangle_slots(); ++t) {
    if (!mesh.is_alive(t)) continue;
    ++alive;
    const VertexTriple& tv = mesh.triangle(t);
    for (VertexId v : tv) {
      if (v >= nv) return fail("index: triangle " + std::to_string(t) + " vertex out of range");
    }
    if (tv[0] == tv[1] || tv[1] == tv[2] || tv[0] == tv[2]) {
      return fail("index: triangle " + std::to_string(t) + " repeats a vertex");
    }
    if (orient2d(mesh.point(tv[0]), mesh.point(tv[1]), mesh.point(tv[2])) != Orientation::CCW) {
      return fail("orientation: triangle " + std::to_string(t) + " " + tri_str(tv) +
                  " is not strictly CCW");
    }
    for (int s = 0; s < 3; ++s) {
      const auto [it, inserted] =
          half_edges.emplace(directed_key(tv[s], tv[(s + 1) % 3]), HalfEdge{t, s});
      if (!inserted) {
        return fail("manifold: directed edge (" + std::to_string(tv[s]) + ", " +
                    std::to_string(tv[(s + 1) % 3]) + ") appears in triangles " +
                    std::to_string(it->second.tri) + " and " + std::to_string(t));
      }
    }
  }
  if (alive != mesh.alive_count()) return fail("bookkeeping: alive count mismatch");

  for (const auto& [key, he] : half_edges) {
    const auto a = static_cast<VertexId>(key >> 32);
    const auto b = static_cast<VertexId>(key & 0xffffffffu);
    const TriangleId n = mesh.neighbor(he.tri, he.slot);
    const auto twin = half_edges.find(directed_key(b, a));
    if (twin == half_edges.end()) {
      if (n != kBoundary) {
        return fail("adjacency: triangle " + std::to_string(he.tri) +
                    " lists a neighbor across boundary edge (" + std::to_string(a) + ", " +
                    std::to_string(b) + ")");
      }
    } else if (n != twin->second.tri ||
               mesh.neighbor(twin->second.tri, twin->second.slot) != he.tri) {
      return fail("adjacency: asymmetric link across edge (" + std::to_string(a) + ", " +
                  std::to_string(b) + ")");
    }
  }

  std::size_t incidence_entries = 0;
  for (VertexId v = 0; v < nv; ++v) {
    for (TriangleId t : mesh.incident(v)) {
      ++incidence_entries;
      if (!mesh.is_alive(t)) {
        return fail("incidence: vertex " + std::to_string(v) + " lists dead triangle " +
                    std::to_string(t));
      }
      const VertexTriple& tv = mesh.triangle(t);
      if (tv[0] != v && tv[1] != v && tv[2] != v) {
        return fail("incidence: vertex " + std::to_string(v) + " lists triangle " +
                    std::to_string(t) + " that does not contain it");
      }
    }
  }
  if (incidence_entries != 3 * alive) return fail("incidence: entry count mismatch");

  for (const auto& [a, b] : mesh.constraints()) {
    if (half_edges.count(directed_key(a, b)) == 0 && half_edges.count(directed_key(b, a)) == 0) {
      return fail("constraint: (" + std::to_string(a) + ", " + std::to_string(b) +
                  ") is not an edge of an alive triangle");
    }
  }
  return {};
}

EdgeCounts count_edges(const TriMesh& mesh) {
  EdgeCounts c;
  for (TriangleId t = 0; t < mesh.triangle_slots(); ++t) {
    if (!mesh.is_alive(t)) continue;
    const VertexTriple& tv = mesh.triangle(t);
    for (int s = 0; s < 3; ++s) {
      if (mesh.neighbor(t, s) == kBoundary) {
        ++c.boundary;
      } else if (tv[s] < tv[(s + 1) % 3]) {
        ++c.interior;
      }
    }
  }
  return c;
}

}  // namespace lincut
