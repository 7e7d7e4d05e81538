#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "lincut/predicates.hpp"

namespace lincut {

using VertexId = std::uint32_t;
using TriangleId = std::uint32_t;
using VertexTriple = std::array<VertexId, 3>;

inline constexpr TriangleId kBoundary = std::numeric_limits<TriangleId>::max();

/// Directed edge slot: edge `slot` of triangle `tri` runs from
/// v[slot] to v[(slot + 1) % 3].
struct HalfEdge {
  TriangleId tri;
  int slot;
};

/// Indexed triangle mesh with per-edge-slot adjacency, per-vertex incidence
/// and a set of constrained (unordered) edges.
///
/// Triangles are tombstoned on removal, so ids stay stable until compact().
/// Topology is defined by vertex ids only: two vertices may share coordinates.
class TriMesh {
 public:
  TriMesh() = default;

  /// Builds adjacency and incidence. CW triples are flipped to CCW when
  /// `reorient` is set; otherwise they are rejected. Throws on out-of-range
  /// ids, zero-area triangles and edges used by more than two triangles.
  static TriMesh from_triangles(std::vector<Point2> points,
                                std::span<const VertexTriple> triangles,
                                bool reorient = true);

  VertexId add_vertex(const Point2& p);

  /// Tombstones the given alive triangles. Surviving neighbors see the
  /// freed edges as boundary. Validates all ids before mutating.
  void remove_triangles(std::span<const TriangleId> ids);

  /// Appends CCW triangles and links them to alive neighbors. Validates the
  /// whole batch (orientation, manifoldness) before mutating. Returns the
  /// new ids in input order.
  std::vector<TriangleId> add_triangles(std::span<const VertexTriple> triangles);

  bool edge_exists(VertexId a, VertexId b) const;
  /// Alive triangle slot holding the directed edge a -> b, if any.
  std::optional<HalfEdge> find_half_edge(VertexId a, VertexId b) const;

  void mark_constraint(VertexId a, VertexId b);
  bool is_constrained(VertexId a, VertexId b) const;
  std::size_t constraint_count() const noexcept { return constraints_.size(); }
  /// Constrained pairs (min, max), sorted.
  std::vector<std::array<VertexId, 2>> constraints() const;

  std::size_t vertex_count() const noexcept { return points_.size(); }
  /// Number of triangle slots, alive or dead.
  std::size_t triangle_slots() const noexcept { return tris_.size(); }
  std::size_t alive_count() const noexcept { return alive_count_; }

  const Point2& point(VertexId v) const { return points_[v]; }
  std::span<const Point2> points() const noexcept { return points_; }
  const VertexTriple& triangle(TriangleId t) const { return tris_[t]; }
  bool is_alive(TriangleId t) const { return t < alive_.size() && alive_[t] != 0; }
  TriangleId neighbor(TriangleId t, int slot) const { return adj_[t][slot]; }
  std::span<const TriangleId> incident(VertexId v) const { return incidence_[v]; }

  /// Alive triangle ids in increasing order.
  std::vector<TriangleId> alive_triangles() const;
  /// Alive triangles as vertex triples, in id order.
  std::vector<VertexTriple> alive_triples() const;

  /// Drops tombstoned triangles and renumbers the rest (order preserved).
  void compact();

 private:
  static std::uint64_t edge_key(VertexId a, VertexId b) noexcept {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::vector<Point2> points_;
  std::vector<VertexTriple> tris_;
  std::vector<std::array<TriangleId, 3>> adj_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::vector<TriangleId>> incidence_;
  std::unordered_set<std::uint64_t> constraints_;
  std::size_t alive_count_ = 0;
};

struct AuditReport {
  bool ok = true;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

/// Full consistency check: ids and incidence, CCW orientation, adjacency
/// symmetry, one or two triangles per edge (opposite directions), and
/// constrained pairs present as alive edges.
AuditReport audit(const TriMesh& mesh);

/// Undirected edge count of the alive triangles, split by multiplicity.
struct EdgeCounts {
  std::size_t interior = 0;
  std::size_t boundary = 0;
};
EdgeCounts count_edges(const TriMesh& mesh);

}  // namespace lincut
