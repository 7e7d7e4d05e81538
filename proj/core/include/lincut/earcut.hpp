#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lincut/mesh.hpp"
#include "lincut/predicates.hpp"

namespace lincut {

/// A polygon based on a constrained segment.
///
/// Chain positions 0 and n-1 are the segment endpoints; the closed chain
/// (including the closing edge n-1 -> 0) is counterclockwise. Positions are
/// the polygon's own vertex ids and never repeat. `sources` records the mesh
/// vertex each position was taken from: a mesh vertex visited twice along a
/// pocket boundary appears at two positions with equal coordinates.
struct PocketPolygon {
  std::vector<Point2> points;
  std::vector<VertexId> sources;

  std::size_t size() const noexcept { return points.size(); }

  /// Standalone polygon; sources are 0..n-1.
  static PocketPolygon from_points(std::vector<Point2> points);
};

/// Triangle over chain positions, CCW.
using ChainTriangle = std::array<std::uint32_t, 3>;

struct EarcutStats {
  std::size_t orient_calls = 0;
};

/// Doubly linked chain plus the FIFO ear queue. Each position is queued at
/// most once, so the queue is a flat array with a read cursor. All arrays
/// share one allocation; the state is therefore not copyable.
struct EarcutState {
  explicit EarcutState(std::size_t n);
  EarcutState(const EarcutState&) = delete;
  EarcutState& operator=(const EarcutState&) = delete;

  void push(std::uint32_t i) noexcept {
    queue[tail++] = i;
    in_queue[i] = 1;
  }
  bool empty() const noexcept { return head == tail; }
  std::uint32_t pop() noexcept { return queue[head++]; }

  /// O(1) removal of position i from the chain.
  void unlink(std::uint32_t i) noexcept {
    next[prev[i]] = next[i];
    prev[next[i]] = prev[i];
    alive[i] = 0;
  }

 private:
  std::vector<std::uint32_t> storage_;

 public:
  std::span<std::uint32_t> prev;
  std::span<std::uint32_t> next;
  std::span<std::uint32_t> queue;
  std::span<std::uint32_t> in_queue;
  std::span<std::uint32_t> alive;
  std::size_t head = 0;
  std::size_t tail = 0;
};

/// Strict convexity of position i in the current chain (collinear is not convex).
bool is_convex(const EarcutState& state, const PocketPolygon& poly, std::uint32_t i);

/// Linear-time earcut for polygons produced by segment insertion.
///
/// Every strictly convex vertex other than the two segment endpoints is cut
/// as soon as it is dequeued, without a diagonal test; after each cut only
/// the two new neighbors are re-examined. Returns n-2 triangles
/// (prev, v, next) in cut order. At most 3n orientation tests are made.
///
/// The polygon must be weakly visible from its base segment (always true for
/// pockets from extract_pockets); this is not checked. Throws
/// Error(EarQueueExhausted) if the queue runs dry before n-2 cuts, which
/// can only happen for inputs outside that class. Debug builds also throw it
/// when a dequeued position is no longer strictly convex.
std::vector<ChainTriangle> linear_earcut(const PocketPolygon& poly,
                                         EarcutStats* stats = nullptr);

/// Quadratic earcut with the full diagonal test, for arbitrary simple CCW
/// polygons. Scans for the lowest alive position that is an ear; ear status
/// is cached and refreshed only for the neighbors of each cut. Vertices whose
/// coordinates equal an ear corner do not block that ear.
/// Throws Error(NoEarFound) on non-simple input.
std::vector<ChainTriangle> classic_earcut(const PocketPolygon& poly,
                                          EarcutStats* stats = nullptr);

struct ValidationReport {
  bool ok = true;
  int failed_check = 0;  // 1..5, 0 when ok
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks, in order: (1) n-2 triangles; (2) every triangle strictly CCW with
/// in-range distinct positions; (3) triangle areas sum exactly to the
/// polygon area; (4) each chain edge and the closing segment appear exactly
/// once, in chain direction; (5) every other edge appears exactly once in
/// each direction.
ValidationReport validate_triangulation(const PocketPolygon& poly,
                                        std::span<const ChainTriangle> tris);

struct PocketAudit {
  bool ok = true;
  std::string message;
  std::size_t convex_vertices = 0;

  explicit operator bool() const noexcept { return ok; }
};

/// Structural checks for a pocket: n >= 3, matching sources, positive exact
/// area, both segment endpoints strictly convex, and at least three strictly
/// convex vertices overall.
PocketAudit audit_pocket(const PocketPolygon& poly);

}  // namespace lincut
