#include "lincut/generators.hpp"

#include <random>
#include <set>
#include <utility>

#include "lincut/error.hpp"
#include "lincut/segment_insertion.hpp"

namespace lincut {

namespace {

// Top-chain x coordinates, from 1 down to 0.
double top_x(std::size_t k, std::size_t m) {
  if (m == 1) return 0.5;
  return 1.0 - static_cast<double>(k) / static_cast<double>(m - 1);
}

void require_top(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "generator needs at least one top vertex");
}

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

PocketPolygon gen_collinear_fan(std::size_t m) {
  require_top(m);
  std::vector<Point2> pts;
  pts.reserve(m + 2);
  pts.push_back({1.0, 0.0});
  for (std::size_t k = 0; k < m; ++k) pts.push_back({top_x(k, m), 1.0});
  pts.push_back({0.0, 0.0});
  return PocketPolygon::from_points(std::move(pts));
}

PocketPolygon gen_random_top(std::size_t m, std::uint64_t seed) {
  require_top(m);
  std::mt19937_64 rng(seed);
  std::vector<Point2> pts;
  pts.reserve(m + 2);
  pts.push_back({1.0, 0.0});
  for (std::size_t k = 0; k < m; ++k) pts.push_back({top_x(k, m), 1.0 + 0.5 * unit(rng)});
  pts.push_back({0.0, 0.0});
  return PocketPolygon::from_points(std::move(pts));
}

std::vector<Point2> gen_random_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<double, double>> seen;
  std::vector<Point2> pts;
  pts.reserve(count);
  while (pts.size() < count) {
    const Point2 p{unit(rng), unit(rng)};
    if (seen.insert({p.x, p.y}).second) pts.push_back(p);
  }
  return pts;
}

std::vector<PocketPolygon> gen_random_pockets(std::size_t point_count, std::size_t trials,
                                              std::uint64_t seed) {
  if (point_count < 10) {
    throw Error(ErrorCode::InvalidArgument, "gen_random_pockets: point_count must be >= 10");
  }
  std::mt19937_64 rng(seed);
  std::vector<PocketPolygon> corpus;
  corpus.reserve(2 * trials);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const TriMesh mesh = triangulate_points(gen_random_points(point_count, rng()));
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const auto a = static_cast<VertexId>(rng() % point_count);
      const auto b = static_cast<VertexId>(rng() % point_count);
      if (a == b || mesh.edge_exists(a, b)) continue;
      try {
        const auto crossed = collect_intersected(mesh, {a, b});
        PocketPair pair = extract_pockets(mesh, crossed, {a, b});
        corpus.push_back(std::move(pair.upper));
        corpus.push_back(std::move(pair.lower));
        break;
      } catch (const SegmentThroughVertex&) {
        continue;
      }
    }
  }
  return corpus;
}

ProblemInput gen_random_problem(std::size_t point_count, std::size_t segment_count,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ProblemInput input;
  input.points = gen_random_points(point_count, rng());
  const auto& pts = input.points;
  const std::size_t max_attempts = 50 * segment_count + 100;
  for (std::size_t attempt = 0;
       attempt < max_attempts && input.segments.size() < segment_count; ++attempt) {
    const auto a = static_cast<VertexId>(rng() % point_count);
    const auto b = static_cast<VertexId>(rng() % point_count);
    if (a == b) continue;
    bool ok = true;
    for (const auto& [c, d] : input.segments) {
      if ((a == c && b == d) || (a == d && b == c)) {
        ok = false;
        break;
      }
      const Crossing x = segment_crossing(pts[a], pts[b], pts[c], pts[d]);
      const bool shares_end = a == c || a == d || b == c || b == d;
      if (x == Crossing::Proper || x == Crossing::CollinearOverlap ||
          (x == Crossing::EndpointTouch && !shares_end)) {
        ok = false;
        break;
      }
    }
    if (ok) input.segments.push_back({a, b});
  }
  return input;
}

}  // namespace lincut
