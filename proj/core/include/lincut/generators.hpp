#pragma once

#include <cstdint>
#include <vector>

#include "lincut/earcut.hpp"
#include "lincut/triangulation.hpp"

namespace lincut {

/// Fan test polygon: base (1,0) -> ... -> (0,0) closed by the base segment,
/// with m top vertices on y = 1 running from x = 1 to x = 0 (a single top
/// vertex sits at x = 0.5). n = m + 2 and every interior top vertex is
/// collinear with its neighbors.
PocketPolygon gen_collinear_fan(std::size_t m);

/// Same layout, but each top vertex has y = 1 + u with u uniform in [0, 0.5)
/// from a generator seeded with `seed`.
PocketPolygon gen_random_top(std::size_t m, std::uint64_t seed);

/// `count` points uniform in the unit square; duplicates are redrawn.
std::vector<Point2> gen_random_points(std::size_t count, std::uint64_t seed);

/// Both pockets of one random segment per trial: each trial triangulates
/// fresh random points, draws vertex pairs until one is neither an existing
/// edge nor runs through a vertex, and extracts its pockets. Deterministic
/// per seed.
std::vector<PocketPolygon> gen_random_pockets(std::size_t point_count, std::size_t trials,
                                              std::uint64_t seed);

/// Random points plus up to `segment_count` segments between them that pairwise
/// neither cross properly nor overlap (shared endpoints allowed).
ProblemInput gen_random_problem(std::size_t point_count, std::size_t segment_count,
                                std::uint64_t seed);

}  // namespace lincut
