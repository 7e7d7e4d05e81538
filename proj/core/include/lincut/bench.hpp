#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "lincut/earcut.hpp"

namespace lincut {

enum class Engine { Linear, Classic };
enum class Shape { Collinear, Random };

std::string_view to_string(Engine e) noexcept;
std::string_view to_string(Shape s) noexcept;

struct BenchRecord {
  Engine engine = Engine::Linear;
  Shape shape = Shape::Collinear;
  std::size_t n = 0;
  std::size_t reps = 0;
  double mean_s = 0.0;
  double min_s = 0.0;
  std::size_t predicate_calls = 0;  // per run
};

/// Polygon with n vertices (n - 2 top vertices) for the given shape.
PocketPolygon make_bench_polygon(Shape shape, std::size_t n, std::uint64_t seed);

/// Runs the selected engine on a polygon.
std::vector<ChainTriangle> run_engine(Engine engine, const PocketPolygon& poly,
                                      EarcutStats* stats = nullptr);

/// For each n: builds the polygon once, triangulates it `reps` times and
/// records the mean and minimum wall time of one run. Repetitions cycle
/// through the sizes. Generation and validation (one untimed run per size,
/// which also supplies predicate_calls) happen outside the timed region; an
/// invalid triangulation throws Error(InvalidPolygon).
/// Throws Error(InvalidArgument) if sizes is empty, reps is 0 or some n < 3.
std::vector<BenchRecord> bench(Engine engine, Shape shape, std::span<const std::size_t> sizes,
                               std::size_t reps, std::uint64_t seed = 1);

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

/// Least-squares slope of log(min_s) against log(n).
double loglog_slope(std::span<const BenchRecord> records);

}  // namespace lincut
