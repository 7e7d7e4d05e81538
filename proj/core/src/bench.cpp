#include "lincut/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

#include "lincut/error.hpp"
#include "lincut/generators.hpp"
#include "lincut/mesh_io.hpp"

namespace lincut {

std::string_view to_string(Engine e) noexcept {
  return e == Engine::Linear ? "linear" : "classic";
}

std::string_view to_string(Shape s) noexcept {
  return s == Shape::Collinear ? "collinear" : "random";
}

PocketPolygon make_bench_polygon(Shape shape, std::size_t n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "benchmark polygons need n >= 3");
  return shape == Shape::Collinear ? gen_collinear_fan(n - 2) : gen_random_top(n - 2, seed);
}

std::vector<ChainTriangle> run_engine(Engine engine, const PocketPolygon& poly,
                                      EarcutStats* stats) {
  return engine == Engine::Linear ? linear_earcut(poly, stats) : classic_earcut(poly, stats);
}

std::vector<BenchRecord> bench(Engine engine, Shape shape, std::span<const std::size_t> sizes,
                               std::size_t reps, std::uint64_t seed) {
  if (sizes.empty()) throw Error(ErrorCode::InvalidArgument, "bench: no sizes given");
  if (reps == 0) throw Error(ErrorCode::InvalidArgument, "bench: reps must be at least 1");

  using Clock = std::chrono::steady_clock;
  std::vector<PocketPolygon> polys;
  std::vector<BenchRecord> records;
  polys.reserve(sizes.size());
  records.reserve(sizes.size());
  for (std::size_t n : sizes) {
    polys.push_back(make_bench_polygon(shape, n, seed));
    EarcutStats stats;
    const std::vector<ChainTriangle> tris = run_engine(engine, polys.back(), &stats);
    const ValidationReport report = validate_triangulation(polys.back(), tris);
    if (!report) {
      throw Error(ErrorCode::InvalidPolygon,
                  "bench: invalid triangulation for n = " + std::to_string(n) + ": " +
                      report.message);
    }
    records.push_back({engine, shape, n, reps, 0.0, std::numeric_limits<double>::infinity(),
                       stats.orient_calls});
  }

  // Repetitions sweep over all sizes in turn, so a slow stretch of wall
  // time affects every size alike instead of one size's whole block.
  for (std::size_t r = 0; r < reps; ++r) {
    for (std::size_t k = 0; k < polys.size(); ++k) {
      const auto t0 = Clock::now();
      const std::vector<ChainTriangle> tris = run_engine(engine, polys[k]);
      const auto t1 = Clock::now();
      const double s = std::chrono::duration<double>(t1 - t0).count();
      records[k].mean_s += s;
      records[k].min_s = std::min(records[k].min_s, s);
    }
  }
  for (BenchRecord& rec : records) rec.mean_s /= static_cast<double>(reps);
  return records;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "engine,shape,n,reps,mean_s,min_s,predicate_calls\n";
  for (const BenchRecord& r : records) {
    out << to_string(r.engine) << ',' << to_string(r.shape) << ',' << r.n << ',' << r.reps
        << ',' << format_double(r.mean_s) << ',' << format_double(r.min_s) << ','
        << r.predicate_calls << '\n';
  }
}

double loglog_slope(std::span<const BenchRecord> records) {
  if (records.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "loglog_slope: need at least two records");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchRecord& r : records) {
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(std::max(r.min_s, 1e-12));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(records.size());
  const double denom = k * sxx - sx * sx;
  if (denom == 0.0) throw Error(ErrorCode::InvalidArgument, "loglog_slope: all n are equal");
  return (k * sxy - sx * sy) / denom;
}

}  // namespace lincut
