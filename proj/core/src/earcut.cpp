#include "lincut/earcut.hpp"

#include <numeric>
#include <unordered_map>

#include "lincut/error.hpp"
#include "lincut/exact.hpp"

namespace lincut {

PocketPolygon PocketPolygon::from_points(std::vector<Point2> points) {
  PocketPolygon poly;
  poly.sources.resize(points.size());
  std::iota(poly.sources.begin(), poly.sources.end(), VertexId{0});
  poly.points = std::move(points);
  return poly;
}

EarcutState::EarcutState(std::size_t n) : storage_(5 * n, 0) {
  const auto it = storage_.begin();
  prev = {it, n};
  next = {it + n, n};
  queue = {it + 2 * n, n};
  in_queue = {it + 3 * n, n};
  alive = {it + 4 * n, n};
  const auto m = static_cast<std::uint32_t>(n);
  for (std::uint32_t i = 0; i < m; ++i) {
    prev[i] = i - 1;
    next[i] = i + 1;
    alive[i] = 1;
  }
  if (m > 0) {
    prev[0] = m - 1;
    next[m - 1] = 0;
  }
}

bool is_convex(const EarcutState& state, const PocketPolygon& poly, std::uint32_t i) {
  const auto& p = poly.points;
  return orient2d(p[state.prev[i]], p[i], p[state.next[i]]) == Orientation::CCW;
}

namespace {

void require_polygon(const PocketPolygon& poly, const char* who) {
  if (poly.size() < 3) {
    throw Error(ErrorCode::InvalidPolygon,
                std::string(who) + ": polygon needs at least 3 vertices");
  }
  if (poly.sources.size() != poly.points.size()) {
    throw Error(ErrorCode::InvalidPolygon,
                std::string(who) + ": sources and points differ in length");
  }
}

}  // namespace

std::vector<ChainTriangle> linear_earcut(const PocketPolygon& poly, EarcutStats* stats) {
  require_polygon(poly, "linear_earcut");
  const auto n = static_cast<std::uint32_t>(poly.size());
  const std::uint32_t first = 0;
  const std::uint32_t last = n - 1;

  EarcutState st(n);
  std::size_t calls = 0;

  for (std::uint32_t i = 1; i < last; ++i) {
    ++calls;
    if (is_convex(st, poly, i)) st.push(i);
  }

  std::vector<ChainTriangle> out;
  out.reserve(n - 2);
  while (!st.empty()) {
    const std::uint32_t v = st.pop();
    const std::uint32_t p = st.prev[v];
    const std::uint32_t q = st.next[v];
#ifndef NDEBUG
    // Debug-only re-check, not counted in stats. It can only fail for
    // polygons outside the supported class.
    if (!is_convex(st, poly, v)) {
      throw Error(ErrorCode::EarQueueExhausted,
                  "linear_earcut: queued position " + std::to_string(v) +
                      " lost convexity; the polygon is not weakly visible from its base segment");
    }
#endif
    out.push_back({p, v, q});
    st.unlink(v);

    if (!st.in_queue[p] && p != first && p != last) {
      ++calls;
      if (is_convex(st, poly, p)) st.push(p);
    }
    if (!st.in_queue[q] && q != first && q != last) {
      ++calls;
      if (is_convex(st, poly, q)) st.push(q);
    }
  }

  if (stats) stats->orient_calls += calls;
  if (out.size() != n - 2) {
    throw Error(ErrorCode::EarQueueExhausted,
                "linear_earcut: no internal ear left after " + std::to_string(out.size()) +
                    " of " + std::to_string(n - 2) +
                    " cuts; the polygon is not weakly visible from its base segment");
  }
  return out;
}

std::vector<ChainTriangle> classic_earcut(const PocketPolygon& poly, EarcutStats* stats) {
  require_polygon(poly, "classic_earcut");
  const auto n = static_cast<std::uint32_t>(poly.size());
  const auto& pts = poly.points;

  EarcutState st(n);
  std::vector<std::uint8_t> convex(n, 0);
  std::vector<std::uint8_t> ear(n, 0);
  std::size_t calls = 0;

  auto update_convex = [&](std::uint32_t i) {
    ++calls;
    convex[i] = is_convex(st, poly, i) ? 1 : 0;
  };

  // Diagonal test: no other alive non-convex vertex in the closed ear
  // triangle, except copies of the corners themselves.
  auto update_ear = [&](std::uint32_t i) {
    ear[i] = 0;
    if (!convex[i]) return;
    const std::uint32_t p = st.prev[i];
    const std::uint32_t q = st.next[i];
    const Point2& a = pts[p];
    const Point2& b = pts[i];
    const Point2& c = pts[q];
    for (std::uint32_t j = st.next[q]; j != p; j = st.next[j]) {
      if (convex[j]) continue;
      const Point2& x = pts[j];
      if (x == a || x == b || x == c) continue;
      ++calls;
      if (orient2d(a, b, x) == Orientation::CW) continue;
      ++calls;
      if (orient2d(b, c, x) == Orientation::CW) continue;
      ++calls;
      if (orient2d(c, a, x) != Orientation::CW) return;
    }
    ear[i] = 1;
  };

  for (std::uint32_t i = 0; i < n; ++i) update_convex(i);
  for (std::uint32_t i = 0; i < n; ++i) update_ear(i);

  std::vector<ChainTriangle> out;
  out.reserve(n - 2);
  std::uint32_t lowest = 0;
  std::uint32_t remaining = n;
  while (remaining > 3) {
    // Positions increase along next from the lowest alive one.
    std::uint32_t v = lowest;
    bool found = false;
    for (std::uint32_t k = 0; k < remaining; ++k, v = st.next[v]) {
      if (ear[v]) {
        found = true;
        break;
      }
    }
    if (!found) {
      if (stats) stats->orient_calls += calls;
      throw Error(ErrorCode::NoEarFound,
                  "classic_earcut: no ear among " + std::to_string(remaining) +
                      " remaining vertices; the polygon is not simple");
    }
    const std::uint32_t p = st.prev[v];
    const std::uint32_t q = st.next[v];
    out.push_back({p, v, q});
    st.unlink(v);
    --remaining;
    if (v == lowest) lowest = q;
    update_convex(p);
    update_convex(q);
    update_ear(p);
    update_ear(q);
  }

  // Last three vertices: the remaining triangle must itself be CCW.
  const std::uint32_t p = st.prev[lowest];
  const std::uint32_t q = st.next[lowest];
  ++calls;
  if (stats) stats->orient_calls += calls;
  if (orient2d(pts[p], pts[lowest], pts[q]) != Orientation::CCW) {
    throw Error(ErrorCode::NoEarFound,
                "classic_earcut: final triangle is degenerate; the polygon is not simple");
  }
  out.push_back({p, lowest, q});
  return out;
}

ValidationReport validate_triangulation(const PocketPolygon& poly,
                                        std::span<const ChainTriangle> tris) {
  auto fail = [](int check, std::string msg) {
    return ValidationReport{false, check, std::move(msg)};
  };
  const std::size_t n = poly.size();
  if (n < 3) return fail(1, "polygon has fewer than 3 vertices");
  if (tris.size() != n - 2) {
    return fail(1, "expected " + std::to_string(n - 2) + " triangles, got " +
                       std::to_string(tris.size()));
  }

  for (std::size_t k = 0; k < tris.size(); ++k) {
    const ChainTriangle& t = tris[k];
    if (t[0] >= n || t[1] >= n || t[2] >= n || t[0] == t[1] || t[1] == t[2] ||
        t[0] == t[2]) {
      return fail(2, "triangle " + std::to_string(k) + " has invalid positions");
    }
    if (orient2d(poly.points[t[0]], poly.points[t[1]], poly.points[t[2]]) !=
        Orientation::CCW) {
      return fail(2, "triangle " + std::to_string(k) + " is not strictly CCW");
    }
  }

  ExactSum covered;
  for (const ChainTriangle& t : tris) {
    covered.add(twice_signed_area(poly.points[t[0]], poly.points[t[1]], poly.points[t[2]]));
  }
  if (compare(covered, twice_signed_area(poly.points)) != 0) {
    return fail(3, "triangle areas do not sum to the polygon area");
  }

  auto key = [](std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  std::unordered_map<std::uint64_t, int> count;
  count.reserve(tris.size() * 3);
  for (const ChainTriangle& t : tris) {
    for (int s = 0; s < 3; ++s) ++count[key(t[s], t[(s + 1) % 3])];
  }
  auto get = [&](std::uint32_t a, std::uint32_t b) {
    const auto it = count.find(key(a, b));
    return it == count.end() ? 0 : it->second;
  };

  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t j = static_cast<std::uint32_t>((i + 1) % n);
    if (get(i, j) != 1 || get(j, i) != 0) {
      return fail(4, "boundary edge (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") is not covered exactly once");
    }
  }

  for (const auto& [k, c] : count) {
    const auto a = static_cast<std::uint32_t>(k >> 32);
    const auto b = static_cast<std::uint32_t>(k & 0xffffffffu);
    const bool chain = (b == (a + 1) % n) || (a == (b + 1) % n);
    if (chain) continue;
    if (c != 1 || get(b, a) != 1) {
      return fail(5, "interior edge (" + std::to_string(a) + ", " + std::to_string(b) +
                         ") is not shared by exactly two oppositely oriented triangles");
    }
  }
  return {};
}

PocketAudit audit_pocket(const PocketPolygon& poly) {
  PocketAudit r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.message = std::move(msg);
    return r;
  };
  const std::size_t n = poly.size();
  if (n < 3) return fail("fewer than 3 vertices");
  if (poly.sources.size() != n) return fail("sources and points differ in length");
  if (twice_signed_area(poly.points).sign() <= 0) return fail("chain is not counterclockwise");

  const auto& p = poly.points;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = p[(i + n - 1) % n];
    const Point2& c = p[(i + 1) % n];
    if (orient2d(a, p[i], c) == Orientation::CCW) ++r.convex_vertices;
  }
  if (orient2d(p[n - 1], p[0], p[1]) != Orientation::CCW) {
    return fail("segment endpoint at position 0 is not strictly convex");
  }
  if (orient2d(p[n - 2], p[n - 1], p[0]) != Orientation::CCW) {
    return fail("segment endpoint at position n-1 is not strictly convex");
  }
  if (r.convex_vertices < 3) {
    return fail("only " + std::to_string(r.convex_vertices) + " strictly convex vertices");
  }
  return r;
}

}  // namespace lincut
