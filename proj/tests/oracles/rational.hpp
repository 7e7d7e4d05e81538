// Exact rational reference implementations used to cross-check the library.
// Everything here is brute force and independent of lincut's own predicates.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <span>
#include <vector>

#include "lincut/predicates.hpp"

namespace oracle {

struct QPoint {
  mpq_class x, y;
};

inline QPoint q(const lincut::Point2& p) { return {mpq_class(p.x), mpq_class(p.y)}; }

inline int sign(const mpq_class& v) { return sgn(v); }

inline mpq_class cross(const QPoint& a, const QPoint& b, const QPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline int orient(const QPoint& a, const QPoint& b, const QPoint& c) {
  return sign(cross(a, b, c));
}

inline int orient(const lincut::Point2& a, const lincut::Point2& b, const lincut::Point2& c) {
  return orient(q(a), q(b), q(c));
}

/// Twice the signed area of a closed ring.
inline mpq_class twice_area(std::span<const lincut::Point2> ring) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const QPoint a = q(ring[i]);
    const QPoint b = q(ring[(i + 1) % ring.size()]);
    s += a.x * b.y - a.y * b.x;
  }
  return s;
}

inline mpq_class twice_area(const lincut::Point2& a, const lincut::Point2& b,
                            const lincut::Point2& c) {
  return cross(q(a), q(b), q(c));
}

/// Strictly inside a CCW triangle.
inline bool strictly_inside(const QPoint& a, const QPoint& b, const QPoint& c,
                            const QPoint& p) {
  return orient(a, b, p) > 0 && orient(b, c, p) > 0 && orient(c, a, p) > 0;
}

inline bool on_closed_segment(const QPoint& p, const QPoint& a, const QPoint& b) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Closed segments [a,b] and [c,d] share at least one point.
inline bool segments_meet(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_closed_segment(c, a, b) || on_closed_segment(d, a, b) ||
         on_closed_segment(a, c, d) || on_closed_segment(b, c, d);
}

/// Open segments cross at a single interior point of both.
inline bool proper_cross(const QPoint& a, const QPoint& b, const QPoint& c, const QPoint& d) {
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

/// Convex hull corners, CCW (monotone chain; collinear points dropped).
inline std::vector<QPoint> hull(std::span<const lincut::Point2> pts) {
  std::vector<QPoint> p;
  for (const auto& v : pts) p.push_back(q(v));
  std::sort(p.begin(), p.end(), [](const QPoint& a, const QPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<QPoint> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

inline mpq_class twice_hull_area(std::span<const lincut::Point2> pts) {
  const std::vector<QPoint> h = hull(pts);
  mpq_class s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const QPoint& a = h[i];
    const QPoint& b = h[(i + 1) % h.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return s;
}

/// Input points lying on the hull boundary, corners and edge interiors alike.
inline std::size_t hull_boundary_count(std::span<const lincut::Point2> pts) {
  const std::vector<QPoint> h = hull(pts);
  std::size_t count = 0;
  for (const auto& v : pts) {
    const QPoint p = q(v);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (on_closed_segment(p, h[i], h[(i + 1) % h.size()])) {
        ++count;
        break;
      }
    }
  }
  return count;
}

/// Whether interior point p sees some point of the open base segment
/// chain[n-1] -> chain[0] along a segment that touches no chain edge other
/// than the base. Candidate directions are the projections of every chain
/// vertex from p onto the base line plus the midpoints between them.
inline bool sees_base(std::span<const lincut::Point2> chain, const QPoint& p) {
  const std::size_t n = chain.size();
  std::vector<QPoint> c;
  for (const auto& v : chain) c.push_back(q(v));
  const QPoint& s0 = c[n - 1];
  const QPoint& s1 = c[0];
  // Parameter t of the base point hit by the ray p -> v.
  std::vector<mpq_class> ts{0, 1};
  const mpq_class dx = s1.x - s0.x, dy = s1.y - s0.y;
  for (const QPoint& v : c) {
    const mpq_class ux = v.x - p.x, uy = v.y - p.y;
    const mpq_class den = ux * dy - uy * dx;
    if (den == 0) continue;
    const mpq_class t = (ux * (p.y - s0.y) - uy * (p.x - s0.x)) / den;
    if (t > 0 && t < 1) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    const mpq_class t = (ts[k] + ts[k + 1]) / 2;
    const QPoint target{s0.x + t * dx, s0.y + t * dy};
    bool clear = true;
    for (std::size_t i = 0; i + 1 < n && clear; ++i) {
      if (segments_meet(p, target, c[i], c[i + 1])) clear = false;
    }
    if (clear) return true;
  }
  return false;
}

}  // namespace oracle
