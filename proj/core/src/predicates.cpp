#include "lincut/predicates.hpp"

#include <array>
#include <cstddef>
#include <limits>

#include "exact_detail.hpp"
#include "lincut/error.hpp"

namespace lincut {

namespace {

// Shewchuk's first-stage bound for orient2d: (3 + 16 eps) eps, eps = 2^-53.
constexpr double kEpsilon = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEpsilon) * kEpsilon;

Orientation from_sign(int s) noexcept {
  return s > 0 ? Orientation::CCW : (s < 0 ? Orientation::CW : Orientation::Collinear);
}

Orientation from_value(double v) noexcept {
  return v > 0.0 ? Orientation::CCW : (v < 0.0 ? Orientation::CW : Orientation::Collinear);
}

// Fixed-capacity expansion; six exact products need at most 12 components.
struct SmallExpansion {
  std::array<double, 12> e{};
  std::size_t size = 0;

  void grow(double b) noexcept {
    if (b == 0.0) return;
    double q = b;
    std::size_t out = 0;
    for (std::size_t i = 0; i < size; ++i) {
      double h;
      detail::two_sum(q, e[i], q, h);
      if (h != 0.0) e[out++] = h;
    }
    size = out;
    if (q != 0.0) e[size++] = q;
  }

  void add_product(double a, double b) noexcept {
    double hi, lo;
    detail::two_product(a, b, hi, lo);
    grow(lo);
    grow(hi);
  }
};

Orientation orient2d_exact(const Point2& a, const Point2& b, const Point2& c) noexcept {
  // ax*by - ax*cy - ay*bx + ay*cx + bx*cy - by*cx
  SmallExpansion s;
  s.add_product(a.x, b.y);
  s.add_product(-a.x, c.y);
  s.add_product(-a.y, b.x);
  s.add_product(a.y, c.x);
  s.add_product(b.x, c.y);
  s.add_product(-b.y, c.x);
  return s.size == 0 ? Orientation::Collinear
                     : from_sign(s.e[s.size - 1] > 0.0 ? 1 : -1);
}

}  // namespace

double orient2d_fast(const Point2& a, const Point2& b, const Point2& c) noexcept {
  return (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
}

Orientation orient2d(const Point2& a, const Point2& b, const Point2& c) noexcept {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;

  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return from_value(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return from_value(det);
    detsum = -detleft - detright;
  } else {
    return from_value(det);
  }

  const double errbound = kCcwErrBoundA * detsum;
  if (det >= errbound || -det >= errbound) return from_value(det);
  return orient2d_exact(a, b, c);
}

Containment point_in_triangle(const Point2& p, const Point2& a, const Point2& b,
                              const Point2& c) {
  if (orient2d(a, b, c) != Orientation::CCW) {
    throw Error(ErrorCode::DegenerateTriangle,
                "point_in_triangle: triangle is not strictly counterclockwise");
  }
  const Orientation o0 = orient2d(a, b, p);
  const Orientation o1 = orient2d(b, c, p);
  const Orientation o2 = orient2d(c, a, p);
  if (o0 == Orientation::CW || o1 == Orientation::CW || o2 == Orientation::CW) {
    return Containment::Outside;
  }
  if (o0 == Orientation::CCW && o1 == Orientation::CCW && o2 == Orientation::CCW) {
    return Containment::StrictlyInside;
  }
  return Containment::OnBoundary;
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) noexcept {
  if (orient2d(a, b, p) != Orientation::Collinear) return false;
  const Point2& lo = lex_less(a, b) ? a : b;
  const Point2& hi = lex_less(a, b) ? b : a;
  return !lex_less(p, lo) && !lex_less(hi, p);
}

bool strictly_between(const Point2& p, const Point2& a, const Point2& b) noexcept {
  return on_segment(p, a, b) && p != a && p != b;
}

Crossing segment_crossing(const Point2& p1, const Point2& p2, const Point2& q1,
                          const Point2& q2) {
  if (p1 == p2 || q1 == q2) {
    throw Error(ErrorCode::DegenerateSegment, "segment_crossing: zero-length segment");
  }
  const int o1 = sign(orient2d(p1, p2, q1));
  const int o2 = sign(orient2d(p1, p2, q2));

  if (o1 == 0 && o2 == 0) {
    // Same supporting line: compare lexicographic extents.
    const Point2 plo = lex_less(p1, p2) ? p1 : p2;
    const Point2 phi = lex_less(p1, p2) ? p2 : p1;
    const Point2 qlo = lex_less(q1, q2) ? q1 : q2;
    const Point2 qhi = lex_less(q1, q2) ? q2 : q1;
    const Point2 lo = lex_less(plo, qlo) ? qlo : plo;  // max of lows
    const Point2 hi = lex_less(phi, qhi) ? phi : qhi;  // min of highs
    if (lex_less(lo, hi)) return Crossing::CollinearOverlap;
    if (lo == hi) return Crossing::EndpointTouch;
    return Crossing::None;
  }

  const int o3 = sign(orient2d(q1, q2, p1));
  const int o4 = sign(orient2d(q1, q2, p2));
  if (o1 * o2 < 0 && o3 * o4 < 0) return Crossing::Proper;

  if ((o1 == 0 && on_segment(q1, p1, p2)) || (o2 == 0 && on_segment(q2, p1, p2)) ||
      (o3 == 0 && on_segment(p1, q1, q2)) || (o4 == 0 && on_segment(p2, q1, q2))) {
    return Crossing::EndpointTouch;
  }
  return Crossing::None;
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateTriangle: return "degenerate triangle";
    case ErrorCode::DegenerateSegment: return "degenerate segment";
    case ErrorCode::IndexOutOfRange: return "index out of range";
    case ErrorCode::NonManifoldEdge: return "non-manifold edge";
    case ErrorCode::DeadTriangle: return "dead triangle";
    case ErrorCode::SegmentThroughVertex: return "segment through vertex";
    case ErrorCode::SegmentOutsideMesh: return "segment outside mesh";
    case ErrorCode::SegmentCrossesConstraint: return "segment crosses constraint";
    case ErrorCode::InconsistentBoundary: return "inconsistent boundary";
    case ErrorCode::InvalidPolygon: return "invalid polygon";
    case ErrorCode::EarQueueExhausted: return "ear queue exhausted";
    case ErrorCode::NoEarFound: return "no ear found";
    case ErrorCode::TooFewPoints: return "too few points";
    case ErrorCode::CollinearPoints: return "collinear points";
    case ErrorCode::DuplicatePoints: return "duplicate points";
    case ErrorCode::CrossingSegments: return "crossing segments";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::ParseError: return "parse error";
  }
  return "unknown";
}

}  // namespace lincut
