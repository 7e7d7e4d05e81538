#pragma once

#include <compare>

namespace lincut {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Lexicographic (x, then y). Along any line this order agrees with the
/// order of points on that line, which the collinear cases rely on.
inline bool lex_less(const Point2& a, const Point2& b) noexcept {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

enum class Orientation : int { CW = -1, Collinear = 0, CCW = 1 };

inline int sign(Orientation o) noexcept { return static_cast<int>(o); }

inline Orientation operator-(Orientation o) noexcept {
  return static_cast<Orientation>(-static_cast<int>(o));
}

/// Exact sign of det[b - a, c - a] for finite double inputs.
///
/// A floating-point filter decides most calls; the remainder fall through to
/// an exact expansion evaluation, so the result always equals the sign the
/// determinant has in unbounded-precision rational arithmetic.
Orientation orient2d(const Point2& a, const Point2& b, const Point2& c) noexcept;

/// Plain double evaluation of the same determinant (no robustness).
double orient2d_fast(const Point2& a, const Point2& b, const Point2& c) noexcept;

enum class Containment { StrictlyInside, OnBoundary, Outside };

/// Classifies `p` against the CCW triangle (a, b, c).
/// Throws Error(DegenerateTriangle) when (a, b, c) is not strictly CCW.
Containment point_in_triangle(const Point2& p, const Point2& a, const Point2& b,
                              const Point2& c);

enum class Crossing { Proper, EndpointTouch, CollinearOverlap, None };

/// Classifies closed segments [p1, p2] and [q1, q2] from orientation signs.
/// Throws Error(DegenerateSegment) on a zero-length input segment.
Crossing segment_crossing(const Point2& p1, const Point2& p2, const Point2& q1,
                          const Point2& q2);

/// True iff `p` lies on the closed segment [a, b]. Exact.
bool on_segment(const Point2& p, const Point2& a, const Point2& b) noexcept;

/// True iff `p` lies strictly inside the open segment (a, b). Exact.
bool strictly_between(const Point2& p, const Point2& a, const Point2& b) noexcept;

}  // namespace lincut
