#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lincut/predicates.hpp"

namespace lincut {

/// Exact accumulator for sums of doubles and products of doubles.
///
/// Stored as a nonoverlapping floating-point expansion (components sorted by
/// increasing magnitude, zeros eliminated), so the sign of the represented
/// value is the sign of the last component. Valid while no product overflows
/// or underflows, i.e. for coordinates of magnitude roughly in [1e-140, 1e140].
class ExactSum {
 public:
  ExactSum() = default;

  void add(double v);
  void add_product(double a, double b);
  void sub_product(double a, double b);
  void add(const ExactSum& other);
  void subtract(const ExactSum& other);

  int sign() const noexcept {
    return terms_.empty() ? 0 : (terms_.back() > 0.0 ? 1 : -1);
  }
  /// Nearest-ish double approximation (sum of components).
  double estimate() const noexcept;

  std::span<const double> terms() const noexcept { return terms_; }

 private:
  void compress();

  std::vector<double> terms_;
};

/// sign(a - b), exact.
int compare(const ExactSum& a, const ExactSum& b);

/// Twice the signed area of the closed polygon, exact.
ExactSum twice_signed_area(std::span<const Point2> ring);

/// Twice the signed area of triangle (a, b, c), exact.
ExactSum twice_signed_area(const Point2& a, const Point2& b, const Point2& c);

}  // namespace lincut
