#include "lincut/exact.hpp"

#include "exact_detail.hpp"

namespace lincut {

using detail::two_product;
using detail::two_sum;

namespace {

// Shewchuk's GROW-EXPANSION with zero elimination.
void grow(std::vector<double>& e, double b) {
  if (b == 0.0) return;
  double q = b;
  std::size_t out = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    double h;
    two_sum(q, e[i], q, h);
    if (h != 0.0) e[out++] = h;
  }
  e.resize(out);
  if (q != 0.0) e.push_back(q);
}

}  // namespace

void ExactSum::add(double v) {
  grow(terms_, v);
  if (terms_.size() > 32) compress();
}

void ExactSum::add_product(double a, double b) {
  double hi, lo;
  two_product(a, b, hi, lo);
  grow(terms_, lo);
  grow(terms_, hi);
  if (terms_.size() > 32) compress();
}

void ExactSum::sub_product(double a, double b) { add_product(-a, b); }

void ExactSum::add(const ExactSum& other) {
  for (double t : other.terms_) grow(terms_, t);
  if (terms_.size() > 32) compress();
}

void ExactSum::subtract(const ExactSum& other) {
  for (double t : other.terms_) grow(terms_, -t);
  if (terms_.size() > 32) compress();
}

double ExactSum::estimate() const noexcept {
  double s = 0.0;
  for (double t : terms_) s += t;
  return s;
}

// Shewchuk's COMPRESS; result is nonoverlapping and usually much shorter.
void ExactSum::compress() {
  const std::size_t m = terms_.size();
  if (m < 2) return;
  std::vector<double> g(m);
  std::size_t bottom = m - 1;
  double q = terms_[bottom];
  for (std::size_t k = m - 1; k-- > 0;) {
    const double enow = terms_[k];
    const double qnew = q + enow;
    const double bvirt = qnew - q;
    const double low = enow - bvirt;
    if (low != 0.0) {
      g[bottom--] = qnew;
      q = low;
    } else {
      q = qnew;
    }
  }
  g[bottom] = q;
  std::vector<double> h;
  h.reserve(m - bottom);
  for (std::size_t k = bottom + 1; k < m; ++k) {
    const double hnow = g[k];
    const double qnew = hnow + q;
    const double bvirt = qnew - hnow;
    const double low = q - bvirt;
    if (low != 0.0) h.push_back(low);
    q = qnew;
  }
  if (q != 0.0) h.push_back(q);
  terms_ = std::move(h);
}

int compare(const ExactSum& a, const ExactSum& b) {
  ExactSum d = a;
  d.subtract(b);
  return d.sign();
}

ExactSum twice_signed_area(std::span<const Point2> ring) {
  ExactSum s;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = ring[i];
    const Point2& q = ring[(i + 1) % n];
    s.add_product(p.x, q.y);
    s.sub_product(q.x, p.y);
  }
  return s;
}

ExactSum twice_signed_area(const Point2& a, const Point2& b, const Point2& c) {
  const Point2 ring[3] = {a, b, c};
  return twice_signed_area(ring);
}

}  // namespace lincut
