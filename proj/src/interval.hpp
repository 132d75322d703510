#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mesh.hpp"

namespace tric {

// Adjacent floats; finite inputs only except at infinities, which are fixed
// points. Bit stepping instead of std::nextafter keeps the certificate inner
// loop cheap.
inline double next_up(double x) {
  if (x != x) return x;
  if (x == 0.0) return std::bit_cast<double>(static_cast<uint64_t>(1));
  uint64_t b = std::bit_cast<uint64_t>(x);
  if (b >> 63) {
    --b;  // negative: smaller magnitude is larger
  } else {
    if (std::isinf(x)) return x;
    ++b;
  }
  return std::bit_cast<double>(b);
}

inline double next_down(double x) { return -next_up(-x); }

// Closed interval [lo, hi]. Every operation returns an enclosure of the
// exact real result: the double result is computed in round-to-nearest and
// then widened one ulp outward on each endpoint.
struct Interval {
  double lo = 0, hi = 0;

  static Interval point(double x) { return {x, x}; }
  double width() const { return hi - lo; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
};

inline Interval iv_neg(const Interval& x) { return {-x.hi, -x.lo}; }

inline Interval iv_add(const Interval& x, const Interval& y) {
  return {next_down(x.lo + y.lo), next_up(x.hi + y.hi)};
}

inline Interval iv_sub(const Interval& x, const Interval& y) {
  return {next_down(x.lo - y.hi), next_up(x.hi - y.lo)};
}

inline Interval iv_mul(const Interval& x, const Interval& y) {
  double a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
  double lo = a, hi = a;
  if (b < lo) lo = b;
  if (c < lo) lo = c;
  if (d < lo) lo = d;
  if (b > hi) hi = b;
  if (c > hi) hi = c;
  if (d > hi) hi = d;
  return {next_down(lo), next_up(hi)};
}

Interval iv_div(const Interval& x, const Interval& y);   // throws if 0 in y
Interval iv_sqrt(const Interval& x);                      // throws if lo < 0

enum class IvOpKind { add, sub, mul, div, sqrt_of_first };
Interval interval_ops(const Interval& x, const Interval& y, IvOpKind kind);

// Tightest one-ulp enclosure of an exact rational; endpoints may saturate to
// +/- infinity on overflow (detectable via iv_overflowed).
Interval rational_to_interval(const Rat& q);
inline bool iv_overflowed(const Interval& x) {
  return !(std::isfinite(x.lo) && std::isfinite(x.hi));
}

// Symmetric interval matrix, full square storage.
class IntervalSymMatrix {
 public:
  IntervalSymMatrix() : n_(0) {}
  explicit IntervalSymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  int order() const { return n_; }
  Interval& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Interval& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<Interval> a_;
};

IntervalSymMatrix to_interval(const SymRatMatrix& m);

// Positive-definiteness certificate. True implies every real symmetric
// matrix contained in M is positive definite; false only means "not
// certified". Two one-sided certifiers are tried:
//   - interval Cholesky (small orders): each member's exact Cholesky
//     intermediates lie inside the computed intervals by induction over the
//     operations, so strictly positive pivot enclosures force positive real
//     pivots;
//   - midpoint shift (large orders, where interval dependency makes the
//     direct decomposition too conservative): a floating Cholesky of
//     mid - alpha I that runs to completion proves
//     lambda_min(mid) >= alpha - gamma_{n+1} ||L||_F^2 - (rounding of the
//     diagonal shift), and members differ from mid by at most the radius
//     Frobenius norm; all bound accumulations are rounded upward.
bool verified_spd(const IntervalSymMatrix& m);

// The two certifiers, exposed for targeted tests.
bool verified_spd_interval_cholesky(const IntervalSymMatrix& m);
bool verified_spd_midpoint_shift(const IntervalSymMatrix& m);

// True implies sup x^T A x / x^T B x < lambda, rigorously: lambda B - A is
// formed in exact rational arithmetic, converted outward to intervals, and
// certified positive definite.
bool certify_eigen_bound(const AssembledPencil& pencil, const Rat& lambda);

}  // namespace tric
