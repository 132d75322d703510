#include "interval.hpp"

#include <limits>
#include <stdexcept>

namespace tric {

Interval iv_div(const Interval& x, const Interval& y) {
  if (y.contains_zero()) throw std::domain_error("division by interval containing zero");
  double a = x.lo / y.lo, b = x.lo / y.hi, c = x.hi / y.lo, d = x.hi / y.hi;
  double lo = a, hi = a;
  if (b < lo) lo = b;
  if (c < lo) lo = c;
  if (d < lo) lo = d;
  if (b > hi) hi = b;
  if (c > hi) hi = c;
  if (d > hi) hi = d;
  return {next_down(lo), next_up(hi)};
}

Interval iv_sqrt(const Interval& x) {
  if (x.lo < 0) throw std::domain_error("square root of an interval reaching below zero");
  return {next_down(std::sqrt(x.lo)), next_up(std::sqrt(x.hi))};
}

Interval interval_ops(const Interval& x, const Interval& y, IvOpKind kind) {
  switch (kind) {
    case IvOpKind::add: return iv_add(x, y);
    case IvOpKind::sub: return iv_sub(x, y);
    case IvOpKind::mul: return iv_mul(x, y);
    case IvOpKind::div: return iv_div(x, y);
    case IvOpKind::sqrt_of_first: return iv_sqrt(x);
  }
  throw std::logic_error("unreachable");
}

Interval rational_to_interval(const Rat& q) {
  double d = rat_to_double(q);
  if (!std::isfinite(d)) {
    // saturated: return the widest valid enclosure on the overflowing side
    if (d > 0) return {std::numeric_limits<double>::max(), d};
    return {d, -std::numeric_limits<double>::max()};
  }
  Rat back = rat_from_double(d);
  if (back == q) return Interval::point(d);
  if (back < q) return {d, next_up(d)};
  return {next_down(d), d};
}

IntervalSymMatrix to_interval(const SymRatMatrix& m) {
  IntervalSymMatrix r(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) r.at(i, j) = rational_to_interval(m.at(i, j));
  return r;
}

bool verified_spd_interval_cholesky(const IntervalSymMatrix& m) {
  const int n = m.order();
  if (n == 0) return true;
  // attempt L with interval entries; certify iff every pivot stays strictly
  // positive
  std::vector<Interval> L(static_cast<size_t>(n) * n);
  auto lrow = [&L, n](int i) { return L.data() + static_cast<size_t>(i) * n; };
  for (int j = 0; j < n; ++j) {
    Interval acc = m.at(j, j);
    const Interval* lj = lrow(j);
    for (int k = 0; k < j; ++k) acc = iv_sub(acc, iv_mul(lj[k], lj[k]));
    if (!(acc.lo > 0)) return false;
    Interval piv = iv_sqrt(acc);
    lrow(j)[j] = piv;
    for (int i = j + 1; i < n; ++i) {
      Interval s = m.at(i, j);
      const Interval* li = lrow(i);
      for (int k = 0; k < j; ++k) s = iv_sub(s, iv_mul(li[k], lj[k]));
      lrow(i)[j] = iv_div(s, piv);
    }
  }
  return true;
}

namespace {

// floating Cholesky attempt on mid - alpha I; on success fills L (lower)
// and reports an upward-rounded ||L||_F^2 and the worst diagonal-shift
// rounding error
bool try_shifted_cholesky(const IntervalSymMatrix& m, double alpha,
                          std::vector<double>& L, double& l_frob2_up,
                          double& diag_shift_err) {
  const int n = m.order();
  auto lrow = [&L, n](int i) { return L.data() + static_cast<size_t>(i) * n; };
  std::fill(L.begin(), L.end(), 0.0);
  diag_shift_err = 0;
  for (int j = 0; j < n; ++j) {
    double mid_jj = 0.5 * (m.at(j, j).lo + m.at(j, j).hi);
    double sjj = mid_jj - alpha;
    diag_shift_err = std::max(diag_shift_err, next_up(std::abs(sjj)) - std::abs(sjj));
    double acc = sjj;
    const double* lj = lrow(j);
    for (int k = 0; k < j; ++k) acc -= lj[k] * lj[k];
    if (!(acc > 0) || !std::isfinite(acc)) return false;
    double piv = std::sqrt(acc);
    lrow(j)[j] = piv;
    for (int i = j + 1; i < n; ++i) {
      double s = 0.5 * (m.at(i, j).lo + m.at(i, j).hi);
      const double* li = lrow(i);
      for (int k = 0; k < j; ++k) s -= li[k] * lj[k];
      double v = s / piv;
      if (!std::isfinite(v)) return false;
      lrow(i)[j] = v;
    }
  }
  l_frob2_up = 0;
  for (double v : L) l_frob2_up = next_up(l_frob2_up + next_up(v * v));
  return true;
}

}  // namespace

bool verified_spd_midpoint_shift(const IntervalSymMatrix& m) {
  const int n = m.order();
  if (n == 0) return true;
  // members differ from the chosen floating midpoint by at most delta;
  // bound ||delta||_2 <= ||delta||_F with upward rounding
  double delta_frob2 = 0;
  double max_diag = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Interval& e = m.at(i, j);
      if (!(std::isfinite(e.lo) && std::isfinite(e.hi)) || e.lo > e.hi) return false;
      double mid = 0.5 * (e.lo + e.hi);
      double d = std::max(next_up(e.hi - mid), next_up(mid - e.lo));
      delta_frob2 = next_up(delta_frob2 + next_up(d * d));
    }
    max_diag = std::max(max_diag, m.at(i, i).hi);
  }
  if (!(max_diag > 0)) return false;
  double delta_norm = next_up(std::sqrt(delta_frob2));

  // shift ladder: the first alpha whose shifted floating Cholesky completes
  // sits near lambda_min(mid); the certificate then only needs alpha to beat
  // the rounding budget
  std::vector<double> L(static_cast<size_t>(n) * n);
  const double unit = std::ldexp(1.0, -53);
  double gamma = (n + 1) * unit / (1 - (n + 1) * unit);
  for (double alpha = 0.5 * max_diag; alpha > 1e-300; alpha *= 0.25) {
    double l_frob2_up = 0, diag_err = 0;
    if (!try_shifted_cholesky(m, alpha, L, l_frob2_up, diag_err)) continue;
    double budget = next_up(next_up(next_up(gamma * l_frob2_up) + diag_err) + delta_norm);
    return alpha > budget;
  }
  return false;
}

bool verified_spd(const IntervalSymMatrix& m) {
  if (m.order() <= 64)
    return verified_spd_interval_cholesky(m) || verified_spd_midpoint_shift(m);
  return verified_spd_midpoint_shift(m) || verified_spd_interval_cholesky(m);
}

bool certify_eigen_bound(const AssembledPencil& pencil, const Rat& lambda) {
  SymRatMatrix shifted(pencil.dim);
  for (int i = 0; i < pencil.dim; ++i)
    for (int j = 0; j < pencil.dim; ++j)
      shifted.at(i, j) = lambda * pencil.B.at(i, j) - pencil.A.at(i, j);
  return verified_spd(to_interval(shifted));
}

}  // namespace tric
