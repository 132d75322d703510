#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tric {

Triangle Triangle::from_doubles(double x1, double y1, double x2, double y2, double x3,
                                double y3) {
  Triangle t{{rat_from_double(x1), rat_from_double(y1)},
             {rat_from_double(x2), rat_from_double(y2)},
             {rat_from_double(x3), rat_from_double(y3)},
             true};
  return t;
}

Triangle Triangle::shape(const Rat& a, const Rat& b) {
  return Triangle{{rat(0), rat(0)}, {rat(1), rat(0)}, {a, b}, false};
}

Rat signed_area(const Triangle& t) {
  return Rat(((t.p2.x - t.p1.x) * (t.p3.y - t.p1.y) -
              (t.p3.x - t.p1.x) * (t.p2.y - t.p1.y)) /
             2);
}

namespace {

Rat dist2(const RatPoint& u, const RatPoint& v) {
  Rat dx = u.x - v.x, dy = u.y - v.y;
  return Rat(dx * dx + dy * dy);
}

}  // namespace

EdgeData edge_data(const Triangle& tri) {
  Rat s = signed_area(tri);
  if (s == 0) throw std::invalid_argument("degenerate triangle");
  if (s < 0) s = -s;
  return EdgeData{dist2(tri.p2, tri.p3), dist2(tri.p3, tri.p1), dist2(tri.p1, tri.p2), s};
}

Rat k_radicand(int j, const EdgeData& e) {
  const Rat &A2 = e.A2, &B2 = e.B2, &C2 = e.C2;
  Rat S2 = e.S * e.S;
  switch (j) {
    case 1:
      return Rat((A2 + B2 + C2) / 28 - S2 * S2 / (A2 * B2 * C2));
    case 2:
      return Rat((A2 + B2 + C2) / 54 - S2 * S2 / (2 * A2 * B2 * C2));
    case 3:
      return Rat((A2 * B2 + B2 * C2 + C2 * A2) / 83 -
                 (A2 * B2 * C2 / (A2 + B2 + C2) + S2) / 24);
    case 4:
      return Rat(A2 * B2 * C2 / (16 * S2) - (A2 + B2 + C2) / 30 -
                 S2 / 5 * (1 / A2 + 1 / B2 + 1 / C2));
    default:
      throw std::invalid_argument("j must be in 1..4");
  }
}

double k_constant(int j, const Triangle& tri) {
  EdgeData e = edge_data(tri);
  Rat r = k_radicand(j, e);
  if (r < 0)
    throw std::logic_error("negative radicand for a non-degenerate triangle");
  return std::sqrt(rat_to_double(r));
}

Rat l_constant(int j, const TriangleShape& shape) {
  if (shape.b <= 0) throw std::invalid_argument("shape requires b > 0");
  const Rat &a = shape.a, &b = shape.b;
  Rat AA = (1 - a) * (1 - a) + b * b;
  Rat BB = a * a + b * b;
  EdgeData e{AA, BB, rat(1), Rat(b / 2)};
  return k_radicand(j, e);
}

Rat l_limit(int j, const Rat& a) {
  if (a < 0 || a > 1) throw std::invalid_argument("l_limit requires 0 <= a <= 1");
  Rat AA = (1 - a) * (1 - a);
  Rat BB = a * a;
  switch (j) {
    case 1:
      return Rat((AA + BB + 1) / 28);
    case 2:
      return Rat((AA + BB + 1) / 54);
    case 3:
      return Rat((AA * BB + BB + AA) / 83 - AA * BB / (AA + BB + 1) / 24);
    case 4:
      throw std::invalid_argument("no finite b->0 limit for j = 4");
    default:
      throw std::invalid_argument("j must be in 1..4");
  }
}

double circumradius(const Triangle& tri) {
  EdgeData e = edge_data(tri);
  Rat r2 = Rat(e.A2 * e.B2 * e.C2 / (16 * e.S * e.S));
  return std::sqrt(rat_to_double(r2));
}

Rat continuation_factor(int j, ShapeAxis axis, const Rat& h) {
  if (j < 1 || j > 4) throw std::invalid_argument("j must be in 1..4");
  if (h <= 0 || h > rat(1, 50))
    throw std::invalid_argument("step out of range (0, 1/50]");
  static const long c_a[4] = {5, 5, 6, 9};
  static const long c_b[4] = {3, 3, 8, 9};
  long c = axis == ShapeAxis::a ? c_a[j - 1] : c_b[j - 1];
  return Rat(1 + c * h * h);
}

ContinuationConstants derivative_bound_constants(int j) {
  switch (j) {
    case 1:
    case 2:
      return {2, 5, 2, 4};
    case 3:
      return {2, 4, 3, 8};
    case 4:
      return {3, 9, 3, 9};
    default:
      throw std::invalid_argument("j must be in 1..4");
  }
}

ShapeNormalization normalize_shape(const Triangle& tri) {
  EdgeData check = edge_data(tri);  // rejects degenerate input
  (void)check;
  const RatPoint* pts[3] = {&tri.p1, &tri.p2, &tri.p3};
  auto pt_less = [](const RatPoint& u, const RatPoint& v) {
    if (u.x != v.x) return u.x < v.x;
    return u.y < v.y;
  };
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const int* best = nullptr;
  for (const auto& perm : perms) {
    const RatPoint &q1 = *pts[perm[0]], &q2 = *pts[perm[1]], &q3 = *pts[perm[2]];
    Rat c2 = dist2(q1, q2), a2 = dist2(q2, q3), b2 = dist2(q3, q1);
    if (!(c2 >= a2 && a2 >= b2)) continue;
    if (best == nullptr) {
      best = perm;
      continue;
    }
    // deterministic tie-break: lexicographically smallest vertex sequence
    const RatPoint* cur[3] = {pts[perm[0]], pts[perm[1]], pts[perm[2]]};
    const RatPoint* sel[3] = {pts[best[0]], pts[best[1]], pts[best[2]]};
    for (int i = 0; i < 3; ++i) {
      if (pt_less(*cur[i], *sel[i])) {
        best = perm;
        break;
      }
      if (pt_less(*sel[i], *cur[i])) break;
    }
  }
  if (best == nullptr) throw std::logic_error("no admissible vertex ordering");
  const RatPoint &q1 = *pts[best[0]], &q2 = *pts[best[1]], &q3 = *pts[best[2]];
  Rat C2 = dist2(q1, q2), A2 = dist2(q2, q3), B2 = dist2(q3, q1);
  Rat a = Rat((C2 + B2 - A2) / (2 * C2));
  Rat s = signed_area(Triangle{q1, q2, q3, false});
  bool reflected = s < 0;
  if (reflected) s = -s;
  Rat b = Rat(2 * s / C2);
  ShapeNormalization out;
  out.shape = TriangleShape{a, b};
  out.scale2 = C2;
  out.scale = std::sqrt(rat_to_double(C2));
  out.vertex_order = {best[0], best[1], best[2]};
  out.reflected = reflected;
  out.from_floating = tri.from_floating;
  return out;
}

RatFn l_ratfn(int j, const VarCtxPtr& ctx) {
  RatFn a = RatFn::var(ctx, "a"), b = RatFn::var(ctx, "b");
  RatFn AA = sq(1 - a) + sq(b);
  RatFn BB = sq(a) + sq(b);
  RatFn CC = RatFn::constant(ctx, rat(1));
  RatFn SS = sq(b) / 4;  // S^2
  switch (j) {
    case 1:
      return (AA + BB + CC) / 28 - SS * SS / (AA * BB * CC);
    case 2:
      return (AA + BB + CC) / 54 - SS * SS / 2 / (AA * BB * CC);
    case 3:
      return (AA * BB + BB * CC + CC * AA) / 83 -
             (AA * BB * CC / (AA + BB + CC) + SS) / 24;
    case 4:
      return AA * BB * CC / 16 / SS - (AA + BB + CC) / 30 -
             SS / 5 * (1 / AA + 1 / BB + 1 / CC);
    default:
      throw std::invalid_argument("j must be in 1..4");
  }
}

RatFn l_limit_ratfn(int j, const VarCtxPtr& ctx) {
  RatFn a = RatFn::var(ctx, "a");
  RatFn AA = sq(1 - a);
  RatFn BB = sq(a);
  switch (j) {
    case 1:
      return (AA + BB + 1) / 28;
    case 2:
      return (AA + BB + 1) / 54;
    case 3:
      return (AA * BB + BB + AA) / 83 - AA * BB / (AA + BB + 1) / 24;
    default:
      throw std::invalid_argument("finite limit exists only for j = 1..3");
  }
}

DerivativeBoundReport derivative_bound_check(int j,
                                             const std::vector<TriangleShape>& grid) {
  auto ctx = VarCtx::make({"a", "b"});
  RatFn L = l_ratfn(j, ctx);
  RatFn La = L.diff("a"), Lb = L.diff("b");
  RatFn Laa = La.diff("a"), Lbb = Lb.diff("b");
  ContinuationConstants cc = derivative_bound_constants(j);

  DerivativeBoundReport report{j, true, {}};
  report.points.reserve(grid.size());
  Rat half = rat(1, 2);
  for (const auto& shape : grid) {
    const Rat &a = shape.a, &b = shape.b;
    std::vector<Rat> pt{a, b};
    Rat Lv = L.eval(pt);
    Rat bound1 = Rat(rat(cc.alpha1) / b * Lv);
    Rat bound2 = Rat(rat(cc.alpha2) / (b * b) * Lv);
    Rat bound3 = Rat(rat(cc.beta1) / b * Lv);
    Rat bound4 = Rat(rat(cc.beta2) / (b * b) * Lv);

    bool ok = true;
    Rat min_margin;
    bool first = true;
    auto take = [&](const Rat& bound, const Rat& value) {
      Rat margin = Rat((bound - value) / bound);
      if (value >= bound) ok = false;
      if (first || margin < min_margin) min_margin = margin;
      first = false;
    };

    Rat Lav = La.eval(pt);
    take(bound1, Lav < 0 ? Rat(-Lav) : Lav);
    Rat Lbv = Lb.eval(pt);
    take(bound3, Lbv < 0 ? Rat(-Lbv) : Lbv);

    Rat step = Rat(b / 50);
    for (const Rat& at : {a, Rat(a - step), Rat(a + step)}) {
      Rat ac = std::clamp(at, rat(0), half);
      take(bound2, Laa.eval({ac, b}));
    }
    for (const Rat& bt : {b, Rat(b - step), Rat(b + step)}) {
      Rat bc = std::clamp(bt, Rat(b / 2), rat(1));  // stay strictly above 0
      take(bound4, Lbb.eval({a, bc}));
    }

    report.points.push_back(
        DerivativeBoundPoint{a, b, ok, rat_to_double(min_margin)});
    report.all_ok = report.all_ok && ok;
  }
  return report;
}

}  // namespace tric
