#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "ratfn.hpp"
#include "tri_integrals.hpp"

namespace tric {

// Planar triangle with exact rational coordinates. Floating input is
// converted to its exact dyadic value up front; `from_floating` records that
// the coordinates passed through a double.
struct Triangle {
  RatPoint p1, p2, p3;
  bool from_floating = false;

  static Triangle from_points(RatPoint a, RatPoint b, RatPoint c) {
    return Triangle{a, b, c, false};
  }
  static Triangle from_doubles(double x1, double y1, double x2, double y2, double x3,
                               double y3);
  // T_{a,b}: vertices (0,0), (1,0), (a,b).
  static Triangle shape(const Rat& a, const Rat& b);
};

// Normalized shape parameters: triangle T_{a,b} with 0 <= a <= 1/2, 0 < b <= 1.
struct TriangleShape {
  Rat a, b;
};

// Squared edge lengths (A opposite p1, B opposite p2, C opposite p3) and the
// positive area, all exact.
struct EdgeData {
  Rat A2, B2, C2, S;
  double A() const { return std::sqrt(rat_to_double(A2)); }
  double B() const { return std::sqrt(rat_to_double(B2)); }
  double C() const { return std::sqrt(rat_to_double(C2)); }
  double area() const { return rat_to_double(S); }
};

// Throws std::invalid_argument for a degenerate (zero-area) triangle.
EdgeData edge_data(const Triangle& tri);

// Signed area (positive for counterclockwise vertex order).
Rat signed_area(const Triangle& tri);

// K_j(T), j in 1..4: one square root on top of an exact radicand.
double k_constant(int j, const Triangle& tri);

// Exact radicand K_j(T)^2 in terms of squared edge lengths and area.
Rat k_radicand(int j, const EdgeData& e);

// L_j(a, b) = K_j(T_{a,b})^2, exact. Requires b > 0.
Rat l_constant(int j, const TriangleShape& shape);

// lim_{b -> 0+} L_j(a, b) for j = 1..3 (the formal b = 0 substitution).
// j = 4 has no finite limit and throws.
Rat l_limit(int j, const Rat& a);

// Circumradius R(T) = ABC / (4S).
double circumradius(const Triangle& tri);

// Continuation factor (1 + c h^2) used to transfer verified bounds between
// nearby shapes; c depends on the constant index and the shape axis.
// Requires 0 < h <= 1/50.
enum class ShapeAxis { a, b };
Rat continuation_factor(int j, ShapeAxis axis, const Rat& h);

// Constants of the derivative-bound lemma, indexed per j.
struct ContinuationConstants {
  long alpha1, alpha2, beta1, beta2;
};
ContinuationConstants derivative_bound_constants(int j);

// Similarity bringing an arbitrary triangle to canonical T_{a,b} form with
// longest edge first: |p1p2| >= |p2p3| >= |p3p1|, ties broken by
// lexicographic vertex order. scale2 = C^2 is the exact squared similarity
// ratio: K_j(tri)^2 = scale2 * L_j(a, b).
struct ShapeNormalization {
  TriangleShape shape;
  Rat scale2;
  double scale;
  std::array<int, 3> vertex_order;
  bool reflected;
  bool from_floating;
};
ShapeNormalization normalize_shape(const Triangle& tri);

// L_j(a, b) as a rational function over a {"a","b"} context.
RatFn l_ratfn(int j, const VarCtxPtr& ctx);
// The b = 0 limit of L_j as a rational function of a (constant in b).
RatFn l_limit_ratfn(int j, const VarCtxPtr& ctx);

// Exact check of the four derivative-bound inequalities at one shape point;
// the second-derivative bounds are checked with the displaced argument at
// both ends of the +/- b/50 window (clamped to the canonical region).
struct DerivativeBoundPoint {
  Rat a, b;
  bool ok;
  double min_margin;  // min over the checks of (bound - value) / bound
};
struct DerivativeBoundReport {
  int j;
  bool all_ok;
  std::vector<DerivativeBoundPoint> points;
};
DerivativeBoundReport derivative_bound_check(int j,
                                             const std::vector<TriangleShape>& grid);

}  // namespace tric
