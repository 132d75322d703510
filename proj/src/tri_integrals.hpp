#pragma once

#include <array>

#include "ratfn.hpp"

namespace tric {

// p! q! / (p + q + 2)!, the exact integral of x^p y^q over the reference
// triangle (0,0), (1,0), (0,1).
Rat monomial_integral_unit_triangle(int p, int q);

struct RatPoint {
  Rat x, y;
};

// Exact integral of a polynomial in variables named "x" and "y" over the
// triangle with the given rational vertices (affine pullback to the
// reference triangle). Throws std::invalid_argument on a zero-area triangle.
Rat integrate_poly_over_triangle(const Poly& u, const RatPoint& p1,
                                 const RatPoint& p2, const RatPoint& p3);

// Exact integral over t in [0, 1] of u(p0 + t (p1 - p0)); used for edge
// mean-value conditions (this is (1/|edge|) * the ds line integral).
Rat integrate_poly_on_segment(const Poly& u, const RatPoint& p0, const RatPoint& p1);

// integral over the unit t-interval of a univariate restriction:
// sum c_e / (e + 1) over terms c_e * t^e. All other variables must be absent.
Rat integrate_unit_interval(const Poly& u, int tvar);

// Symbolic iterated integral over the parameter triangle
// { 0 <= t2 <= 1, 0 <= t1 <= 1 - t2 }: integrates the polynomial first in t1
// and then in t2, leaving the remaining variables symbolic.
Poly integrate_param_triangle(const Poly& u, int t1, int t2);

// Same, for a rational function whose denominator is free of t1 and t2.
RatFn integrate_param_triangle(const RatFn& u, int t1, int t2);

}  // namespace tric
