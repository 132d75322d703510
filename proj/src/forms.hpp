#pragma once

#include "linform.hpp"

namespace tric {

// The five local quadratic forms, written once over a generic scalar ring S
// and dof-value type V. Instantiations used in the library:
//   S = Rat,   V = Rat               exact numeric evaluation of the form
//   S = Rat,   V = LinF<Rat, N>      coefficient (half-Hessian) matrices
//   S = RatFn, V = RatFn / LinF      symbolic checks over (a, b, h)
// The expressions are kept in the same arrangement as their source
// definitions, auxiliaries included; no algebraic simplification. Scalar
// subexpressions are materialized into S locals so the generic operators
// see concrete types.

template <class S, class V>
auto f_alpha_0_generic(const S& s, const S& c1, const S& c2, const S& c3,
                       const V& w1, const V& w2, const V& w3, const V& u0) {
  S k1 = 3 * c2 + 3 * c3 - c1;
  S k2 = 3 * c3 + 3 * c1 - c2;
  S k3 = 3 * c1 + 3 * c2 - c3;
  V v0 = k1 * w1 + k2 * w2 + k3 * w3;
  V t = w1 + w2 + w3 - 3 * u0;
  S csum = c1 + c2 + c3;
  S csum2 = csum * csum;
  S c_sq_sum8 = 8 * (c1 * c1 + c2 * c2 + c3 * c3);
  S s15 = s / 15;
  using Q = quad_of_t<V>;
  Q z = (t * t) * c_sq_sum8 / csum2 - (t * v0) * 2 / csum +
        (w1 * w1 + w2 * w2 + w3 * w3) * 5;
  return Q(z * s15);
}

template <class S, class V>
auto f_alpha_1_generic(const S& /*s*/, const S& c1, const S& c2, const S& c3,
                       const V& w1, const V& w2, const V& w3, const V& u0) {
  V t = w1 + w2 + w3 - 3 * u0;
  S csum = c1 + c2 + c3;
  S k12 = c1 + c2 - c3;
  S k23 = c2 + c3 - c1;
  S k31 = c3 + c1 - c2;
  using Q = quad_of_t<V>;
  Q z = (t * t) * 32 / csum + ((w1 - w2) * (w1 - w2)) * k12 +
        ((w2 - w3) * (w2 - w3)) * k23 + ((w3 - w1) * (w3 - w1)) * k31;
  return Q(z / 2);
}

template <class S, class V>
auto f_beta_0_generic(const S& s, const S& c1, const S& c2, const S& c3,
                      const V& u1, const V& u2, const V& u3, const V& w1,
                      const V& w2, const V& w3) {
  S d23 = c2 - c3;
  S d31 = c3 - c1;
  S d12 = c1 - c2;
  V v1 = (13 * u1 + u2 + u3) / 4 - (4 * w1 - d23 * (u2 - u3)) / c1;
  V v2 = (13 * u2 + u3 + u1) / 4 - (4 * w2 - d31 * (u3 - u1)) / c2;
  V v3 = (13 * u3 + u1 + u2) / 4 - (4 * w3 - d12 * (u1 - u2)) / c3;
  S s720 = s / 720;
  using Q = quad_of_t<V>;
  Q z = (u1 * u1 + u2 * u2 + u3 * u3) * 21 -
        (u1 * u2 + u2 * u3 + u3 * u1) * 6 +
        (v1 * v1 + v2 * v2 + v3 * v3) * 6 +
        (v1 * v2 + v2 * v3 + v3 * v1) * 10;
  return Q(z * s720);
}

template <class S, class V>
auto f_beta_1_generic(const S& /*s*/, const S& c1, const S& c2, const S& c3,
                      const V& u1, const V& u2, const V& u3, const V& w1,
                      const V& w2, const V& w3) {
  using Q = quad_of_t<V>;
  Q z = ((u2 - u3) * (u2 - u3) + w1 * w1) / c1 +
        ((u3 - u1) * (u3 - u1) + w2 * w2) / c2 +
        ((u1 - u2) * (u1 - u2) + w3 * w3) / c3;
  return Q(z / 3);
}

template <class S, class V>
auto f_beta_2_generic(const S& s, const S& c1, const S& c2, const S& c3,
                      const V& u1, const V& u2, const V& u3, const V& w1,
                      const V& w2, const V& w3) {
  S d23 = c2 - c3;
  S d31 = c3 - c1;
  S d12 = c1 - c2;
  V v4 = 2 * u1 - u2 - u3 + (4 * w1 - d23 * (u2 - u3)) / c1;
  V v5 = 2 * u2 - u3 - u1 + (4 * w2 - d31 * (u3 - u1)) / c2;
  V v6 = 2 * u3 - u1 - u2 + (4 * w3 - d12 * (u1 - u2)) / c3;
  V cv = c1 * v4 + c2 * v5 + c3 * v6;
  using Q = quad_of_t<V>;
  Q z = (cv * cv) - (v4 * v5 + v5 * v6 + v6 * v4) * 8;
  Q zs = z / s;
  return Q(zs / 16);
}

}  // namespace tric
