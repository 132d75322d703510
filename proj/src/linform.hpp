#pragma once

#include <array>

#include "rat.hpp"

namespace tric {

// Homogeneous linear and quadratic forms over a fixed list of N degrees of
// freedom, with coefficients in a scalar ring S (Rat or RatFn). Used to read
// coefficient matrices off the local quadratic forms: for a form built by
// sums and products of LinF values, the QForm matrix m satisfies
// value(x) = sum_{p,q} m[p][q] x_p x_q with m symmetric, i.e. m is the
// half-Hessian of the form.
template <class S, int N>
struct LinF {
  std::array<S, N> c{};

  static LinF zero(const S& z) {
    LinF l;
    l.c.fill(z);
    return l;
  }
  static LinF unit(const S& z, const S& one, int i) {
    LinF l = zero(z);
    l.c[static_cast<size_t>(i)] = one;
    return l;
  }
};

template <class S, int N>
struct QForm {
  std::array<std::array<S, N>, N> m{};

  static QForm zero(const S& z) {
    QForm q;
    for (auto& row : q.m) row.fill(z);
    return q;
  }
};

template <class S, int N>
LinF<S, N> operator+(const LinF<S, N>& a, const LinF<S, N>& b) {
  LinF<S, N> r = a;
  for (int i = 0; i < N; ++i) r.c[i] = r.c[i] + b.c[i];
  return r;
}

template <class S, int N>
LinF<S, N> operator-(const LinF<S, N>& a, const LinF<S, N>& b) {
  LinF<S, N> r = a;
  for (int i = 0; i < N; ++i) r.c[i] = r.c[i] - b.c[i];
  return r;
}

template <class S, int N>
LinF<S, N> operator-(const LinF<S, N>& a) {
  LinF<S, N> r = a;
  for (int i = 0; i < N; ++i) r.c[i] = -r.c[i];
  return r;
}

template <class S, int N>
LinF<S, N> operator*(const S& s, const LinF<S, N>& a) {
  LinF<S, N> r = a;
  for (int i = 0; i < N; ++i) r.c[i] = s * r.c[i];
  return r;
}

template <class S, int N>
LinF<S, N> operator*(const LinF<S, N>& a, const S& s) {
  return s * a;
}

template <class S, int N>
LinF<S, N> operator*(long k, const LinF<S, N>& a) {
  LinF<S, N> r = a;
  for (int i = 0; i < N; ++i) r.c[i] = r.c[i] * rat(k);
  return r;
}

template <class S, int N>
LinF<S, N> operator/(const LinF<S, N>& a, const S& s) {
  LinF<S, N> r = a;
  for (int i = 0; i < N; ++i) r.c[i] = r.c[i] / s;
  return r;
}

template <class S, int N>
LinF<S, N> operator/(const LinF<S, N>& a, long k) {
  LinF<S, N> r = a;
  for (int i = 0; i < N; ++i) r.c[i] = r.c[i] * rat(1, k);
  return r;
}

template <class S, int N>
QForm<S, N> operator*(const LinF<S, N>& a, const LinF<S, N>& b) {
  QForm<S, N> q;
  Rat half = rat(1, 2);
  for (int p = 0; p < N; ++p)
    for (int r = 0; r < N; ++r) q.m[p][r] = (a.c[p] * b.c[r] + a.c[r] * b.c[p]) * half;
  return q;
}

template <class S, int N>
QForm<S, N> operator+(const QForm<S, N>& a, const QForm<S, N>& b) {
  QForm<S, N> r = a;
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) r.m[p][q] = r.m[p][q] + b.m[p][q];
  return r;
}

template <class S, int N>
QForm<S, N> operator-(const QForm<S, N>& a, const QForm<S, N>& b) {
  QForm<S, N> r = a;
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) r.m[p][q] = r.m[p][q] - b.m[p][q];
  return r;
}

template <class S, int N>
QForm<S, N> operator*(const S& s, const QForm<S, N>& a) {
  QForm<S, N> r = a;
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) r.m[p][q] = s * r.m[p][q];
  return r;
}

template <class S, int N>
QForm<S, N> operator*(const QForm<S, N>& a, const S& s) {
  return s * a;
}

template <class S, int N>
QForm<S, N> operator*(const QForm<S, N>& a, long k) {
  QForm<S, N> r = a;
  Rat c = rat(k);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) r.m[p][q] = r.m[p][q] * c;
  return r;
}

template <class S, int N>
QForm<S, N> operator*(long k, const QForm<S, N>& a) {
  return a * k;
}

template <class S, int N>
QForm<S, N> operator/(const QForm<S, N>& a, const S& s) {
  QForm<S, N> r = a;
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) r.m[p][q] = r.m[p][q] / s;
  return r;
}

template <class S, int N>
QForm<S, N> operator/(const QForm<S, N>& a, long k) {
  QForm<S, N> r = a;
  Rat c = rat(1, k);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) r.m[p][q] = r.m[p][q] * c;
  return r;
}

// Value of the quadratic form at a dof vector.
template <class S, int N>
S qform_value(const QForm<S, N>& q, const std::array<S, N>& x, const S& zero) {
  S acc = zero;
  for (int p = 0; p < N; ++p)
    for (int r = 0; r < N; ++r) acc = acc + q.m[p][r] * x[p] * x[r];
  return acc;
}

// Concrete result type of a product of two dof values: scalar * scalar stays
// scalar, linear form * linear form is a quadratic form. Generic form code
// assigns into this type so that scalar expression templates (gmpxx) are
// evaluated before any temporary dies.
template <class V>
struct QuadOf {
  using type = V;
};
template <class S, int N>
struct QuadOf<LinF<S, N>> {
  using type = QForm<S, N>;
};
template <class V>
using quad_of_t = typename QuadOf<V>::type;

}  // namespace tric
