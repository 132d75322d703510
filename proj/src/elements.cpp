#include "elements.hpp"

#include <stdexcept>

namespace tric {

namespace {

// Gaussian elimination with partial (first nonzero) pivoting, exact.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
  int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matching system");
    std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(piv)]);
    std::swap(rhs[static_cast<size_t>(col)], rhs[static_cast<size_t>(piv)]);
    for (int r = col + 1; r < n; ++r) {
      Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)] /
              m[static_cast<size_t>(col)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int c = col; c < n; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * m[static_cast<size_t>(col)][static_cast<size_t>(c)];
      rhs[static_cast<size_t>(r)] -= f * rhs[static_cast<size_t>(col)];
    }
  }
  std::vector<Rat> x(static_cast<size_t>(n));
  for (int r = n - 1; r >= 0; --r) {
    Rat acc = rhs[static_cast<size_t>(r)];
    for (int c = r + 1; c < n; ++c)
      acc -= m[static_cast<size_t>(r)][static_cast<size_t>(c)] * x[static_cast<size_t>(c)];
    x[static_cast<size_t>(r)] = acc / m[static_cast<size_t>(r)][static_cast<size_t>(r)];
  }
  return x;
}

}  // namespace

ElementGeometry element_geometry(const Triangle& tri) {
  EdgeData e = edge_data(tri);
  return ElementGeometry{e.S, Rat(e.A2 / e.S), Rat(e.B2 / e.S), Rat(e.C2 / e.S)};
}

ElementGeometry shape_element_geometry(const TriangleShape& shape, int n) {
  if (shape.b <= 0) throw std::invalid_argument("shape requires b > 0");
  const Rat &a = shape.a, &b = shape.b;
  Rat c1 = Rat(2 * ((1 - a) * (1 - a) + b * b) / b);
  Rat c2 = Rat(2 * (a * a + b * b) / b);
  Rat c3 = Rat(2 / b);
  Rat s = Rat(b / 2 / rat(static_cast<long>(n) * n));
  return ElementGeometry{s, c1, c2, c3};
}

Rat f_alpha(int kind, const ElementGeometry& g, const AlphaDofs& d) {
  switch (kind) {
    case 0:
      return f_alpha_0_generic(g.s, g.c1, g.c2, g.c3, d.w1, d.w2, d.w3, d.u0);
    case 1:
      return f_alpha_1_generic(g.s, g.c1, g.c2, g.c3, d.w1, d.w2, d.w3, d.u0);
    default:
      throw std::invalid_argument("alpha form kind must be 0 or 1");
  }
}

Rat f_beta(int kind, const ElementGeometry& g, const BetaDofs& d) {
  switch (kind) {
    case 0:
      return f_beta_0_generic(g.s, g.c1, g.c2, g.c3, d.u1, d.u2, d.u3, d.w1, d.w2, d.w3);
    case 1:
      return f_beta_1_generic(g.s, g.c1, g.c2, g.c3, d.u1, d.u2, d.u3, d.w1, d.w2, d.w3);
    case 2:
      return f_beta_2_generic(g.s, g.c1, g.c2, g.c3, d.u1, d.u2, d.u3, d.w1, d.w2, d.w3);
    default:
      throw std::invalid_argument("beta form kind must be 0, 1 or 2");
  }
}

SymRatMatrix local_matrix(LocalForm form, const ElementGeometry& g) {
  Rat zero = rat(0), one = rat(1);
  if (form == LocalForm::alpha0 || form == LocalForm::alpha1) {
    using L = LinF<Rat, 4>;
    std::array<L, 4> e;
    for (int i = 0; i < 4; ++i) e[static_cast<size_t>(i)] = L::unit(zero, one, i);
    QForm<Rat, 4> q =
        form == LocalForm::alpha0
            ? f_alpha_0_generic(g.s, g.c1, g.c2, g.c3, e[0], e[1], e[2], e[3])
            : f_alpha_1_generic(g.s, g.c1, g.c2, g.c3, e[0], e[1], e[2], e[3]);
    SymRatMatrix m(4);
    for (int p = 0; p < 4; ++p)
      for (int r = 0; r < 4; ++r) m.at(p, r) = q.m[p][r];
    return m;
  }
  using L = LinF<Rat, 6>;
  std::array<L, 6> e;
  for (int i = 0; i < 6; ++i) e[static_cast<size_t>(i)] = L::unit(zero, one, i);
  QForm<Rat, 6> q;
  switch (form) {
    case LocalForm::beta0:
      q = f_beta_0_generic(g.s, g.c1, g.c2, g.c3, e[0], e[1], e[2], e[3], e[4], e[5]);
      break;
    case LocalForm::beta1:
      q = f_beta_1_generic(g.s, g.c1, g.c2, g.c3, e[0], e[1], e[2], e[3], e[4], e[5]);
      break;
    case LocalForm::beta2:
      q = f_beta_2_generic(g.s, g.c1, g.c2, g.c3, e[0], e[1], e[2], e[3], e[4], e[5]);
      break;
    default:
      throw std::logic_error("unreachable");
  }
  SymRatMatrix m(6);
  for (int p = 0; p < 6; ++p)
    for (int r = 0; r < 6; ++r) m.at(p, r) = q.m[p][r];
  return m;
}

namespace {

// edge k runs opposite vertex k: gamma_1 = p2 p3, gamma_2 = p3 p1, gamma_3 = p1 p2
std::array<std::pair<RatPoint, RatPoint>, 3> edges_of(const Triangle& t) {
  return {std::pair{t.p2, t.p3}, std::pair{t.p3, t.p1}, std::pair{t.p1, t.p2}};
}

Rat eval_xy(const Poly& u, const RatPoint& p) {
  const auto& ctx = u.ctx();
  std::vector<Rat> pt(static_cast<size_t>(ctx->size()), rat(0));
  pt[static_cast<size_t>(ctx->index_of("x"))] = p.x;
  pt[static_cast<size_t>(ctx->index_of("y"))] = p.y;
  return u.eval(pt);
}

// Exact integral over edge (p0 -> p1) of grad(u) . n ds, with n the outward
// normal; the unnormalized edge perpendicular absorbs the ds scaling.
Rat flux_integral(const Poly& u, const RatPoint& p0, const RatPoint& p1, int orient) {
  Poly ux = u.diff("x"), uy = u.diff("y");
  Rat dx = p1.x - p0.x, dy = p1.y - p0.y;
  // outward normal direction for counterclockwise orientation: (dy, -dx)
  Rat nx = orient > 0 ? dy : Rat(-dy);
  Rat ny = orient > 0 ? Rat(-dx) : dx;
  return Rat(integrate_poly_on_segment(ux, p0, p1) * nx +
             integrate_poly_on_segment(uy, p0, p1) * ny);
}

}  // namespace

AlphaDofs alpha_dofs_of(const Triangle& tri, const Poly& u) {
  auto e = edges_of(tri);
  EdgeData ed = edge_data(tri);
  AlphaDofs d;
  d.w1 = integrate_poly_on_segment(u, e[0].first, e[0].second);
  d.w2 = integrate_poly_on_segment(u, e[1].first, e[1].second);
  d.w3 = integrate_poly_on_segment(u, e[2].first, e[2].second);
  d.u0 = Rat(integrate_poly_over_triangle(u, tri.p1, tri.p2, tri.p3) / ed.S);
  return d;
}

BetaDofs beta_dofs_of(const Triangle& tri, const Poly& u) {
  auto e = edges_of(tri);
  int orient = sign(signed_area(tri));
  BetaDofs d;
  d.u1 = eval_xy(u, tri.p1);
  d.u2 = eval_xy(u, tri.p2);
  d.u3 = eval_xy(u, tri.p3);
  d.w1 = flux_integral(u, e[0].first, e[0].second, orient);
  d.w2 = flux_integral(u, e[1].first, e[1].second, orient);
  d.w3 = flux_integral(u, e[2].first, e[2].second, orient);
  return d;
}

Poly alpha_interpolant(const Triangle& tri, const Poly& u) {
  const auto& ctx = u.ctx();
  Poly x = Poly::var(ctx, "x"), y = Poly::var(ctx, "y");
  std::array<Poly, 4> basis{x * x + y * y, x, y, Poly::constant(ctx, rat(1))};
  auto e = edges_of(tri);
  EdgeData ed = edge_data(tri);
  std::vector<std::vector<Rat>> m(4, std::vector<Rat>(4));
  std::vector<Rat> rhs(4);
  for (int col = 0; col < 4; ++col) {
    for (int k = 0; k < 3; ++k)
      m[static_cast<size_t>(k)][static_cast<size_t>(col)] = integrate_poly_on_segment(
          basis[static_cast<size_t>(col)], e[static_cast<size_t>(k)].first,
          e[static_cast<size_t>(k)].second);
    m[3][static_cast<size_t>(col)] =
        integrate_poly_over_triangle(basis[static_cast<size_t>(col)], tri.p1, tri.p2, tri.p3);
  }
  AlphaDofs d = alpha_dofs_of(tri, u);
  rhs[0] = d.w1;
  rhs[1] = d.w2;
  rhs[2] = d.w3;
  rhs[3] = d.u0 * ed.S;
  std::vector<Rat> coef = solve_linear(std::move(m), std::move(rhs));
  Poly p(ctx);
  for (int i = 0; i < 4; ++i) p += basis[static_cast<size_t>(i)] * coef[static_cast<size_t>(i)];
  return p;
}

Poly beta_interpolant(const Triangle& tri, const Poly& u) {
  const auto& ctx = u.ctx();
  Poly x = Poly::var(ctx, "x"), y = Poly::var(ctx, "y");
  std::array<Poly, 6> basis{x * x, x * y, y * y, x, y, Poly::constant(ctx, rat(1))};
  auto e = edges_of(tri);
  int orient = sign(signed_area(tri));
  std::vector<std::vector<Rat>> m(6, std::vector<Rat>(6));
  std::vector<Rat> rhs(6);
  const RatPoint* verts[3] = {&tri.p1, &tri.p2, &tri.p3};
  for (int col = 0; col < 6; ++col) {
    const Poly& bpoly = basis[static_cast<size_t>(col)];
    for (int k = 0; k < 3; ++k)
      m[static_cast<size_t>(k)][static_cast<size_t>(col)] = eval_xy(bpoly, *verts[k]);
    for (int k = 0; k < 3; ++k)
      m[static_cast<size_t>(3 + k)][static_cast<size_t>(col)] =
          flux_integral(bpoly, e[static_cast<size_t>(k)].first,
                        e[static_cast<size_t>(k)].second, orient);
  }
  BetaDofs d = beta_dofs_of(tri, u);
  rhs[0] = d.u1;
  rhs[1] = d.u2;
  rhs[2] = d.u3;
  rhs[3] = d.w1;
  rhs[4] = d.w2;
  rhs[5] = d.w3;
  std::vector<Rat> coef = solve_linear(std::move(m), std::move(rhs));
  Poly p(ctx);
  for (int i = 0; i < 6; ++i) p += basis[static_cast<size_t>(i)] * coef[static_cast<size_t>(i)];
  return p;
}

Rat l2_norm2(const Triangle& tri, const Poly& u) {
  return integrate_poly_over_triangle(u * u, tri.p1, tri.p2, tri.p3);
}

Rat h1_seminorm2(const Triangle& tri, const Poly& u) {
  Poly ux = u.diff("x"), uy = u.diff("y");
  return integrate_poly_over_triangle(ux * ux + uy * uy, tri.p1, tri.p2, tri.p3);
}

Rat h2_seminorm2(const Triangle& tri, const Poly& u) {
  Poly uxx = u.diff("x", 2), uyy = u.diff("y", 2);
  Poly uxy = u.diff("x").diff("y");
  return integrate_poly_over_triangle(uxx * uxx + uxy * uxy * rat(2) + uyy * uyy,
                                      tri.p1, tri.p2, tri.p3);
}

}  // namespace tric
