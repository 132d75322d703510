#include "elements.hpp"
#include "forms.hpp"
#include "identities_internal.hpp"
#include "tri_integrals.hpp"

namespace tric::detail {

namespace {

// unit-interval integral in one parameter, other variables left symbolic
Poly integrate01_poly(const Poly& u, int tvar) {
  Poly r(u.ctx());
  for (const auto& [m, c] : u.terms()) {
    Mono m2 = m;
    int e = m2[tvar];
    m2[tvar] = 0;
    r.add_term(m2, c / rat(e + 1));
  }
  return r;
}

RatFn integrate01(const RatFn& u, int tvar) {
  for (const auto& [f, k] : u.den_factors())
    if (f.degree_in(tvar) > 0)
      throw std::invalid_argument("denominator must not involve the parameter");
  RatFn r(integrate01_poly(u.num(), tvar));
  for (const auto& [f, k] : u.den_factors()) r.push_den_factor(f, k);
  return r;
}

template <int N>
using LF = LinF<RatFn, N>;
template <int N>
using QF = QForm<RatFn, N>;

template <int N>
LF<N> subst_linf(const LF<N>& l, const std::string& var, const Poly& value) {
  LF<N> r = l;
  for (int i = 0; i < N; ++i) r.c[i] = r.c[i].subst_var(var, value);
  return r;
}

template <int N>
LF<N> diff_linf(const LF<N>& l, const std::string& var) {
  LF<N> r = l;
  for (int i = 0; i < N; ++i) r.c[i] = r.c[i].diff(var);
  return r;
}

template <int N>
LF<N> integrate01_linf(const LF<N>& l, int tvar) {
  LF<N> r = l;
  for (int i = 0; i < N; ++i) r.c[i] = integrate01(r.c[i], tvar);
  return r;
}

struct SymFrame {
  VarCtxPtr ctx;
  RatFn a, b, h, x, y;
  Poly tpoly, t1poly, t2poly;
  int it, it1, it2;

  SymFrame() {
    ctx = VarCtx::make({"a", "b", "h", "x", "y", "t", "t1", "t2"});
    a = RatFn::var(ctx, "a");
    b = RatFn::var(ctx, "b");
    h = RatFn::var(ctx, "h");
    x = RatFn::var(ctx, "x");
    y = RatFn::var(ctx, "y");
    tpoly = Poly::var(ctx, "t");
    t1poly = Poly::var(ctx, "t1");
    t2poly = Poly::var(ctx, "t2");
    it = ctx->index_of("t");
    it1 = ctx->index_of("t1");
    it2 = ctx->index_of("t2");
  }

  Poly cvar(const Rat& v) const { return Poly::constant(ctx, v); }
  Poly apoly() const { return Poly::var(ctx, "a"); }
  Poly bpoly() const { return Poly::var(ctx, "b"); }
  Poly hpoly() const { return Poly::var(ctx, "h"); }

  // edge parametrizations of the element (0,0), (h,0), (ah,bh)
  Poly edge1_x() const { return hpoly() * (cvar(rat(1)) - (cvar(rat(1)) - apoly()) * tpoly); }
  Poly edge1_y() const { return hpoly() * bpoly() * tpoly; }
  Poly edge2_x() const { return hpoly() * apoly() * tpoly; }
  Poly edge2_y() const { return edge1_y(); }
  Poly edge3_x() const { return hpoly() * tpoly; }
  Poly edge3_y() const { return Poly::zero(ctx); }
  // interior parametrization x = h (t1 + a t2), y = h b t2
  Poly interior_x() const { return hpoly() * (t1poly + apoly() * t2poly); }
  Poly interior_y() const { return hpoly() * bpoly() * t2poly; }
};

// substitute the interior parametrization and integrate over the parameter
// triangle, entrywise
template <int N>
QF<N> integrate_interior(const QF<N>& q, const SymFrame& f) {
  QF<N> r = q;
  for (int p = 0; p < N; ++p)
    for (int s = 0; s < N; ++s) {
      RatFn e = q.m[p][s].subst_var("x", f.interior_x()).subst_var("y", f.interior_y());
      r.m[p][s] = integrate_param_triangle(e, f.it1, f.it2);
    }
  return r;
}

template <int N>
void expect_linf_equal(Checker& c, const std::string& what, const LF<N>& got,
                       const LF<N>& want) {
  for (int i = 0; i < N; ++i)
    c.expect_equal(what + " [dof " + std::to_string(i + 1) + "]", got.c[i], want.c[i]);
}

template <int N>
void expect_qform_equal(Checker& c, const std::string& what, const QF<N>& got,
                        const QF<N>& want) {
  for (int p = 0; p < N; ++p)
    for (int s = p; s < N; ++s)
      c.expect_equal(
          what + " [" + std::to_string(p + 1) + "," + std::to_string(s + 1) + "]",
          got.m[p][s], want.m[p][s]);
}

}  // namespace

IdentityCase check_element_consistency(const std::string& lemma_id) {
  Checker c(lemma_id, "hessian_reduce_expand");
  SymFrame f;
  const RatFn &a = f.a, &b = f.b, &h = f.h, &x = f.x, &y = f.y;
  RatFn s = b / 2 * h * h;
  RatFn c1 = 2 * (sq(1 - a) + sq(b)) / b;
  RatFn c2 = 2 * (sq(a) + sq(b)) / b;
  RatFn c3 = 2 / b;
  RatFn zero(Poly::zero(f.ctx)), one = RatFn::constant(f.ctx, rat(1));
  RatFn sjac = 2 * s;  // parametrization Jacobian

  if (lemma_id == "5.1") {
    using L = LF<4>;
    // dofs: w1, w2, w3, u0
    RatFn bubble =
        2 * (3 * (sq(x) + sq(y)) - 2 * (1 + a) * h * x - 2 * b * h * y + a * sq(h)) /
        ((1 - a + sq(a) + sq(b)) * sq(h));
    L Pu = L::zero(zero);
    Pu.c[0] = (b * (2 * x - h) + 2 * (1 - a) * y) / (b * h) + bubble;
    Pu.c[1] = -(b * (2 * x - h) - 2 * a * y) / (b * h) + bubble;
    Pu.c[2] = -(2 * y - b * h) / (b * h) + bubble;
    Pu.c[3] = -3 * bubble;

    auto on_edge = [&](const L& l, const Poly& ex, const Poly& ey) {
      return integrate01_linf(subst_linf(subst_linf(l, "x", ex), "y", ey), f.it);
    };
    expect_linf_equal(c, "edge-mean condition w1", on_edge(Pu, f.edge1_x(), f.edge1_y()),
                      L::unit(zero, one, 0));
    expect_linf_equal(c, "edge-mean condition w2", on_edge(Pu, f.edge2_x(), f.edge2_y()),
                      L::unit(zero, one, 1));
    expect_linf_equal(c, "edge-mean condition w3", on_edge(Pu, f.edge3_x(), f.edge3_y()),
                      L::unit(zero, one, 2));
    {
      L inner = subst_linf(subst_linf(Pu, "x", f.interior_x()), "y", f.interior_y());
      L mean = inner;
      for (int i = 0; i < 4; ++i)
        mean.c[i] = 2 * integrate_param_triangle(inner.c[i], f.it1, f.it2);
      expect_linf_equal(c, "element-mean condition u0", mean, L::unit(zero, one, 3));
    }

    std::array<L, 4> e;
    for (int i = 0; i < 4; ++i) e[static_cast<size_t>(i)] = L::unit(zero, one, i);
    {
      QF<4> l2 = integrate_interior(Pu * Pu, f) * sjac;
      QF<4> want = f_alpha_0_generic(s, c1, c2, c3, e[0], e[1], e[2], e[3]);
      expect_qform_equal(c, "L2 norm vs the alpha-0 form", l2, want);
    }
    {
      L Pux = diff_linf(Pu, "x"), Puy = diff_linf(Pu, "y");
      QF<4> h1 = integrate_interior(Pux * Pux + Puy * Puy, f) * sjac;
      QF<4> want = f_alpha_1_generic(s, c1, c2, c3, e[0], e[1], e[2], e[3]);
      expect_qform_equal(c, "H1 seminorm vs the alpha-1 form", h1, want);
    }
    return c.finish();
  }

  // check 5.2: dofs u1, u2, u3, w1, w2, w3
  using L = LF<6>;
  RatFn A2 = sq(1 - a) + sq(b);
  RatFn B2 = sq(a) + sq(b);
  L Pu = L::zero(zero);
  RatFn lin1 = -(b * (x - h) + (1 - a) * y) / (b * h);
  RatFn lin2 = (b * x - a * y) / (b * h);
  RatFn lin3 = y / (b * h);
  RatFn quad1 = (b * (x - h) + (1 - a) * y) * (b * x + (1 - a) * y) / (A2 * sq(b) * sq(h));
  RatFn quad2 = (b * (x - h) - a * y) * (b * x - a * y) / (B2 * sq(b) * sq(h));
  RatFn quad3 = (y - b * h) * y / (sq(h) * sq(b));
  Pu.c[0] = lin1 + quad1 * A2 + quad2 * (a * (1 - a) - sq(b)) - quad3 * (1 - a);
  Pu.c[1] = lin2 + quad1 * (a * (1 - a) - sq(b)) + quad2 * B2 - quad3 * a;
  Pu.c[2] = lin3 - quad1 * (1 - a) - quad2 * a + quad3;
  Pu.c[3] = quad1 * b;
  Pu.c[4] = quad2 * b;
  Pu.c[5] = quad3 * b;

  auto value_at = [&](const L& l, const Poly& vx, const Poly& vy) {
    return subst_linf(subst_linf(l, "x", vx), "y", vy);
  };
  expect_linf_equal(c, "vertex condition u1",
                    value_at(Pu, f.cvar(rat(0)), f.cvar(rat(0))), L::unit(zero, one, 0));
  expect_linf_equal(c, "vertex condition u2", value_at(Pu, f.hpoly(), f.cvar(rat(0))),
                    L::unit(zero, one, 1));
  expect_linf_equal(c, "vertex condition u3",
                    value_at(Pu, f.hpoly() * f.apoly(), f.hpoly() * f.bpoly()),
                    L::unit(zero, one, 2));

  L Pux = diff_linf(Pu, "x"), Puy = diff_linf(Pu, "y");
  auto flux = [&](const RatFn& nx, const RatFn& ny, const Poly& ex, const Poly& ey) {
    L comb = Pux * nx + Puy * ny;
    return integrate01_linf(subst_linf(subst_linf(comb, "x", ex), "y", ey), f.it);
  };
  expect_linf_equal(c, "flux condition w1",
                    flux(b * h, (1 - a) * h, f.edge1_x(), f.edge1_y()),
                    L::unit(zero, one, 3));
  expect_linf_equal(c, "flux condition w2",
                    flux(-(b * h), a * h, f.edge2_x(), f.edge2_y()),
                    L::unit(zero, one, 4));
  expect_linf_equal(c, "flux condition w3", flux(zero, -h, f.edge3_x(), f.edge3_y()),
                    L::unit(zero, one, 5));

  std::array<L, 6> e;
  for (int i = 0; i < 6; ++i) e[static_cast<size_t>(i)] = L::unit(zero, one, i);
  {
    QF<6> l2 = integrate_interior(Pu * Pu, f) * sjac;
    QF<6> want = f_beta_0_generic(s, c1, c2, c3, e[0], e[1], e[2], e[3], e[4], e[5]);
    expect_qform_equal(c, "L2 norm vs the beta-0 form", l2, want);
  }
  {
    QF<6> h1 = integrate_interior(Pux * Pux + Puy * Puy, f) * sjac;
    QF<6> want = f_beta_1_generic(s, c1, c2, c3, e[0], e[1], e[2], e[3], e[4], e[5]);
    expect_qform_equal(c, "H1 seminorm vs the beta-1 form", h1, want);
  }
  {
    L Puxx = diff_linf(Pux, "x"), Puxy = diff_linf(Pux, "y"), Puyy = diff_linf(Puy, "y");
    QF<6> h2form = integrate_interior(Puxx * Puxx + (Puxy * Puxy) * 2 + Puyy * Puyy, f) * sjac;
    QF<6> want = f_beta_2_generic(s, c1, c2, c3, e[0], e[1], e[2], e[3], e[4], e[5]);
    expect_qform_equal(c, "H2 seminorm vs the beta-2 form", h2form, want);
  }
  return c.finish();
}

IdentityCase check_orthogonality(const std::string& lemma_id, uint64_t seed) {
  Checker c(lemma_id, "exact_random_points");
  bool alpha = lemma_id == "3.2";
  uint64_t state = seed ^ (alpha ? 0x32 : 0x33);
  auto ctx = VarCtx::make({"x", "y"});
  auto small_rat = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    long num = static_cast<long>((state >> 11) % 41) - 20;
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    long den = static_cast<long>((state >> 11) % 8) + 1;
    return rat(num, den);
  };
  int samples = 0;
  for (int trial = 0; trial < 400 && samples < 50; ++trial) {
    Triangle tri{{small_rat(), small_rat()},
                 {small_rat(), small_rat()},
                 {small_rat(), small_rat()},
                 false};
    if (signed_area(tri) == 0) continue;
    Poly u(ctx);
    Poly xv = Poly::var(ctx, "x"), yv = Poly::var(ctx, "y");
    for (int dx = 0; dx <= 4; ++dx)
      for (int dy = 0; dx + dy <= 4; ++dy) u += xv.pow(dx) * yv.pow(dy) * small_rat();
    if (u.is_zero()) continue;
    ++samples;
    if (alpha) {
      Poly proj = alpha_interpolant(tri, u);
      Rat lhs = h1_seminorm2(tri, proj) + h1_seminorm2(tri, u - proj);
      if (lhs != h1_seminorm2(tri, u)) {
        c.fail("gradient orthogonality fails at sample " + std::to_string(samples));
        break;
      }
    } else {
      Poly proj = beta_interpolant(tri, u);
      Rat lhs = h2_seminorm2(tri, proj) + h2_seminorm2(tri, u - proj);
      if (lhs != h2_seminorm2(tri, u)) {
        c.fail("H2 orthogonality fails at sample " + std::to_string(samples));
        break;
      }
    }
  }
  c.expect_true("50 samples collected", samples >= 50);
  return c.finish();
}

}  // namespace tric::detail
