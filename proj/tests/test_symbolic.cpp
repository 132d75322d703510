#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poly.hpp"
#include "ratfn.hpp"
#include "tri_integrals.hpp"

using namespace tric;

namespace {

uint64_t rng_state = 0x9e3779b97f4a7c15ULL;
uint64_t next_raw() {
  rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
  return rng_state >> 11;
}
// the documented sample space: numerators up to 1e6, denominators up to 2^16
Rat random_point_rat() {
  long num = static_cast<long>(next_raw() % 2000001) - 1000000;
  long den = static_cast<long>(next_raw() % 65536) + 1;
  return rat(num, den);
}
Rat small_coeff() {
  long num = static_cast<long>(next_raw() % 21) - 10;
  long den = static_cast<long>(next_raw() % 6) + 1;
  return rat(num, den);
}

Poly random_poly(const VarCtxPtr& ctx, int degree) {
  Poly p(ctx);
  int nv = ctx->size();
  for (int tries = 0; tries < 12; ++tries) {
    Mono m(static_cast<size_t>(nv), char16_t(0));
    int budget = degree;
    for (int v = 0; v < nv; ++v) {
      int e = static_cast<int>(next_raw() % static_cast<uint64_t>(budget + 1));
      m[static_cast<size_t>(v)] = static_cast<char16_t>(e);
      budget -= e;
    }
    p.add_term(m, small_coeff());
  }
  return p;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_parse("3/4") == rat(3, 4));
  CHECK(rat_parse("-3/4") == rat(-3, 4));
  CHECK(rat_parse("0.1") == rat(1, 10));     // decimal, exact
  CHECK(rat_parse("2.50") == rat(5, 2));
  CHECK(rat_parse("17") == rat(17));
  CHECK(rat_str(rat(6, 4)) == "3/2");
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
  CHECK(rat_from_double(0.5) == rat(1, 2));
}

TEST_CASE("polynomial arithmetic basics") {
  auto ctx = VarCtx::make({"x", "a", "b"});
  Poly x = Poly::var(ctx, "x"), a = Poly::var(ctx, "a"), b = Poly::var(ctx, "b");

  CHECK(poly_arith(x, x, PolyOpKind::mul) == x.pow(2));
  CHECK(poly_arith(a + b, a + b, PolyOpKind::sub).is_zero());
  // (1-2a)^2 + 4a = 1 + 4a^2
  Poly lhs = (1 - 2 * a) * (1 - 2 * a) + 4 * a;
  CHECK(lhs == 1 + 4 * a.pow(2));
}

TEST_CASE("differentiation") {
  auto ctx = VarCtx::make({"a", "b"});
  Poly a = Poly::var(ctx, "a"), b = Poly::var(ctx, "b");
  CHECK((a * a * b).diff("a") == 2 * a * b);
  CHECK(a.pow(4).diff("a", 2) == 12 * a.pow(2));
  CHECK((a * a).diff("b").is_zero());
  CHECK_THROWS_AS(a.diff("zz"), std::invalid_argument);
}

TEST_CASE("derivative matches the finite-difference Taylor expansion exactly") {
  // central difference (p(a+h) - p(a-h)) / 2h equals
  // p' + h^2/3! p''' + h^4/5! p''''' + ...  as an exact rational identity
  auto ctx = VarCtx::make({"a"});
  for (int trial = 0; trial < 20; ++trial) {
    Poly p = random_poly(ctx, 6);
    Rat at = small_coeff();
    Rat h = rat(1, static_cast<long>(next_raw() % 50 + 2));
    Rat fd = Rat((p.eval({Rat(at + h)}) - p.eval({Rat(at - h)})) / (2 * h));
    Rat expected(0);
    Poly d = p;
    Rat hpow(1);
    Int fact(1);
    for (int order = 1; !d.is_zero(); order += 2) {
      d = d.is_zero() ? d : p.diff(0, order);
      if (d.is_zero()) break;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(order));
      expected += d.eval({at}) * hpow / rat(fact, Int(1));
      hpow *= h * h;
      if (order > 12) break;
    }
    CHECK(fd == expected);
    // degree <= 2 in the step variable: the quadratic stencil is exact
    Poly q = Poly::constant(ctx, small_coeff()) + Poly::var(ctx, "a") * small_coeff() +
             Poly::var(ctx, "a").pow(2) * small_coeff();
    Rat fd2 = Rat((q.eval({Rat(at + h)}) - q.eval({Rat(at - h)})) / (2 * h));
    CHECK(fd2 == q.diff(0).eval({at}));
  }
}

TEST_CASE("exact evaluation") {
  auto ctx = VarCtx::make({"a", "b"});
  RatFn a = RatFn::var(ctx, "a"), b = RatFn::var(ctx, "b");
  RatFn phi = sq(b) / (sq(a) + sq(b));
  CHECK(phi.eval({rat(1), rat(1)}) == rat(1, 2));
  Poly d2 = Poly::constant(ctx, rat(1)) - 2 * Poly::var(ctx, "a");
  CHECK(d2.eval({rat(1, 4), rat(0)}) == rat(1, 2));
  CHECK_THROWS_AS(phi.eval({rat(0), rat(0)}), std::domain_error);
  CHECK(phi.has_pole_at({rat(0), rat(0)}));
}

TEST_CASE("distributivity on random polynomials") {
  auto ctx = VarCtx::make({"x", "y", "z"});
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = random_poly(ctx, 4), q = random_poly(ctx, 4), r = random_poly(ctx, 4);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
  }
}

TEST_CASE("rational-function equality is an equivalence relation") {
  auto ctx = VarCtx::make({"a", "b"});
  RatFn a = RatFn::var(ctx, "a"), b = RatFn::var(ctx, "b");
  RatFn phi = sq(b) / (sq(a) + sq(b));
  RatFn f = phi.diff("a");
  RatFn g = -2 * a * sq(b) / sq(sq(a) + sq(b));
  RatFn h = (-2 * a * sq(b) * (sq(a) + sq(b))) / (sq(a) + sq(b)).pow(3);
  CHECK(ratfn_equal(f, f));
  CHECK(ratfn_equal(f, g));
  CHECK(ratfn_equal(g, f));
  CHECK(ratfn_equal(g, h));
  CHECK(ratfn_equal(f, h));  // transitivity witness
  CHECK_FALSE(ratfn_equal(1 / (1 + a), 1 / (1 - a)));

  for (int trial = 0; trial < 25; ++trial) {
    Poly pn = random_poly(ctx, 3), pd = random_poly(ctx, 2), m = random_poly(ctx, 2);
    if (pd.is_zero() || m.is_zero()) continue;
    RatFn base = RatFn(pn) / RatFn(pd);
    RatFn scaled = (RatFn(pn) * RatFn(m)) / (RatFn(pd) * RatFn(m));
    CHECK(ratfn_equal(base, scaled));
  }
}

TEST_CASE("Schwartz-Zippel harness stays sound on nonzero polynomials") {
  auto ctx = VarCtx::make({"x", "y", "z"});
  int nonzero_polys = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Poly p = random_poly(ctx, 4);
    if (p.is_zero()) continue;
    ++nonzero_polys;
    std::vector<Rat> pt{random_point_rat(), random_point_rat(), random_point_rat()};
    CHECK(p.eval(pt) != 0);
  }
  CHECK(nonzero_polys > 150);
}

TEST_CASE("monomial integrals over the reference triangle") {
  CHECK(monomial_integral_unit_triangle(0, 0) == rat(1, 2));
  CHECK(monomial_integral_unit_triangle(1, 0) == rat(1, 6));
  CHECK(monomial_integral_unit_triangle(1, 1) == rat(1, 24));
  SUBCASE("symmetry") {
    for (int p = 0; p <= 8; ++p)
      for (int q = 0; q <= 8; ++q)
        CHECK(monomial_integral_unit_triangle(p, q) ==
              monomial_integral_unit_triangle(q, p));
  }
  SUBCASE("iterated one-dimensional integration oracle") {
    // integral over x in (0,1) of x^p (1-x)^{q+1}/(q+1), expanded exactly
    for (int p = 0; p <= 6; ++p)
      for (int q = 0; q <= 6; ++q) {
        auto ctx = VarCtx::make({"x"});
        Poly x = Poly::var(ctx, "x");
        Poly inner = x.pow(p) * (1 - x).pow(q + 1) * rat(1, q + 1);
        Rat acc(0);
        for (const auto& [m, c] : inner.terms()) acc += c / rat(m[0] + 1);
        CHECK(acc == monomial_integral_unit_triangle(p, q));
      }
  }
}

TEST_CASE("polynomial integration over triangles") {
  auto ctx = VarCtx::make({"x", "y"});
  Poly x = Poly::var(ctx, "x"), y = Poly::var(ctx, "y");
  RatPoint p1{rat(0), rat(0)}, p2{rat(1), rat(0)}, p3{rat(0), rat(1)};
  CHECK(integrate_poly_over_triangle(Poly::constant(ctx, rat(1)), p1, p2, p3) ==
        rat(1, 2));
  CHECK(integrate_poly_over_triangle(x, p1, p2, p3) == rat(1, 6));
  CHECK(integrate_poly_over_triangle(x + y, p1, p2, p3) == rat(1, 3));
  CHECK_THROWS_AS(integrate_poly_over_triangle(x, p1, p2, RatPoint{rat(2), rat(0)}),
                  std::invalid_argument);
  SUBCASE("affine invariance against the monomial formula") {
    RatPoint q3{rat(3, 7), rat(5, 3)};
    for (int trial = 0; trial < 10; ++trial) {
      Poly u = random_poly(ctx, 5);
      // subdivide: integral over the whole equals the sum over a split
      RatPoint mid{Rat((p1.x + p2.x) / 2), Rat((p1.y + p2.y) / 2)};
      Rat whole = integrate_poly_over_triangle(u, p1, p2, q3);
      Rat parts = integrate_poly_over_triangle(u, p1, mid, q3) +
                  integrate_poly_over_triangle(u, mid, p2, q3);
      CHECK(whole == parts);
    }
  }
}

TEST_CASE("substitution and lifting") {
  auto small = VarCtx::make({"a"});
  auto big = VarCtx::make({"a", "b"});
  Poly p = Poly::var(small, "a").pow(2) + 1;
  Poly lifted = p.lift(big);
  CHECK(lifted.eval({rat(3), rat(99)}) == rat(10));
  auto [u, v] = unify(p, Poly::var(big, "b"));
  CHECK(u.ctx()->names() == v.ctx()->names());
  RatFn f = RatFn::var(big, "a") / (1 + RatFn::var(big, "b"));
  RatFn g = f.subst_var("a", Poly::var(big, "b"));
  CHECK(g.eval({rat(7), rat(2)}) == rat(2, 3));
}
