#include "tri_integrals.hpp"

#include <stdexcept>

namespace tric {

Rat monomial_integral_unit_triangle(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative exponent");
  Int num_p, num_q, den;
  mpz_fac_ui(num_p.get_mpz_t(), static_cast<unsigned long>(p));
  mpz_fac_ui(num_q.get_mpz_t(), static_cast<unsigned long>(q));
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(p + q + 2));
  return rat(Int(num_p * num_q), den);
}

Rat integrate_poly_over_triangle(const Poly& u, const RatPoint& p1,
                                 const RatPoint& p2, const RatPoint& p3) {
  const auto& ctx = u.ctx();
  int ix = ctx->index_of("x"), iy = ctx->index_of("y");
  if (ix < 0 || iy < 0) throw std::invalid_argument("polynomial must use variables x, y");
  Rat jac = (p2.x - p1.x) * (p3.y - p1.y) - (p3.x - p1.x) * (p2.y - p1.y);
  if (jac == 0) throw std::invalid_argument("degenerate triangle");
  Rat abs_jac = jac < 0 ? Rat(-jac) : jac;

  // pull back through (x, y) = p1 + xi (p2 - p1) + eta (p3 - p1)
  std::vector<std::string> names = ctx->names();
  names.push_back("@xi");
  names.push_back("@eta");
  auto big = VarCtx::make(std::move(names));
  int ixi = big->index_of("@xi"), ieta = big->index_of("@eta");
  Poly xi = Poly::var(big, ixi), eta = Poly::var(big, ieta);
  Poly x_sub = Poly::constant(big, p1.x) + xi * Rat(p2.x - p1.x) + eta * Rat(p3.x - p1.x);
  Poly y_sub = Poly::constant(big, p1.y) + xi * Rat(p2.y - p1.y) + eta * Rat(p3.y - p1.y);
  Poly v = u.lift(big).subst(big->index_of("x"), x_sub).subst(big->index_of("y"), y_sub);

  Rat acc(0);
  for (const auto& [m, c] : v.terms()) {
    for (size_t k = 0; k < m.size(); ++k)
      if (static_cast<int>(k) != ixi && static_cast<int>(k) != ieta && m[k] != 0)
        throw std::logic_error("unexpected residual variable after substitution");
    acc += c * monomial_integral_unit_triangle(m[static_cast<size_t>(ixi)],
                                               m[static_cast<size_t>(ieta)]);
  }
  return Rat(acc * abs_jac);
}

Rat integrate_unit_interval(const Poly& u, int tvar) {
  Rat acc(0);
  for (const auto& [m, c] : u.terms()) {
    for (size_t k = 0; k < m.size(); ++k)
      if (static_cast<int>(k) != tvar && m[k] != 0)
        throw std::logic_error("restriction is not univariate");
    acc += c / rat(m[static_cast<size_t>(tvar)] + 1);
  }
  return acc;
}

Rat integrate_poly_on_segment(const Poly& u, const RatPoint& p0, const RatPoint& p1) {
  const auto& ctx = u.ctx();
  std::vector<std::string> names = ctx->names();
  names.push_back("@t");
  auto big = VarCtx::make(std::move(names));
  int it = big->index_of("@t");
  Poly t = Poly::var(big, it);
  Poly x_sub = Poly::constant(big, p0.x) + t * Rat(p1.x - p0.x);
  Poly y_sub = Poly::constant(big, p0.y) + t * Rat(p1.y - p0.y);
  Poly v = u.lift(big).subst(big->index_of("x"), x_sub).subst(big->index_of("y"), y_sub);
  return integrate_unit_interval(v, it);
}

Poly integrate_param_triangle(const Poly& u, int t1, int t2) {
  const auto& ctx = u.ctx();
  // integrate in t1 over (0, 1 - t2): t1^k -> (1 - t2)^{k+1} / (k + 1)
  Poly one_minus_t2 = Poly::constant(ctx, rat(1)) - Poly::var(ctx, t2);
  int dmax = u.degree_in(t1);
  std::vector<Poly> by_exp(static_cast<size_t>(dmax) + 1, Poly(ctx));
  for (const auto& [m, c] : u.terms()) {
    Mono m2 = m;
    int e = m2[t1];
    m2[t1] = 0;
    by_exp[static_cast<size_t>(e)].add_term(m2, c);
  }
  Poly stage(ctx);
  for (int e = 0; e <= dmax; ++e) {
    if (by_exp[static_cast<size_t>(e)].is_zero()) continue;
    stage += by_exp[static_cast<size_t>(e)] * one_minus_t2.pow(e + 1) * rat(1, e + 1);
  }
  // integrate in t2 over (0, 1): t2^k -> 1 / (k + 1)
  Poly result(ctx);
  for (const auto& [m, c] : stage.terms()) {
    Mono m2 = m;
    int e = m2[t2];
    m2[t2] = 0;
    result.add_term(m2, c / rat(e + 1));
  }
  return result;
}

RatFn integrate_param_triangle(const RatFn& u, int t1, int t2) {
  for (const auto& [f, k] : u.den_factors())
    if (f.degree_in(t1) > 0 || f.degree_in(t2) > 0)
      throw std::invalid_argument("denominator must not involve the parameters");
  RatFn r(integrate_param_triangle(u.num(), t1, t2));
  for (const auto& [f, k] : u.den_factors()) r.push_den_factor(f, k);
  return r;
}

}  // namespace tric
