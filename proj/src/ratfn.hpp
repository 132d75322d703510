#pragma once

#include <utility>
#include <vector>

#include "poly.hpp"

namespace tric {

// Quotient of multivariate polynomials. The denominator is kept as a product
// of primitive factors with multiplicities; no polynomial gcd is ever taken.
// Equality is decided by cross-multiplied expansion (common den factors are
// cancelled first, which keeps the products small in practice).
class RatFn {
 public:
  RatFn() = default;
  explicit RatFn(Poly num) : num_(std::move(num)) {}

  static RatFn constant(const VarCtxPtr& ctx, const Rat& c) {
    return RatFn(Poly::constant(ctx, c));
  }
  static RatFn var(const VarCtxPtr& ctx, const std::string& name, int power = 1) {
    return RatFn(Poly::var(ctx, name, power));
  }

  const Poly& num() const { return num_; }
  const std::vector<std::pair<Poly, int>>& den_factors() const { return den_; }
  const VarCtxPtr& ctx() const { return num_.ctx(); }

  bool is_zero() const { return num_.is_zero(); }
  Poly den_expanded() const;

  RatFn operator-() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

  RatFn inverse() const;
  RatFn pow(int e) const;
  RatFn diff(int var) const;
  RatFn diff(const std::string& var) const;
  RatFn diff(const std::string& var, int order) const;

  // Exact value; throws std::domain_error when a denominator factor vanishes.
  Rat eval(const std::vector<Rat>& point) const;
  // True when some denominator factor vanishes at the point.
  bool has_pole_at(const std::vector<Rat>& point) const;

  // Substitute a polynomial for one variable (the replacement must have an
  // empty denominator when given as a RatFn).
  RatFn subst_var(const std::string& var, const Poly& value) const;
  RatFn subst_var(const std::string& var, const RatFn& value) const;

  std::string str() const;

  // Internal: append a primitive factor (content folded into the numerator by
  // the caller).
  void push_den_factor(const Poly& prim, int power);

 private:
  Poly num_;
  std::vector<std::pair<Poly, int>> den_;
};

// f == g as rational functions (cross-multiplication, full expansion).
bool ratfn_equal(const RatFn& f, const RatFn& g);

// Convenience for transcriptions.
inline RatFn sq(const RatFn& x) { return x * x; }
inline RatFn operator*(long c, const RatFn& f) {
  return RatFn::constant(f.ctx(), rat(c)) * f;
}
inline RatFn operator*(const RatFn& f, long c) { return c * f; }
inline RatFn operator*(const Rat& c, const RatFn& f) {
  return RatFn::constant(f.ctx(), c) * f;
}
inline RatFn operator*(const RatFn& f, const Rat& c) { return c * f; }
inline RatFn operator+(const RatFn& f, long c) {
  return f + RatFn::constant(f.ctx(), rat(c));
}
inline RatFn operator+(long c, const RatFn& f) { return f + c; }
inline RatFn operator+(const RatFn& f, const Rat& c) {
  return f + RatFn::constant(f.ctx(), c);
}
inline RatFn operator+(const Rat& c, const RatFn& f) { return f + c; }
inline RatFn operator-(const RatFn& f, long c) { return f + (-c); }
inline RatFn operator-(long c, const RatFn& f) {
  return RatFn::constant(f.ctx(), rat(c)) - f;
}
inline RatFn operator-(const RatFn& f, const Rat& c) { return f + Rat(-c); }
inline RatFn operator-(const Rat& c, const RatFn& f) {
  return RatFn::constant(f.ctx(), c) - f;
}
inline RatFn operator/(const RatFn& f, long c) {
  return f * RatFn::constant(f.ctx(), rat(1, c));
}
inline RatFn operator/(long c, const RatFn& f) {
  return RatFn::constant(f.ctx(), rat(c)) / f;
}
inline RatFn operator/(const RatFn& f, const Rat& c) {
  return f * RatFn::constant(f.ctx(), Rat(1 / c));
}
inline RatFn operator/(const Rat& c, const RatFn& f) {
  return RatFn::constant(f.ctx(), c) / f;
}

}  // namespace tric
