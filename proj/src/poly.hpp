#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "rat.hpp"

namespace tric {

// Ordered variable list shared by all polynomials of one computation.
// Expressions over at most a handful of variables; exponents fit uint16.
class VarCtx {
 public:
  explicit VarCtx(std::vector<std::string> names) : names_(std::move(names)) {}
  static std::shared_ptr<const VarCtx> make(std::vector<std::string> names) {
    return std::make_shared<const VarCtx>(std::move(names));
  }
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == name) return i;
    return -1;
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

using VarCtxPtr = std::shared_ptr<const VarCtx>;

// Dense exponent vector keyed over the ctx variable list. u16string gives
// small-buffer storage, hashing and ordering for free.
using Mono = std::u16string;

class Poly {
 public:
  Poly() = default;
  explicit Poly(VarCtxPtr ctx) : ctx_(std::move(ctx)) {}

  static Poly zero(const VarCtxPtr& ctx) { return Poly(ctx); }
  static Poly constant(const VarCtxPtr& ctx, const Rat& c);
  static Poly var(const VarCtxPtr& ctx, int index, int power = 1);
  static Poly var(const VarCtxPtr& ctx, const std::string& name, int power = 1);

  const VarCtxPtr& ctx() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (the value when every variable is zero).
  Rat constant_value() const;
  int num_terms() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;
  int degree_in(int var) const;
  int min_degree_in(int var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& c);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

  bool operator==(const Poly& o) const;

  Poly pow(int e) const;
  Poly diff(int var, int order = 1) const;
  Poly diff(const std::string& var, int order = 1) const;

  Rat eval(const std::vector<Rat>& point) const;
  // Substitute value (same ctx) for the given variable.
  Poly subst(int var, const Poly& value) const;
  // Fix one variable to a rational value; result stays in the same ctx.
  Poly subst(int var, const Rat& value) const;
  // Map this polynomial into a context that contains all our variables.
  Poly lift(const VarCtxPtr& target) const;

  // Positive integer content and sign normalization: returns c (rational)
  // and the primitive part p with integer coprime coefficients and positive
  // leading coefficient in graded-lex order, such that *this == c * p.
  std::pair<Rat, Poly> primitive() const;

  // Leading monomial in graded-lex order; terms_ iteration order is
  // unspecified, use only through this.
  Mono leading_monomial() const;
  const std::unordered_map<Mono, Rat>& terms() const { return terms_; }

  std::string str() const;

  // Adds c * x^m; prunes a resulting zero coefficient.
  void add_term(const Mono& m, const Rat& c);

 private:
  VarCtxPtr ctx_;
  std::unordered_map<Mono, Rat> terms_;
};

// Integer-convenience mixed operators, used heavily in transcriptions.
inline Poly operator*(long c, const Poly& p) { return p * rat(c); }
inline Poly operator*(const Poly& p, long c) { return p * rat(c); }
inline Poly operator+(const Poly& p, long c) {
  return p + Poly::constant(p.ctx(), rat(c));
}
inline Poly operator+(long c, const Poly& p) { return p + c; }
inline Poly operator-(const Poly& p, long c) { return p + (-c); }
inline Poly operator-(long c, const Poly& p) {
  return Poly::constant(p.ctx(), rat(c)) - p;
}

// If the two polynomials live in different contexts, rebuild both over the
// union variable list (match by name); otherwise returns them unchanged.
std::pair<Poly, Poly> unify(const Poly& a, const Poly& b);

enum class PolyOpKind { add, sub, mul };
Poly poly_arith(const Poly& a, const Poly& b, PolyOpKind kind);

}  // namespace tric
