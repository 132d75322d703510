#include "poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tric {

namespace {

Mono mono_one(int nvars) { return Mono(static_cast<size_t>(nvars), char16_t(0)); }

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r = a;
  for (size_t i = 0; i < r.size(); ++i) {
    unsigned v = static_cast<unsigned>(a[i]) + static_cast<unsigned>(b[i]);
    if (v > 0xffff) throw std::overflow_error("monomial exponent overflow");
    r[i] = static_cast<char16_t>(v);
  }
  return r;
}

int mono_degree(const Mono& m) {
  int d = 0;
  for (char16_t e : m) d += static_cast<int>(e);
  return d;
}

// graded lexicographic order
bool mono_less(const Mono& a, const Mono& b) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

Poly Poly::constant(const VarCtxPtr& ctx, const Rat& c) {
  Poly p(ctx);
  if (c != 0) p.terms_.emplace(mono_one(ctx->size()), c);
  return p;
}

Poly Poly::var(const VarCtxPtr& ctx, int index, int power) {
  if (index < 0 || index >= ctx->size()) throw std::out_of_range("variable index");
  Poly p(ctx);
  if (power < 0) throw std::invalid_argument("negative power");
  Mono m = mono_one(ctx->size());
  m[index] = static_cast<char16_t>(power);
  p.terms_.emplace(std::move(m), rat(1));
  return p;
}

Poly Poly::var(const VarCtxPtr& ctx, const std::string& name, int power) {
  int idx = ctx->index_of(name);
  if (idx < 0) throw std::invalid_argument("unknown variable: " + name);
  return var(ctx, idx, power);
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

Rat Poly::constant_value() const {
  auto it = terms_.find(mono_one(ctx_->size()));
  return it == terms_.end() ? rat(0) : it->second;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

int Poly::min_degree_in(int var) const {
  if (terms_.empty()) return 0;
  int d = 0xffff;
  for (const auto& [m, c] : terms_) d = std::min(d, static_cast<int>(m[var]));
  return d;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (ctx_ == nullptr) ctx_ = o.ctx_;
  if (o.ctx_ && ctx_ != o.ctx_ && ctx_->names() != o.ctx_->names())
    throw std::invalid_argument("polynomial context mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (ctx_ == nullptr) ctx_ = o.ctx_;
  if (o.ctx_ && ctx_ != o.ctx_ && ctx_->names() != o.ctx_->names())
    throw std::invalid_argument("polynomial context mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

// Dense integer convolution fast path. Rational contents are pulled out so
// the inner loop runs on bare mpz accumulation with no gcds; the content
// product is applied to the surviving cells at the end.
bool mul_dense(const Poly& a, const Poly& b, Poly& out) {
  const int nv = a.ctx()->size();
  if (nv == 0) return false;
  std::vector<int> da(static_cast<size_t>(nv), 0), db(static_cast<size_t>(nv), 0);
  for (const auto& [m, c] : a.terms())
    for (int v = 0; v < nv; ++v)
      da[static_cast<size_t>(v)] = std::max(da[static_cast<size_t>(v)], static_cast<int>(m[v]));
  for (const auto& [m, c] : b.terms())
    for (int v = 0; v < nv; ++v)
      db[static_cast<size_t>(v)] = std::max(db[static_cast<size_t>(v)], static_cast<int>(m[v]));
  size_t cells = 1;
  std::vector<size_t> stride(static_cast<size_t>(nv), 0);
  for (int v = nv - 1; v >= 0; --v) {
    stride[static_cast<size_t>(v)] = cells;
    size_t w = static_cast<size_t>(da[static_cast<size_t>(v)] + db[static_cast<size_t>(v)] + 1);
    if (cells > (1u << 22) / w) return false;  // too large for the dense grid
    cells *= w;
  }
  if (cells > (1u << 22)) return false;
  // integer contents: lcm of denominators, gcd of numerators
  auto content_of = [nv](const Poly& p, std::vector<std::pair<Mono, Int>>& prim) {
    Int den_lcm(1), num_gcd(0);
    for (const auto& [m, c] : p.terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    prim.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
      Int scaled = c.get_num() * (den_lcm / c.get_den()) / num_gcd;
      prim.emplace_back(m, std::move(scaled));
    }
    (void)nv;
    return rat(num_gcd, den_lcm);
  };
  std::vector<std::pair<Mono, Int>> pa, pb;
  Rat content = content_of(a, pa) * content_of(b, pb);
  auto index_of = [&stride, nv](const Mono& m) {
    size_t idx = 0;
    for (int v = 0; v < nv; ++v)
      idx += static_cast<size_t>(m[v]) * stride[static_cast<size_t>(v)];
    return idx;
  };
  std::vector<Int> grid(cells);
  for (const auto& [ma, ca] : pa) {
    size_t base = index_of(ma);
    for (const auto& [mb, cb] : pb)
      mpz_addmul(grid[base + index_of(mb)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  for (size_t idx = 0; idx < cells; ++idx) {
    if (grid[idx] == 0) continue;
    Mono m(static_cast<size_t>(nv), char16_t(0));
    size_t rest = idx;
    for (int v = 0; v < nv; ++v) {
      size_t s = stride[static_cast<size_t>(v)];
      m[v] = static_cast<char16_t>(rest / s);
      rest %= s;
    }
    out.add_term(m, Rat(content * grid[idx]));
  }
  return true;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_ && a.ctx_->names() != b.ctx_->names())
    throw std::invalid_argument("polynomial context mismatch");
  Poly r(a.ctx_ ? a.ctx_ : b.ctx_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() > 8 && b.terms_.size() > 8 && mul_dense(a, b, r)) return r;
  r.terms_.reserve(a.terms_.size() * 2);
  // iterate the smaller map on the outside
  const Poly& outer = a.terms_.size() <= b.terms_.size() ? a : b;
  const Poly& inner = a.terms_.size() <= b.terms_.size() ? b : a;
  Rat prod;
  for (const auto& [ma, ca] : outer.terms_) {
    for (const auto& [mb, cb] : inner.terms_) {
      prod = ca * cb;
      r.add_term(mono_mul(ma, mb), prod);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [m, c] : terms_) {
    auto it = o.terms_.find(m);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly r = constant(ctx_, rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly Poly::diff(int var, int order) const {
  if (var < 0 || var >= ctx_->size()) throw std::invalid_argument("unknown variable");
  Poly r = *this;
  for (int k = 0; k < order; ++k) {
    Poly d(ctx_);
    for (const auto& [m, c] : r.terms_) {
      int e = m[var];
      if (e == 0) continue;
      Mono m2 = m;
      m2[var] = static_cast<char16_t>(e - 1);
      d.add_term(m2, c * e);
    }
    r = std::move(d);
  }
  return r;
}

Poly Poly::diff(const std::string& var, int order) const {
  int idx = ctx_->index_of(var);
  if (idx < 0) throw std::invalid_argument("unknown variable: " + var);
  return diff(idx, order);
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != ctx_->size())
    throw std::invalid_argument("evaluation point arity mismatch");
  const int nv = ctx_->size();
  // power tables per variable
  std::vector<int> dmax(static_cast<size_t>(nv), 0);
  for (const auto& [m, c] : terms_)
    for (int v = 0; v < nv; ++v)
      dmax[static_cast<size_t>(v)] = std::max(dmax[static_cast<size_t>(v)], static_cast<int>(m[v]));
  std::vector<std::vector<Rat>> pows(static_cast<size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    auto& tab = pows[static_cast<size_t>(v)];
    tab.resize(static_cast<size_t>(dmax[static_cast<size_t>(v)]) + 1);
    tab[0] = rat(1);
    for (int e = 1; e <= dmax[static_cast<size_t>(v)]; ++e)
      tab[static_cast<size_t>(e)] = tab[static_cast<size_t>(e - 1)] * point[static_cast<size_t>(v)];
  }
  Rat acc(0), t;
  for (const auto& [m, c] : terms_) {
    t = c;
    for (int v = 0; v < nv; ++v) {
      int e = m[v];
      if (e) t *= pows[static_cast<size_t>(v)][static_cast<size_t>(e)];
    }
    acc += t;
  }
  return acc;
}

Poly Poly::subst(int var, const Poly& value) const {
  if (value.ctx_ != ctx_ && value.ctx_->names() != ctx_->names())
    throw std::invalid_argument("substitution context mismatch");
  // group by exponent of var, Horner over decreasing exponent
  int dmax = degree_in(var);
  std::vector<Poly> by_exp(static_cast<size_t>(dmax) + 1, Poly(ctx_));
  for (const auto& [m, c] : terms_) {
    Mono m2 = m;
    int e = m2[var];
    m2[var] = 0;
    by_exp[static_cast<size_t>(e)].add_term(m2, c);
  }
  Poly acc = by_exp[static_cast<size_t>(dmax)];
  for (int e = dmax - 1; e >= 0; --e) acc = acc * value + by_exp[static_cast<size_t>(e)];
  return acc;
}

Poly Poly::subst(int var, const Rat& value) const {
  Poly r(ctx_);
  for (const auto& [m, c] : terms_) {
    Mono m2 = m;
    int e = m2[var];
    m2[var] = 0;
    r.add_term(m2, e ? Rat(c * rat_pow(value, e)) : c);
  }
  return r;
}

Poly Poly::lift(const VarCtxPtr& target) const {
  std::vector<int> map(static_cast<size_t>(ctx_->size()));
  for (int i = 0; i < ctx_->size(); ++i) {
    int j = target->index_of(ctx_->name(i));
    if (j < 0) throw std::invalid_argument("lift target misses variable " + ctx_->name(i));
    map[static_cast<size_t>(i)] = j;
  }
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    Mono m2(static_cast<size_t>(target->size()), char16_t(0));
    for (int i = 0; i < ctx_->size(); ++i) m2[map[static_cast<size_t>(i)]] = m[i];
    r.add_term(m2, c);
  }
  return r;
}

Mono Poly::leading_monomial() const {
  if (terms_.empty()) return mono_one(ctx_->size());
  auto it = terms_.begin();
  Mono best = it->first;
  for (++it; it != terms_.end(); ++it)
    if (mono_less(best, it->first)) best = it->first;
  return best;
}

std::pair<Rat, Poly> Poly::primitive() const {
  if (terms_.empty()) return {rat(1), *this};
  Int num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat content = rat(num_gcd, den_lcm);
  Rat lead = terms_.at(leading_monomial());
  if (lead < 0) content = -content;
  Poly prim = *this;
  Rat inv = 1 / content;
  prim *= inv;
  return {content, prim};
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::vector<Mono> monos;
  monos.reserve(terms_.size());
  for (const auto& [m, c] : terms_) monos.push_back(m);
  std::sort(monos.begin(), monos.end(), [](const Mono& a, const Mono& b) { return mono_less(b, a); });
  std::ostringstream os;
  bool first = true;
  for (const auto& m : monos) {
    const Rat& c = terms_.at(m);
    if (!first) os << (c >= 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    Rat ac = abs(c);
    bool printed = false;
    if (ac != 1 || mono_degree(m) == 0) {
      os << rat_str(ac);
      printed = true;
    }
    for (int v = 0; v < ctx_->size(); ++v) {
      int e = m[v];
      if (!e) continue;
      if (printed) os << "*";
      os << ctx_->name(v);
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> unify(const Poly& a, const Poly& b) {
  if (a.ctx() == b.ctx() || a.ctx()->names() == b.ctx()->names()) return {a, b};
  std::vector<std::string> names = a.ctx()->names();
  for (const auto& n : b.ctx()->names())
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  auto ctx = VarCtx::make(std::move(names));
  return {a.lift(ctx), b.lift(ctx)};
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOpKind kind) {
  auto [x, y] = unify(a, b);
  switch (kind) {
    case PolyOpKind::add: return x + y;
    case PolyOpKind::sub: return x - y;
    case PolyOpKind::mul: return x * y;
  }
  throw std::logic_error("unreachable");
}

}  // namespace tric
