#include "ratfn.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tric {

namespace {

// Deterministic total order on polynomials for keeping factor lists sorted.
int poly_cmp(const Poly& a, const Poly& b) {
  if (int d = a.total_degree() - b.total_degree()) return d < 0 ? -1 : 1;
  if (int d = a.num_terms() - b.num_terms()) return d < 0 ? -1 : 1;
  auto collect = [](const Poly& p) {
    std::vector<std::pair<Mono, Rat>> v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  };
  auto va = collect(a), vb = collect(b);
  for (size_t i = 0; i < va.size(); ++i) {
    if (va[i].first != vb[i].first) return va[i].first < vb[i].first ? -1 : 1;
    if (va[i].second != vb[i].second) return va[i].second < vb[i].second ? -1 : 1;
  }
  return 0;
}

}  // namespace

void RatFn::push_den_factor(const Poly& prim, int power) {
  if (power == 0) return;
  for (auto& [f, k] : den_) {
    if (poly_cmp(f, prim) == 0) {
      k += power;
      if (k == 0) {
        den_.erase(std::remove_if(den_.begin(), den_.end(),
                                  [](const auto& e) { return e.second == 0; }),
                   den_.end());
      }
      return;
    }
  }
  den_.emplace_back(prim, power);
  std::sort(den_.begin(), den_.end(),
            [](const auto& x, const auto& y) { return poly_cmp(x.first, y.first) < 0; });
}

Poly RatFn::den_expanded() const {
  Poly d = Poly::constant(ctx(), rat(1));
  for (const auto& [f, k] : den_) d = d * f.pow(k);
  return d;
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  RatFn r;
  r.num_ = a.num_ * b.num_;
  if (r.num_.is_zero()) return RatFn(Poly::zero(a.ctx() ? a.ctx() : b.ctx()));
  r.den_ = a.den_;
  for (const auto& [f, k] : b.den_) r.push_den_factor(f, k);
  return r;
}

namespace {

bool same_den(const RatFn& a, const RatFn& b) {
  const auto& da = a.den_factors();
  const auto& db = b.den_factors();
  if (da.size() != db.size()) return false;
  for (size_t i = 0; i < da.size(); ++i) {
    if (da[i].second != db[i].second) return false;
    if (!(da[i].first == db[i].first)) return false;
  }
  return true;
}

}  // namespace

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFn r;
  if (same_den(a, b)) {
    r.num_ = a.num_ + b.num_;
    if (!r.num_.is_zero()) r.den_ = a.den_;
    return r;
  }
  // denominator = factor-wise max of multiplicities
  r.den_ = a.den_;
  for (const auto& [f, k] : b.den_) {
    bool found = false;
    for (auto& [g, m] : r.den_)
      if (g == f) {
        m = std::max(m, k);
        found = true;
        break;
      }
    if (!found) r.push_den_factor(f, k);
  }
  auto missing = [&r](const RatFn& x) {
    Poly mult = Poly::constant(r.den_.empty() ? x.ctx() : r.den_.front().first.ctx(), rat(1));
    for (const auto& [f, k] : r.den_) {
      int have = 0;
      for (const auto& [g, m] : x.den_factors())
        if (g == f) {
          have = m;
          break;
        }
      if (k > have) mult = mult * f.pow(k - have);
    }
    return mult;
  };
  r.num_ = a.num_ * missing(a) + b.num_ * missing(b);
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn RatFn::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
  auto [content, prim] = num_.primitive();
  RatFn r;
  r.num_ = den_expanded();
  r.num_ *= Rat(1 / content);
  if (!prim.is_constant()) r.push_den_factor(prim, 1);
  return r;
}

RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }

RatFn RatFn::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFn r = RatFn::constant(ctx(), rat(1));
  RatFn base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

RatFn RatFn::diff(int var) const {
  // d/dv [ n * prod f_i^{-k_i} ]
  //   = [ n' * prod f_j  -  n * sum_i k_i f_i' prod_{j != i} f_j ]
  //     / prod f_j^{k_j + 1}
  RatFn r;
  Poly all = Poly::constant(ctx(), rat(1));
  for (const auto& [f, k] : den_) all = all * f;
  Poly acc = num_.diff(var) * all;
  for (size_t i = 0; i < den_.size(); ++i) {
    Poly rest = Poly::constant(ctx(), rat(1));
    for (size_t j = 0; j < den_.size(); ++j)
      if (j != i) rest = rest * den_[j].first;
    acc -= num_ * den_[i].first.diff(var) * rest * rat(den_[i].second);
  }
  r.num_ = std::move(acc);
  if (r.num_.is_zero()) return r;
  for (const auto& [f, k] : den_) r.push_den_factor(f, k + 1);
  return r;
}

RatFn RatFn::diff(const std::string& var) const {
  int idx = ctx()->index_of(var);
  if (idx < 0) throw std::invalid_argument("unknown variable: " + var);
  return diff(idx);
}

RatFn RatFn::diff(const std::string& var, int order) const {
  RatFn r = *this;
  for (int i = 0; i < order; ++i) r = r.diff(var);
  return r;
}

Rat RatFn::eval(const std::vector<Rat>& point) const {
  Rat d(1);
  for (const auto& [f, k] : den_) {
    Rat v = f.eval(point);
    if (v == 0) throw std::domain_error("denominator vanishes at evaluation point");
    d *= rat_pow(v, k);
  }
  return Rat(num_.eval(point) / d);
}

bool RatFn::has_pole_at(const std::vector<Rat>& point) const {
  for (const auto& [f, k] : den_)
    if (f.eval(point) == 0) return true;
  return false;
}

RatFn RatFn::subst_var(const std::string& var, const Poly& value) const {
  int idx = ctx()->index_of(var);
  if (idx < 0) throw std::invalid_argument("unknown variable: " + var);
  RatFn r(num_.subst(idx, value));
  for (const auto& [f, k] : den_) {
    Poly fs = f.subst(idx, value);
    if (fs.is_zero()) throw std::domain_error("substitution vanishes on a denominator");
    auto [content, prim] = fs.primitive();
    r.num_ *= rat_pow(Rat(1 / content), k);
    if (!prim.is_constant()) r.push_den_factor(prim, k);
  }
  return r;
}

RatFn RatFn::subst_var(const std::string& var, const RatFn& value) const {
  if (!value.den_factors().empty())
    throw std::invalid_argument("replacement must be polynomial");
  return subst_var(var, value.num());
}

std::string RatFn::str() const {
  std::ostringstream os;
  os << "(" << num_.str() << ")";
  if (!den_.empty()) {
    os << " / [";
    bool first = true;
    for (const auto& [f, k] : den_) {
      if (!first) os << " * ";
      first = false;
      os << "(" << f.str() << ")";
      if (k > 1) os << "^" << k;
    }
    os << "]";
  }
  return os.str();
}

bool ratfn_equal(const RatFn& f, const RatFn& g) {
  if (f.is_zero()) return g.is_zero();
  if (g.is_zero()) return false;
  // cancel shared denominator factors, then cross-multiply what is left
  std::vector<std::pair<Poly, int>> df = f.den_factors(), dg = g.den_factors();
  for (auto& [pf, kf] : df) {
    for (auto& [pg, kg] : dg) {
      if (kf > 0 && kg > 0 && pf == pg) {
        int c = std::min(kf, kg);
        kf -= c;
        kg -= c;
      }
    }
  }
  Poly lhs = f.num();
  for (const auto& [pg, kg] : dg)
    if (kg > 0) lhs = lhs * pg.pow(kg);
  Poly rhs = g.num();
  for (const auto& [pf, kf] : df)
    if (kf > 0) rhs = rhs * pf.pow(kf);
  return lhs == rhs;
}

}  // namespace tric
