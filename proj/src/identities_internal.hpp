#pragma once

#include <chrono>
#include <functional>
#include <sstream>

#include "identities.hpp"
#include "ratfn.hpp"

namespace tric::detail {

// Expression carrying, next to its exact value, a structural certificate of
// nonnegativity / strict positivity on the ambient region: sums and products
// of nonnegative things stay nonnegative, even powers are nonnegative,
// quotients need a positive denominator. Region knowledge enters only
// through the atoms a lemma declares.
struct Px {
  RatFn v;
  bool nn = false;
  bool pos = false;
};

inline Px atom_pos(RatFn v) { return Px{std::move(v), true, true}; }
inline Px atom_nn(RatFn v) { return Px{std::move(v), true, false}; }
inline Px px(RatFn v) { return Px{std::move(v), false, false}; }
inline Px lit(const VarCtxPtr& ctx, const Rat& c) {
  return Px{RatFn::constant(ctx, c), c >= 0, c > 0};
}
inline Px lit(const VarCtxPtr& ctx, long c) { return lit(ctx, rat(c)); }

inline Px operator+(const Px& a, const Px& b) {
  return Px{a.v + b.v, a.nn && b.nn, (a.pos && b.nn) || (a.nn && b.pos)};
}
inline Px operator-(const Px& a, const Px& b) { return Px{a.v - b.v, false, false}; }
inline Px operator-(const Px& a) { return Px{-a.v, false, false}; }
inline Px operator*(const Px& a, const Px& b) {
  return Px{a.v * b.v, a.nn && b.nn, a.pos && b.pos};
}
inline Px operator/(const Px& a, const Px& b) {
  return Px{a.v / b.v, a.nn && b.pos, a.pos && b.pos};
}
inline Px operator+(const Px& a, long c) { return a + lit(a.v.ctx(), c); }
inline Px operator+(long c, const Px& a) { return a + c; }
inline Px operator-(const Px& a, long c) { return a - lit(a.v.ctx(), c); }
inline Px operator-(long c, const Px& a) { return lit(a.v.ctx(), c) - a; }
inline Px operator*(long c, const Px& a) { return lit(a.v.ctx(), c) * a; }
inline Px operator*(const Px& a, long c) { return c * a; }
inline Px operator*(const Rat& c, const Px& a) { return lit(a.v.ctx(), c) * a; }
inline Px operator/(const Px& a, long c) { return a / lit(a.v.ctx(), c); }
inline Px operator/(long c, const Px& a) { return lit(a.v.ctx(), c) / a; }

inline Px sqp(const Px& a) { return Px{sq(a.v), true, a.pos}; }
inline Px powp(const Px& a, int e) {
  Px r{a.v.pow(e), false, false};
  if (e % 2 == 0) {
    r.nn = true;
    r.pos = a.pos;
  } else {
    r.nn = a.nn;
    r.pos = a.pos;
  }
  return r;
}

// (a, b) box; b_hi <= 0 disables the b upper bound, a grid never touches b=0.
struct Region {
  Rat a_lo, a_hi;
  Rat b_hi;
};

// Accumulates sub-check failures for one lemma.
class Checker {
 public:
  explicit Checker(std::string lemma_id, std::string method)
      : case_{std::move(lemma_id), std::move(method), "passed", "", 0},
        start_(std::chrono::steady_clock::now()) {}

  void expect_equal(const std::string& what, const RatFn& f, const RatFn& g) {
    ++checked_;
    if (!ratfn_equal(f, g)) fail(what + ": expansion of the difference is nonzero");
  }
  void expect_zero(const std::string& what, const RatFn& f) {
    ++checked_;
    if (!f.is_zero()) {
      // cross-expanded residual: report the numerator
      fail(what + ": nonzero residual " + f.num().str().substr(0, 160));
    }
  }
  void expect_structural_nn(const std::string& what, const Px& x) {
    ++checked_;
    if (!x.nn) fail(what + ": no structural nonnegativity certificate");
  }
  void expect_structural_pos(const std::string& what, const Px& x) {
    ++checked_;
    if (!x.pos) fail(what + ": no structural positivity certificate");
  }
  void expect_true(const std::string& what, bool ok) {
    ++checked_;
    if (!ok) fail(what);
  }

  // exact-sign scan over an (na x nb) rational grid of the region
  void scan_nonneg(const std::string& what, const RatFn& v, const Region& r, int na,
                   int nb, bool strict);

  IdentityCase finish() {
    auto end = std::chrono::steady_clock::now();
    case_.seconds = std::chrono::duration<double>(end - start_).count();
    if (case_.status == "passed") {
      std::ostringstream os;
      os << checked_ << " checks, zero residuals";
      case_.detail = os.str();
    }
    return case_;
  }

  void fail(const std::string& why) {
    case_.status = "failed";
    if (!case_.detail.empty()) case_.detail += "; ";
    case_.detail += why;
  }

 private:
  IdentityCase case_;
  int checked_ = 0;
  std::chrono::steady_clock::time_point start_;
};

// deterministic rational sample points for Schwartz-Zippel style spot checks:
// numerators up to 1e6, denominators up to 2^16, poles rejected by callers
Rat random_rat(uint64_t& state);

IdentityCase check_lemma_14_9(uint64_t seed);
IdentityCase check_lemma_14_11();
IdentityCase check_element_consistency(const std::string& lemma_id);
IdentityCase check_orthogonality(const std::string& lemma_id, uint64_t seed);

}  // namespace tric::detail
