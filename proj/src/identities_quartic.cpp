#include <map>

#include "forms.hpp"
#include "identities_internal.hpp"
#include "manifest_data.hpp"

namespace tric {

namespace {

uint64_t fnv1a(const char* text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const char* p = text; *p; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr uint64_t kPinnedManifestChecksum = 0xa1aaa476392b0205ULL;

// Big coefficients live in one manifest; construction code references them
// by literal digits and the table rejects unknown literals and unused
// entries, so either side drifting fails loudly.
class BigTable {
 public:
  BigTable() {
    if (fnv1a(detail::kQuarticManifestText) != kPinnedManifestChecksum)
      throw std::runtime_error("coefficient manifest checksum mismatch");
    std::string text = detail::kQuarticManifestText;
    size_t pos = 0;
    while (pos < text.size()) {
      size_t eol = text.find('\n', pos);
      if (eol == std::string::npos) eol = text.size();
      std::string line = text.substr(pos, eol - pos);
      pos = eol + 1;
      if (line.empty() || line[0] == '#') continue;
      uses_[line] = 0;
    }
  }

  Rat get(const std::string& digits) {
    auto it = uses_.find(digits);
    if (it == uses_.end())
      throw std::runtime_error("coefficient not in manifest: " + digits);
    ++it->second;
    return rat(int_parse(digits), Int(1));
  }

  bool all_used() const {
    for (const auto& [k, n] : uses_)
      if (n == 0) return false;
    return true;
  }

 private:
  std::map<std::string, int> uses_;
};

}  // namespace

uint64_t quartic_manifest_checksum() { return fnv1a(detail::kQuarticManifestText); }

namespace detail {

namespace {

// ---------------------------------------------------------------------------
// check 14.9: decomposition of the quartic degenerate-shape quadratic form.
// The same construction is instantiated twice: with linear forms over the 12
// dofs (scalar = rational functions of (a, b)) for the Hessian-level
// certificate, and with plain rationals for an independent evaluation of the
// expression trees at a random point.
// ---------------------------------------------------------------------------

template <class S, class V>
struct Sides149 {
  quad_of_t<V> H, H2;
  S D, E, q1, q2, q3, r1, r2, r3, c1, c2, c3;
};

template <class S, class V>
Sides149<S, V> build_149(const S& a, const S& b, const std::array<V, 12>& x,
                         const V& vzero) {
  const V &u1 = x[0], &u2 = x[1], &u3 = x[2];
  const V &w1 = x[3], &w2 = x[4], &w3 = x[5], &w4 = x[6], &w5 = x[7], &w6 = x[8],
          &w7 = x[9], &w8 = x[10], &w9 = x[11];
  using Q = quad_of_t<V>;
  Sides149<S, V> out;

  S Sarea = b / 2;
  S c1 = 2 * ((1 - a) * (1 - a) + b * b) / b;
  S c2 = 2 * (a * a + b * b) / b;
  S c3 = 2 / b;
  S s4 = Sarea / 4;

  V nw7 = -w7, nw8 = -w8, nw9 = -w9;
  Q G1 = f_beta_1_generic(s4, c1, c2, c3, vzero, u3, u2, w7, w5, w3) +
         f_beta_1_generic(s4, c1, c2, c3, u3, vzero, u1, w1, w8, w6) +
         f_beta_1_generic(s4, c1, c2, c3, u2, u1, vzero, w4, w2, w9) +
         f_beta_1_generic(s4, c1, c2, c3, u1, u2, u3, nw7, nw8, nw9);
  Q G2 = f_beta_2_generic(s4, c1, c2, c3, vzero, u3, u2, w7, w5, w3) +
         f_beta_2_generic(s4, c1, c2, c3, u3, vzero, u1, w1, w8, w6) +
         f_beta_2_generic(s4, c1, c2, c3, u2, u1, vzero, w4, w2, w9) +
         f_beta_2_generic(s4, c1, c2, c3, u1, u2, u3, nw7, nw8, nw9);

  S D = c1 * c2 * c3 / 16 - 41 * (c1 + c2 + c3) / rat(1080) - (1 / c1 + 1 / c2 + 1 / c3) / 5;
  S k48 = 48 * (c1 * c1) * (c2 * c2) * (c3 * c3);
  S SD = Sarea * D;
  out.H = (G2 * SD - G1) * k48;

  S E = 48 * D - c1 - c2 - c3;
  S q1 = 2 * E + 2 * c1 + c2 + c3;
  S q2 = 2 * E + 2 * c2 + c3 + c1;
  S q3 = 2 * E + 2 * c3 + c1 + c2;
  S r1den = 2 * E + c1 + 2 * c2 + 2 * c3;
  S r2den = 2 * E + c2 + 2 * c3 + 2 * c1;
  S r3den = 2 * E + c3 + 2 * c1 + 2 * c2;
  S r1 = c1 * (12 * D * (E + c1) + 1) / (r1den * r1den);
  S r2 = c2 * (12 * D * (E + c2) + 1) / (r2den * r2den);
  S r3 = c3 * (12 * D * (E + c3) + 1) / (r3den * r3den);

  S c23 = c2 * c3, c31 = c3 * c1, c12 = c1 * c2;
  V v1 = c23 * (w1 + w4);
  V v2 = c31 * (w2 + w5);
  V v3 = c12 * (w3 + w6);
  V v4 = w1 + w2 - w3 + w4 - w5 + w6 + 2 * (w8 + w9);
  V v5 = w2 + w3 - w1 + w5 - w6 + w4 + 2 * (w9 + w7);
  V v6 = w3 + w1 - w2 + w6 - w4 + w5 + 2 * (w7 + w8);
  S ccc = c1 * c2 * c3;
  S fourq1 = 4 * q1, fourq2 = 4 * q2, fourq3 = 4 * q3;
  S d23 = c2 - c3, d31 = c3 - c1, d12 = c1 - c2;
  V v7 = ccc * (fourq1 * (w4 - w8 + w9) - q1 * (v5 - v6) - d23 * v4);
  V v8 = ccc * (fourq2 * (w5 - w9 + w7) - q2 * (v6 - v4) - d31 * v5);
  V v9 = ccc * (fourq3 * (w6 - w7 + w8) - q3 * (v4 - v5) - d12 * v6);

  S D96 = 96 * D;
  Q h2 = G1 - G1;  // zero of the right shape
  {
    S m1 = 6 * D * (c1 - c2 - c3);
    S m2 = 6 * D * (c2 - c3 - c1);
    S m3 = 6 * D * (c3 - c1 - c2);
    V l1 = ccc * (q1 * (u1 - u2 - u3) - m1 * v4) - D96 * v1;
    V l2 = ccc * (q2 * (u2 - u3 - u1) - m2 * v5) - D96 * v2;
    V l3 = ccc * (q3 * (u3 - u1 - u2) - m3 * v6) - D96 * v3;
    S co1 = 16 / (c23 * q1), co2 = 16 / (c31 * q2), co3 = 16 / (c12 * q3);
    h2 = h2 + (l1 * l1) * co1 + (l2 * l2) * co2 + (l3 * l3) * co3;
  }
  {
    S e1 = d23 * (D96 - c1), e2 = d31 * (D96 - c2), e3 = d12 * (D96 - c3);
    V l1 = q1 * (2 * (c1 * v1) - c2 * v2 + c3 * v3) + e1 * v1 - v7;
    V l2 = q2 * (2 * (c2 * v2) - c3 * v3 + c1 * v1) + e2 * v2 - v8;
    V l3 = q3 * (2 * (c3 * v3) - c1 * v1 + c2 * v2) + e3 * v3 - v9;
    S co1 = 1 / (c23 * q1), co2 = 1 / (c31 * q2), co3 = 1 / (c12 * q3);
    h2 = h2 + (l1 * l1) * co1 + (l2 * l2) * co2 + (l3 * l3) * co3;
  }
  {
    S e1 = r1 * c23 * (D96 - c1), e2 = r2 * c31 * (D96 - c2), e3 = r3 * c12 * (D96 - c3);
    V l1 = v1 + e1 * v4;
    V l2 = v2 + e2 * v5;
    V l3 = v3 + e3 * v6;
    S co1 = 4 * c1 / (q1 * r1), co2 = 4 * c2 / (q2 * r2), co3 = 4 * c3 / (q3 * r3);
    h2 = h2 + (l1 * l1) * co1 + (l2 * l2) * co2 + (l3 * l3) * co3;
  }
  {
    S co1 = 8 * (q1 * c1 + 3 * D * (c2 + c3) * (d23 * d23)) / (q1 * (12 * D * (E + c1) + 1));
    S co2 = 8 * (q2 * c2 + 3 * D * (c3 + c1) * (d31 * d31)) / (q2 * (12 * D * (E + c2) + 1));
    S co3 = 8 * (q3 * c3 + 3 * D * (c1 + c2) * (d12 * d12)) / (q3 * (12 * D * (E + c3) + 1));
    h2 = h2 + (v1 * v1) * co1 + (v2 * v2) * co2 + (v3 * v3) * co3;
  }
  {
    S co1 = 2 * (d23 * d23 + 32) / (E * (E + c1)) * (c1 + E / (12 * D * (E + c1) + 1));
    S co2 = 2 * (d31 * d31 + 32) / (E * (E + c2)) * (c2 + E / (12 * D * (E + c2) + 1));
    S co3 = 2 * (d12 * d12 + 32) / (E * (E + c3)) * (c3 + E / (12 * D * (E + c3) + 1));
    h2 = h2 + (v1 * v1) * co1 + (v2 * v2) * co2 + (v3 * v3) * co3;
  }
  {
    S co1 = 2 * (8 * E * (3 * D * c1 - 1) * c1 - d23 * d23 - 32) / E;
    S co2 = 2 * (8 * E * (3 * D * c2 - 1) * c2 - d31 * d31 - 32) / E;
    S co3 = 2 * (8 * E * (3 * D * c3 - 1) * c3 - d12 * d12 - 32) / E;
    S cx12 = 96 * D * (c12 - 4), cx23 = 96 * D * (c23 - 4), cx31 = 96 * D * (c31 - 4);
    h2 = h2 + (v1 * v1) * co1 + (v2 * v2) * co2 + (v3 * v3) * co3 + (v1 * v2) * cx12 +
         (v2 * v3) * cx23 + (v3 * v1) * cx31;
  }
  out.H2 = h2;
  out.D = D;
  out.E = E;
  out.q1 = q1;
  out.q2 = q2;
  out.q3 = q3;
  out.r1 = r1;
  out.r2 = r2;
  out.r3 = r3;
  out.c1 = c1;
  out.c2 = c2;
  out.c3 = c3;
  return out;
}

// E-positivity identity: 45 b^3 E / 4 equals a combination that is visibly
// nonnegative for 0 <= a <= 1/2, 0 < b <= 1/10.
Px e_identity_rhs(const VarCtxPtr& ctx) {
  RatFn a = RatFn::var(ctx, "a"), b = RatFn::var(ctx, "b");
  RatFn d1 = 1 - a;
  Px pa = atom_nn(a), pb = atom_pos(b), pd1 = atom_pos(1 - a), pd2 = atom_nn(1 - 2 * a);
  Px p100 = atom_nn(1 - 100 * sq(b));
  Px c1p = 2 * (sqp(pd1) + sqp(pb)) / pb;
  Px c2p = 2 * (sqp(pa) + sqp(pb)) / pb;
  Px ad1mb2_sq = sqp(px(a * d1 - sq(b)));
  return 108 * ad1mb2_sq * (1 + sqp(pd2) + 4 * sqp(pb)) / (c1p * c2p) +
         270 * sqp(pa * pd1) +
         sqp(pb) * (47 * pa * pd1 + 88 * sqp(pd2) + p100) + 81 * powp(pb, 4);
}

}  // namespace

IdentityCase check_lemma_14_9(uint64_t seed) {
  Checker c("14.9", "hessian_reduce_expand");
  auto ctx = VarCtx::make({"a", "b"});
  RatFn a = RatFn::var(ctx, "a"), b = RatFn::var(ctx, "b");

  // symbolic route: quadratic forms over the 12 dofs
  using V = LinF<RatFn, 12>;
  RatFn zero(Poly::zero(ctx)), one = RatFn::constant(ctx, rat(1));
  std::array<V, 12> dofs;
  for (int i = 0; i < 12; ++i) dofs[static_cast<size_t>(i)] = V::unit(zero, one, i);
  auto sides = build_149<RatFn, V>(a, b, dofs, V::zero(zero));

  // E-positivity identity and the structural certificate it carries
  Px rhs = e_identity_rhs(ctx);
  c.expect_equal("45 b^3 E / 4 identity", 45 * b.pow(3) * sides.E / 4, rhs.v);
  c.expect_structural_nn("E identity rhs nonneg", rhs);
  c.scan_nonneg("E identity rhs positive", rhs.v, Region{rat(0), rat(1, 2), rat(1, 10)},
                200, 200, true);

  // positivity of the auxiliary scalars, assuming only E > 0 from above
  {
    Px pb = atom_pos(b), pa = atom_nn(a), pd1 = atom_pos(1 - a);
    Px pc1 = 2 * (sqp(pd1) + sqp(pb)) / pb;
    Px pc2 = 2 * (sqp(pa) + sqp(pb)) / pb;
    Px pc3 = 2 / pb;
    Px pE = atom_pos(sides.E);
    Px pD = (pE + pc1 + pc2 + pc3) / 48;
    c.expect_equal("D from E", pD.v, sides.D);
    c.expect_structural_pos("D positive", pD);
    Px pq1 = 2 * pE + 2 * pc1 + pc2 + pc3;
    Px pq2 = 2 * pE + 2 * pc2 + pc3 + pc1;
    Px pq3 = 2 * pE + 2 * pc3 + pc1 + pc2;
    c.expect_equal("q1 value", pq1.v, sides.q1);
    c.expect_equal("q2 value", pq2.v, sides.q2);
    c.expect_equal("q3 value", pq3.v, sides.q3);
    c.expect_structural_pos("q1 positive", pq1);
    c.expect_structural_pos("q2 positive", pq2);
    c.expect_structural_pos("q3 positive", pq3);
    Px pr1 = pc1 * (12 * pD * (pE + pc1) + 1) / sqp(2 * pE + pc1 + 2 * pc2 + 2 * pc3);
    Px pr2 = pc2 * (12 * pD * (pE + pc2) + 1) / sqp(2 * pE + pc2 + 2 * pc3 + 2 * pc1);
    Px pr3 = pc3 * (12 * pD * (pE + pc3) + 1) / sqp(2 * pE + pc3 + 2 * pc1 + 2 * pc2);
    c.expect_equal("r1 value", pr1.v, sides.r1);
    c.expect_equal("r2 value", pr2.v, sides.r2);
    c.expect_equal("r3 value", pr3.v, sides.r3);
    c.expect_structural_pos("r1 positive", pr1);
    c.expect_structural_pos("r2 positive", pr2);
    c.expect_structural_pos("r3 positive", pr3);
    // coefficients of the square groups
    Px co_quads = 16 / (pc2 * pc3 * pq1);
    c.expect_structural_pos("group-1 coefficient", co_quads);
    Px co4 = 8 * (pq1 * pc1 + 3 * pD * (pc2 + pc3) * sqp(px(sides.c2 - sides.c3))) /
             (pq1 * (12 * pD * (pE + pc1) + 1));
    c.expect_structural_pos("group-4 coefficient", co4);
    Px co5 = 2 * (sqp(px(sides.c2 - sides.c3)) + 32) / (pE * (pE + pc1)) *
             (pc1 + pE / (12 * pD * (pE + pc1) + 1));
    c.expect_structural_pos("group-5 coefficient", co5);
    Px co3 = 4 * pc1 / (pq1 * pr1);
    c.expect_structural_pos("group-3 coefficient", co3);
  }

  // 78 Hessian-entry identities in (a, b) alone
  int bad = 0;
  for (int p = 0; p < 12; ++p)
    for (int q = p; q < 12; ++q) {
      if (!ratfn_equal(sides.H.m[p][q], sides.H2.m[p][q])) {
        ++bad;
        c.fail("Hessian entry (" + std::to_string(p + 1) + "," + std::to_string(q + 1) +
               ") differs");
      }
    }
  c.expect_true("all 78 Hessian entries match", bad == 0);

  // independent route: evaluate both expression trees at a random exact
  // rational 14-tuple (plus the zero vector for the homogeneity check)
  uint64_t state = seed;
  Rat av = rat(static_cast<long>(state % 501), 1000);  // in [0, 1/2]
  Rat bv = rat(1, 17);
  std::array<Rat, 12> xv;
  for (auto& v : xv) v = random_rat(state);
  auto num = build_149<Rat, Rat>(av, bv, xv, rat(0));
  c.expect_true("tree evaluation H == H2 at a random 14-tuple", num.H == num.H2);
  std::array<Rat, 12> zerov;
  zerov.fill(rat(0));
  auto numz = build_149<Rat, Rat>(av, bv, zerov, rat(0));
  c.expect_true("H vanishes at the zero dof vector", numz.H == 0);
  c.expect_true("H2 vanishes at the zero dof vector", numz.H2 == 0);
  for (int i = 0; i < 12; ++i) {
    std::array<Rat, 12> e = zerov, me = zerov;
    e[static_cast<size_t>(i)] = rat(1);
    me[static_cast<size_t>(i)] = rat(-1);
    auto fp = build_149<Rat, Rat>(av, bv, e, rat(0));
    auto fm = build_149<Rat, Rat>(av, bv, me, rat(0));
    if (!(fp.H == fm.H && fp.H2 == fm.H2)) {
      c.fail("linear part present at dof " + std::to_string(i + 1));
      break;
    }
  }
  return c.finish();
}

// ---------------------------------------------------------------------------
// check 14.11: the four explicit identities behind the 3x3 positivity
// criterion applied to the degenerate-shape form (0 <= a <= 1/2,
// 0 < b <= 1/10).
// ---------------------------------------------------------------------------

IdentityCase check_lemma_14_11() {
  Checker c("14.11", "expand");
  BigTable bigs;
  auto ctx = VarCtx::make({"a", "b"});
  RatFn a = RatFn::var(ctx, "a"), b = RatFn::var(ctx, "b");
  RatFn d1 = 1 - a, d2 = 1 - 2 * a;
  RatFn c1 = 2 * (sq(1 - a) + sq(b)) / b;
  RatFn c2 = 2 * (sq(a) + sq(b)) / b;
  RatFn c3 = 2 / b;
  RatFn D = c1 * c2 * c3 / 16 - 41 * (c1 + c2 + c3) / 1080 - (1 / c1 + 1 / c2 + 1 / c3) / 5;
  RatFn E = 48 * D - c1 - c2 - c3;
  RatFn A1 = 8 * E * (3 * D * c1 - 1) * c1 - sq(c2 - c3) - 32;
  RatFn A2 = 8 * E * (3 * D * c2 - 1) * c2 - sq(c3 - c1) - 32;
  RatFn A3 = 8 * E * (3 * D * c3 - 1) * c3 - sq(c1 - c2) - 32;
  RatFn B1 = 24 * D * E * (c2 * c3 - 4);
  RatFn B2 = 24 * D * E * (c3 * c1 - 4);
  RatFn B3 = 24 * D * E * (c1 * c2 - 4);

  Px pa = atom_nn(a), pb = atom_pos(b), pd1 = atom_pos(1 - a), pd2 = atom_nn(1 - 2 * a);
  Px p100 = atom_nn(1 - 100 * sq(b));
  Px pc1 = 2 * (sqp(pd1) + sqp(pb)) / pb;
  Px pc2 = 2 * (sqp(pa) + sqp(pb)) / pb;
  Px ad1 = pa * pd1;
  Px pb2 = sqp(pb);
  auto bpow = [&](int e) { return powp(pb, e); };
  Region thin{rat(0), rat(1, 2), rat(1, 10)};

  // first identity: b^6 B1 B2 B3
  c.expect_equal("B1B2B3 identity", b.pow(6) * B1 * B2 * B3,
                 rat(884736) * D.pow(3) * E.pow(3) * sq(a) * sq(d1) * sq(a * d1 - sq(b)));

  // second identity: 2025 b^6 A3 / (c1 c2)
  {
    Px g = 1492992 * sqp(pd2) * pb2 / (powp(pc1, 3) * powp(pc2, 3)) +
           6912 * powp(px(a * d1 - sq(b)), 4) / (pb2 * sqp(pc1) * sqp(pc2)) *
               (209 * ad1 + 524 * pb2 + sqp(pd2) * (209 + 99 * pb2) + 396 * bpow(4)) +
           4 * pb2 / (pc1 * pc2) *
               (625080 * pb2 + 1047320 * bpow(4) +
                sqp(pd2) * (768 + 29840 * sqp(pd2) + 367663 * pb2)) +
           722304 * ad1 * pb2 + 583200 * sqp(px(a * d1 - sq(b))) +
           (2603105 + 171072 * ad1) * bpow(4) +
           pb2 * p100 * (41472 + 1711 * pb2) + 28 * bpow(6);
    c.expect_equal("A3 identity", 2025 * b.pow(6) / (c1 * c2) * A3, g.v);
    c.expect_structural_nn("A3 rhs nonneg", g);
    c.scan_nonneg("A3 rhs positive", g.v, thin, 200, 200, true);
  }

  // third identity: 225 b^10 (A1 B1^2 + A2 B2^2 - 2 B1 B2 B3) / (4096 E^2 D^2)
  {
    Px g =
        432 * bpow(4) * sqp(px(a * d1 - sq(b))) / (pc1 * pc2) *
            (864 * sqp(pd2) * (1 + 2 * pb2) / (pc1 * pc2) + 209 + 2334 * pb2 +
             4696 * bpow(4) + 1728 * bpow(6) +
             sqp(pd2) * (411 + 1542 * pb2 + 432 * bpow(4))) +
        pb2 * p100 *
            (300 * bpow(4) + 3225 * bpow(6) + 1867 * bpow(8) + 392040 * powp(ad1, 4)) +
        4 * bpow(4) * sqp(px(1 - 10 * a * d1)) *
            (93271 * sqp(ad1) + 3707 * sqp(pd2) * pb2) +
        1166400 * powp(ad1, 6) + 1426680 * powp(ad1, 4) * sqp(pd2) * pb2 +
        54 * powp(ad1, 3) * bpow(4) * (49418 + 230061 * ad1) +
        ad1 * bpow(6) * (12564 * sqp(pd2) + ad1 * (14187 + 713783 * sqp(pd2))) +
        bpow(8) * (93 * sqp(pd2) + 3075550 * sqp(ad1) + 3649 * powp(pd2, 4)) +
        bpow(10) * (89 + 48752 * sqp(pd2)) + 76 * bpow(12);
    c.expect_equal("A1B1^2+A2B2^2-2B1B2B3 identity",
                   225 * b.pow(10) / (4096 * sq(E) * sq(D)) *
                       (A1 * sq(B1) + A2 * sq(B2) - 2 * B1 * B2 * B3),
                   g.v);
    c.expect_structural_nn("third rhs nonneg", g);
    c.scan_nonneg("third rhs positive", g.v, thin, 200, 200, true);
  }

  // grand identity: the determinant combination
  {
    auto big = [&bigs, &ctx](const char* digits) {
      return lit(ctx, bigs.get(digits));
    };
    Px g =
        big("406239826673664") * powp(pd2, 6) * bpow(18) / (sqp(pc1) * sqp(pc2)) +
        big("940369969152") * powp(pd2, 4) * bpow(14) / (pc1 * pc2) *
            (6 * pb2 * sqp(px(5 * a * d1 - 18 * sq(b))) +
             sqp(ad1) * pb2 * (2576 * pb2 + 29 * p100) +
             1253 * sqp(ad1) * sqp(px(a * d1 - sq(b))) +
             6 * bpow(4) * (ad1 + 54 * sqp(px(a * d1 - 2 * sq(b))))) +
        bpow(4) * p100 *
            (big("12121552738440000") * powp(ad1, 14) +
             big("38379608724728421") * powp(ad1, 12) * pb2 +
             big("18971342095206083") * powp(ad1, 10) * bpow(4) +
             big("2090743154936166") * powp(ad1, 8) * bpow(6) +
             big("279697348741361") * powp(ad1, 6) * bpow(8) +
             big("3822652869396") * powp(ad1, 4) * bpow(10) +
             big("756253238998") * sqp(ad1) * bpow(12) + big("4091161727505") * bpow(14) +
             big("12150003729052") * bpow(16) + big("50821685560135") * bpow(18) +
             big("98411555030530") * bpow(20) + big("122686738307665") * bpow(22) +
             big("97941102999784") * bpow(24) + big("50251546065961") * bpow(26) +
             big("92177583947338") * bpow(28) + big("7977409739887423") * bpow(30)) +
        powp(ad1, 3) * bpow(8) * sqp(px(1 - 8 * a * d1)) *
            (powp(ad1, 7) *
                 (big("201474903892777042") + big("90643664222052075") * powp(pd2, 4)) +
             big("87413325433574170") * powp(ad1, 5) * powp(pd2, 4) * pb2 +
             powp(ad1, 3) * powp(pd2, 4) * bpow(4) *
                 (big("26280162838987044") * ad1 + big("18393062792105615") * sqp(pd2) +
                  big("263384776326212272") * sqp(ad1)) +
             12 * ad1 * sqp(pd2) * bpow(6) *
                 (big("921487390368760") * ad1 + big("349514116301673") * sqp(pd2)) +
             big("1983138862306248") * powp(pd2, 10) * bpow(8)) +
        big("47569496486400000") * powp(ad1, 18) * (3 * ad1 + sqp(pd2)) +
        big("6802444800000") * pb2 * powp(ad1, 16) *
            (13631 * ad1 + 38284 * sqp(pd2) + 108214 * sqp(ad1)) +
        24603750 * bpow(4) * powp(ad1, 14) *
            (900363843 + big("7650287352") * sqp(pd2) + big("10182035079") * powp(pd2, 4) +
             big("3366302686") * powp(pd2, 6)) +
        9 * bpow(6) * powp(ad1, 12) *
            (big("60274379589129731") * powp(pd2, 6) +
             big("647576875800691136") * powp(ad1, 4) +
             ad1 * sqp(pd2) *
                 (16761821 + big("32817780980698951") * sqp(pd2) +
                  big("123184084009465804") * ad1 * sqp(pd2))) +
        4 * bpow(8) * powp(ad1, 11) * sqp(pd2) *
            (big("89625675600532618") * powp(pd2, 4) +
             ad1 * (big("1232319731556914497") + 172 * sqp(pd2) +
                    big("282706757366186700") * powp(pd2, 4))) +
        bpow(10) * powp(ad1, 9) *
            (252 * sqp(ad1) * sqp(pd2) +
             8 * powp(pd2, 4) *
                 (big("680730978067758") + big("176303141792417999") * ad1) +
             powp(ad1, 3) *
                 (big("28350046403323666988") + big("48947181654129068587") * sqp(pd2) +
                  big("10169754750431798896") * powp(pd2, 4))) +
        2 * bpow(12) * powp(ad1, 9) *
            (738 * powp(pd2, 4) +
             sqp(ad1) *
                 (big("6476622057673320575") + big("16775086553269092583") * sqp(pd2)) +
             ad1 * powp(pd2, 4) *
                 (big("3205280764781424730") + big("2163731183135420737") * sqp(pd2))) +
        bpow(14) * powp(ad1, 6) *
            (7 * powp(ad1, 3) * (big("267606134502121283") + 6725 * sqp(pd2)) +
             3 * ad1 * powp(pd2, 6) *
                 (big("41287243358734152") + big("1035751844957493491") * ad1) +
             big("102133612824349884") * powp(pd2, 10) +
             2 * powp(ad1, 4) * sqp(pd2) *
                 (big("4444298389065673601") + big("11374900226453699636") * sqp(pd2))) +
        2 * bpow(16) * sqp(ad1) *
            (38 * powp(ad1, 7) *
                 (1217 + big("119048568159419288") * ad1 * sqp(pd2) +
                  big("150837118919724652") * powp(pd2, 4)) +
             big("2834407261786822999") * powp(ad1, 6) * powp(pd2, 6) +
             big("1114301757844765956") * powp(ad1, 5) * powp(pd2, 8) +
             big("3612664492939608") * sqp(ad1) * powp(pd2, 14) +
             powp(pd2, 10) *
                 (big("485477278694229") + big("11576717008928092") * powp(ad1, 3) +
                  big("297856692052747442") * powp(ad1, 4))) +
        bpow(18) *
            (powp(ad1, 7) *
                 (80161 + big("613280621514985073") * ad1 * sqp(pd2) +
                  big("2168086120174861319") * powp(pd2, 4)) +
             3 * powp(ad1, 5) * powp(pd2, 6) *
                 (big("201266834139916751") + big("140164857867870021") * sqp(pd2)) +
             big("134092514706817166") * powp(ad1, 4) * powp(pd2, 10) +
             sqp(ad1) * powp(pd2, 12) *
                 (big("958467215549044") + big("23606915947923884") * ad1 +
                  big("113721778713257259") * sqp(ad1)) +
             big("850988675449304") * ad1 * powp(pd2, 18) +
             big("55106777425135") * powp(pd2, 20)) +
        ad1 * bpow(20) *
            (big("5005973317536822") * ad1 + big("6878225893133844") * powp(pd2, 10) +
             big("581926730554137620") * sqp(ad1) * powp(pd2, 8) +
             big("6500684793939788360") * powp(ad1, 7) +
             big("19917465388756768960") * powp(ad1, 6) * sqp(pd2) +
             big("22114487883990056318") * powp(ad1, 5) * powp(pd2, 4) +
             2 * powp(ad1, 3) * powp(pd2, 6) *
                 (big("697437936152400250") + big("2785841237498890944") * ad1 +
                  big("1482271309993033463") * sqp(ad1))) +
        2 * ad1 * bpow(22) *
            (big("23130096864387570") * powp(pd2, 8) +
             big("2315937521698808738") * powp(ad1, 5) +
             big("840904065784953540") * sqp(ad1) * powp(pd2, 6) +
             ad1 * sqp(pd2) *
                 (big("14037263072295615") + big("2867348900259792053") * powp(ad1, 3)) +
             3 * powp(ad1, 3) * powp(pd2, 4) *
                 (big("332465786752201665") + big("682141502084226293") * ad1 +
                  big("977253515068504924") * sqp(ad1))) +
        ad1 * bpow(24) *
            (big("1278193172773325750") * powp(ad1, 3) +
             big("577141788962864220") * ad1 * powp(pd2, 4) +
             sqp(ad1) * sqp(pd2) *
                 (big("794463032340756283") + big("1790154667867305990") * ad1) +
             big("136816263813704700") * powp(pd2, 8) +
             3 * sqp(ad1) * powp(pd2, 6) *
                 (big("295254266683834159") + big("189245075752900744") * ad1)) +
        ad1 * bpow(26) *
            (big("7342158644044464784") * powp(ad1, 4) +
             big("13195017945764608985") * powp(ad1, 3) * sqp(pd2) +
             big("6273782071117534828") * sqp(ad1) * powp(pd2, 4) +
             big("1505967078540509160") * ad1 * powp(pd2, 6) +
             big("222276557026854540") * powp(pd2, 8) +
             big("11142172580460000000") * powp(ad1, 5)) +
        2 * ad1 * bpow(28) *
            (big("371333521783157905") * sqp(ad1) + big("110859693910065990") * powp(pd2, 4) +
             ad1 * sqp(pd2) *
                 (big("113043479305733967") + big("681897555397501901") * ad1 +
                  big("350076133701617264") * sqp(ad1))) +
        ad1 * bpow(30) *
            (big("43083707928314887") + big("94188165135443957") * powp(pd2, 4) +
             2 * ad1 * sqp(pd2) *
                 (big("38270182911979807") + big("19065464961694444") * sqp(pd2))) +
        4 * ad1 * bpow(32) *
            (big("59079847399876688") * sqp(ad1) +
             3 * sqp(pd2) * (big("3833975366004819") + big("7362306726062380") * ad1)) +
        4 * ad1 * bpow(34) *
            (big("1097149099950981") + big("4490808002806144") * ad1) +
        4 * bpow(36) * (big("199324506182122989") + big("113055729475640") * sqp(pd2)) +
        big("84587928319744") * bpow(38);

    RatFn lhs = bigs.get("8303765625") * b.pow(24) * c1.pow(4) * c2.pow(4) / 16384 *
                (A1 * A2 * A3 + 2 * B1 * B2 * B3 - A1 * sq(B1) - A2 * sq(B2) - A3 * sq(B3));
    c.expect_equal("grand determinant identity", lhs, g.v);
    c.expect_structural_nn("grand rhs nonneg", g);
    c.scan_nonneg("grand rhs positive", g.v, thin, 120, 120, true);

    // spot checks from the statement: both sides agree exactly at (1/4, 1/20)
    std::vector<Rat> pt{rat(1, 4), rat(1, 20)};
    c.expect_true("grand identity at (1/4,1/20)", lhs.eval(pt) == g.v.eval(pt));
    c.expect_true("rhs positive at (0,1/10)",
                  g.v.eval({rat(0), rat(1, 10)}) > 0);
    c.expect_true("criterion holds at (1/4,1/20)",
                  psd3_criterion(A1.eval(pt), A2.eval(pt), A3.eval(pt), B1.eval(pt),
                                 B2.eval(pt), B3.eval(pt)));
  }
  c.expect_true("all manifest coefficients consumed", bigs.all_used());
  return c.finish();
}

}  // namespace detail

}  // namespace tric
