#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eigensolve.hpp"
#include "interval.hpp"

using namespace tric;

namespace {

uint64_t rng_state = 0x853c49e6748fea9bULL;
Rat random_rat_wide() {
  rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
  long num = static_cast<long>((rng_state >> 11) % 2000001) - 1000000;
  rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
  long den = static_cast<long>((rng_state >> 11) % 65536) + 1;
  return rat(num, den);
}

bool contains(const Interval& iv, const Rat& q) {
  return rat_from_double(iv.lo) <= q && q <= rat_from_double(iv.hi);
}

// exact rotation from a rational tangent half-angle: columns orthonormal over Q
void pythagorean_rotation(long t_num, long t_den, Rat& c, Rat& s) {
  Rat t = rat(t_num, t_den);
  c = Rat((1 - t * t) / (1 + t * t));
  s = Rat(2 * t / (1 + t * t));
}

}  // namespace

TEST_CASE("adjacent float stepping") {
  CHECK(next_up(1.0) > 1.0);
  CHECK(next_down(1.0) < 1.0);
  CHECK(next_up(0.0) > 0.0);
  CHECK(next_down(0.0) < 0.0);
  CHECK(next_up(-1.0) > -1.0);
  double inf = std::numeric_limits<double>::infinity();
  CHECK(next_up(inf) == inf);
  CHECK(next_down(-inf) == -inf);
  CHECK(next_up(std::nextafter(1.0, 2.0)) == std::nextafter(std::nextafter(1.0, 2.0), 2.0));
}

TEST_CASE("interval operation examples") {
  Interval one = Interval::point(1), two = Interval::point(2), three = Interval::point(3);
  Interval sum = iv_add(one, two);
  CHECK(sum.lo <= 3.0);
  CHECK(sum.hi >= 3.0);
  CHECK(sum.hi - sum.lo <= 2e-15);

  Interval pm{-1, 1};
  Interval sq = iv_mul(pm, pm);
  CHECK(sq.lo <= -1.0);
  CHECK(sq.hi >= 1.0);

  Interval third = iv_div(one, three);
  CHECK(third.lo < 1.0 / 3.0 + 1e-18);
  CHECK(contains(third, rat(1, 3)));
  CHECK(third.lo != third.hi);

  CHECK_THROWS_AS(iv_div(one, pm), std::domain_error);
  CHECK_THROWS_AS(iv_sqrt(Interval{-0.5, 1}), std::domain_error);
  Interval root = iv_sqrt(two);
  CHECK(root.lo <= std::sqrt(2.0));
  CHECK(root.hi >= std::sqrt(2.0));
}

TEST_CASE("rational conversion") {
  Interval half = rational_to_interval(rat(1, 2));
  CHECK(half.lo == 0.5);
  CHECK(half.hi == 0.5);
  Interval third = rational_to_interval(rat(1, 3));
  CHECK(third.lo < third.hi);
  CHECK(contains(third, rat(1, 3)));
  CHECK(third.hi - third.lo <= std::ldexp(1.0, -53));
  Interval v = rational_to_interval(rat(25, 224));
  CHECK(contains(v, rat(25, 224)));
  CHECK(!iv_overflowed(v));
  // overflow saturates but still encloses
  Rat huge = rat_pow(rat(10), 400);
  Interval big = rational_to_interval(huge);
  CHECK(iv_overflowed(big));
  CHECK(big.hi == std::numeric_limits<double>::infinity());
}

TEST_CASE("enclosure soundness over random operands") {
  int done = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    Rat qa = random_rat_wide(), qb = random_rat_wide();
    Interval ia = rational_to_interval(qa), ib = rational_to_interval(qb);
    int op = trial % 4;
    if (op == 3 && qb == 0) continue;
    Interval r;
    Rat exact;
    switch (op) {
      case 0: r = iv_add(ia, ib); exact = qa + qb; break;
      case 1: r = iv_sub(ia, ib); exact = qa - qb; break;
      case 2: r = iv_mul(ia, ib); exact = qa * qb; break;
      default:
        if (ib.contains_zero()) continue;
        r = iv_div(ia, ib);
        exact = qa / qb;
    }
    ++done;
    REQUIRE(contains(r, exact));
  }
  CHECK(done > 90000);
}

TEST_CASE("positive-definiteness certificates") {
  SUBCASE("identity certifies") {
    IntervalSymMatrix m(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = Interval::point(i == j ? 1.0 : 0.0);
    CHECK(verified_spd(m));
    CHECK(verified_spd_interval_cholesky(m));
    CHECK(verified_spd_midpoint_shift(m));
  }
  SUBCASE("indefinite point matrix is rejected") {
    IntervalSymMatrix m(2);
    m.at(0, 0) = m.at(1, 1) = Interval::point(1);
    m.at(0, 1) = m.at(1, 0) = Interval::point(2);  // eigenvalues 3 and -1
    CHECK_FALSE(verified_spd(m));
    CHECK_FALSE(verified_spd_interval_cholesky(m));
    CHECK_FALSE(verified_spd_midpoint_shift(m));
  }
  SUBCASE("radius reaching a singular member blocks the certificate") {
    // [[2,1],[1,2]] +/- 0.5 contains the singular member [[1.5,1.5],[1.5,1.5]]
    IntervalSymMatrix m(2);
    m.at(0, 0) = m.at(1, 1) = Interval{1.5, 2.5};
    m.at(0, 1) = m.at(1, 0) = Interval{0.5, 1.5};
    CHECK_FALSE(verified_spd(m));
  }
  SUBCASE("comfortable radius certifies") {
    IntervalSymMatrix m(2);
    m.at(0, 0) = m.at(1, 1) = Interval{1.9, 2.1};
    m.at(0, 1) = m.at(1, 0) = Interval{0.9, 1.1};  // members have lambda_min >= 0.8
    CHECK(verified_spd(m));
  }
}

TEST_CASE("certificate never accepts a matrix with a bad member") {
  // spectral synthesis with exactly orthogonal rational rotations: the
  // eigenvalues of the synthesized matrix are known exactly, so a widened
  // radius that reaches a non-positive member must be rejected
  int traps = 0, certified_good = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 4;
    rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
    long lam_seed = static_cast<long>((rng_state >> 11) % 1000) + 1;
    std::vector<Rat> lam(static_cast<size_t>(n));
    Rat lam_min = rat(1000000);
    for (int i = 0; i < n; ++i) {
      lam[static_cast<size_t>(i)] = rat((lam_seed * (i + 3)) % 977 + 1, 100);
      lam_min = std::min(lam_min, lam[static_cast<size_t>(i)]);
    }
    // Q = product of Givens rotations with rational sin/cos
    std::vector<std::vector<Rat>> M(static_cast<size_t>(n),
                                    std::vector<Rat>(static_cast<size_t>(n), rat(0)));
    for (int i = 0; i < n; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(i)] = lam[static_cast<size_t>(i)];
    auto apply_rot = [&M, n](int p, int q, const Rat& c, const Rat& s) {
      for (int k = 0; k < n; ++k) {  // M <- G M G^T on rows/cols p,q
        Rat mp = M[static_cast<size_t>(p)][static_cast<size_t>(k)];
        Rat mq = M[static_cast<size_t>(q)][static_cast<size_t>(k)];
        M[static_cast<size_t>(p)][static_cast<size_t>(k)] = Rat(c * mp - s * mq);
        M[static_cast<size_t>(q)][static_cast<size_t>(k)] = Rat(s * mp + c * mq);
      }
      for (int k = 0; k < n; ++k) {
        Rat mp = M[static_cast<size_t>(k)][static_cast<size_t>(p)];
        Rat mq = M[static_cast<size_t>(k)][static_cast<size_t>(q)];
        M[static_cast<size_t>(k)][static_cast<size_t>(p)] = Rat(c * mp - s * mq);
        M[static_cast<size_t>(k)][static_cast<size_t>(q)] = Rat(s * mp + c * mq);
      }
    };
    Rat c, s;
    pythagorean_rotation((lam_seed % 7) + 1, 9, c, s);
    apply_rot(0, 1, c, s);
    pythagorean_rotation((lam_seed % 5) + 1, 11, c, s);
    apply_rot(1, 2, c, s);
    pythagorean_rotation((lam_seed % 3) + 1, 8, c, s);
    apply_rot(2, 3, c, s);

    // widen by a radius that may or may not reach a singular member
    rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
    double radius = ((rng_state >> 11) % 1000) / 500.0 * rat_to_double(lam_min);
    IntervalSymMatrix im(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Interval base = rational_to_interval(M[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        im.at(i, j) = Interval{next_down(base.lo - radius), next_up(base.hi + radius)};
      }
    bool cert = verified_spd(im);
    // the diagonal member shifted down by the radius has lambda_min - radius
    if (rat_from_double(radius) >= lam_min) {
      // a non-positive-definite member exists; certificate must refuse
      CHECK_FALSE(cert);
      ++traps;
    } else if (cert) {
      ++certified_good;
    }
  }
  CHECK(traps > 50);           // the adversarial side was exercised
  CHECK(certified_good > 50);  // and the certificate is not vacuous
}

TEST_CASE("certificate is monotone under diagonal strengthening") {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5;
    IntervalSymMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
        double v = ((rng_state >> 11) % 200) / 100.0 - 1.0;
        m.at(i, j) = m.at(j, i) = Interval::point(v / 4);
      }
    for (int i = 0; i < n; ++i)
      m.at(i, i) = Interval::point(1.0 + rat_to_double(rat(trial, 40)));
    if (!verified_spd(m)) continue;
    for (double delta : {0.0, 0.5, 2.0}) {
      IntervalSymMatrix shifted = m;
      for (int i = 0; i < n; ++i)
        shifted.at(i, i) =
            Interval{m.at(i, i).lo + delta, next_up(m.at(i, i).hi + delta)};
      CHECK(verified_spd(shifted));
    }
  }
}

TEST_CASE("eigenvalue bound certificates on a small pencil") {
  AssembledPencil p = assemble(Space::V11, 1, 2, {rat(0), rat(1)});
  double lam = max_gen_eig(p.A, p.B).value;  // float oracle for the bracket
  CHECK(certify_eigen_bound(p, rat_from_double(lam * 1.01)));
  CHECK_FALSE(certify_eigen_bound(p, rat_from_double(lam * 0.99)));
  CHECK(certify_eigen_bound(p, rat(1000000)));
  SUBCASE("monotone in the shift") {
    Rat lo = rat_from_double(lam * 1.02);
    for (int step = 0; step < 5; ++step) {
      CHECK(certify_eigen_bound(p, Rat(lo * rat_pow(rat(2), step))));
    }
  }
}
