#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eigensolve.hpp"
#include "interval.hpp"
#include "report.hpp"
#include "sweep.hpp"

using namespace tric;

TEST_CASE("shape grid recurrences") {
  SweepGrid grid = thm61_grid();
  REQUIRE(grid.levels.size() == 119);
  CHECK(grid.levels[0].y == 1000);
  CHECK(grid.levels[0].x == 25);
  CHECK(grid.levels[1].y == 1020);
  CHECK(grid.levels.back().y == 10133);
  CHECK(grid.levels.back().b == rat(1000, 10133));
  CHECK(grid.levels.back().b < rat(1, 10));
  // the published triangle count covers both sweeps
  CHECK(grid.total_points() == 11917);
  CHECK(grid.total_points() + 251 == 12168);
  CHECK(grid_spacing_ok(grid));
  CHECK(grid.a_of(1, 25) == rat(1, 2));
  CHECK_THROWS_AS(grid.a_of(1, 26), std::out_of_range);
}

TEST_CASE("certificate thresholds") {
  TriangleShape t01{rat(0), rat(1)};
  SUBCASE("bulk mode carries both continuation factors") {
    Rat lam = lambda_threshold(1, t01, SweepMode::thm61, 20);
    Rat expect = Rat(l_constant(1, t01) * rat(399, 400) / rat(501, 500) /
                     Rat(1 + rat(3, 2500)));
    CHECK(lam == expect);
    Rat lam3 = lambda_threshold(3, t01, SweepMode::thm61, 20);
    CHECK(lam3 == Rat(l_constant(3, t01) * rat(159999, 160000) /
                      Rat(1 + rat(6, 2500)) / Rat(1 + rat(8, 2500))));
    Rat lam4 = lambda_threshold(4, t01, SweepMode::thm61, 20);
    CHECK(lam4 == Rat(l_constant(4, t01) / Rat(1 + rat(9, 2500)) /
                          Rat(1 + rat(9, 2500)) -
                      l_constant(2, t01) / 400));
    CHECK(lam4 > 0);
  }
  SUBCASE("degenerate mode uses the limit value and a single factor") {
    Rat lam = lambda_threshold(3, {rat(0), rat(1, 10)}, SweepMode::thm62, 20);
    CHECK(lam == Rat(l_limit(3, rat(0)) * rat(159999, 160000) / Rat(1 + rat(6, 2500))));
    CHECK_THROWS_AS(lambda_threshold(4, t01, SweepMode::thm62, 20),
                    std::invalid_argument);
  }
}

TEST_CASE("point verification at a desk-scale refinement") {
  TriangleShape t01{rat(0), rat(1)};
  for (int j = 1; j <= 4; ++j)
    CHECK(verify_point(j, 8, t01, SweepMode::thm61) == Verdict::verified);
  CHECK(verify_point(1, 8, {rat(0), rat(1, 10)}, SweepMode::thm62) ==
        Verdict::verified);
  SUBCASE("a threshold below the top eigenvalue is refused") {
    AssembledPencil p = assemble(Space::V11, 1, 8, t01);
    double lam_max = max_gen_eig(p.A, p.B).value;
    Rat too_small = rat_from_double(lam_max * 0.99);
    CHECK_FALSE(certify_eigen_bound(p, too_small));
    Rat threshold = lambda_threshold(1, t01, SweepMode::thm61, 8);
    CHECK(rat_to_double(threshold) > lam_max);  // consistency of the pipelines
  }
}

TEST_CASE("sweep slices") {
  SweepConfig config;
  config.mode = SweepMode::thm61;
  config.js = {1};
  config.n = 8;
  config.ks = {1};
  config.ls = {0, 13, 25};
  VerificationReport report = run_sweep(config);
  REQUIRE(report.points.size() == 3);
  CHECK(report.all_verified());
  CHECK(report.verified_count == 3);
  CHECK(report.points[0].a == rat(0));
  CHECK(report.points[2].a == rat(1, 2));
  CHECK(report.points[0].b == rat(1));

  SUBCASE("determinism modulo timing") {
    VerificationReport again = run_sweep(config);
    REQUIRE(again.points.size() == report.points.size());
    for (size_t i = 0; i < report.points.size(); ++i) {
      CHECK(again.points[i].verdict == report.points[i].verdict);
      CHECK(again.points[i].lambda == report.points[i].lambda);
      CHECK(again.points[i].a == report.points[i].a);
    }
  }

  SUBCASE("empty slice") {
    SweepConfig empty = config;
    empty.ls = {99999};
    VerificationReport r = run_sweep(empty);
    CHECK(r.points.empty());
    CHECK(r.all_verified());
  }

  SUBCASE("degenerate-limit slice carries the implication chain") {
    SweepConfig dconf;
    dconf.mode = SweepMode::thm62;
    dconf.js = {1, 2};
    dconf.n = 8;
    dconf.ls = {0};
    VerificationReport r = run_sweep(dconf);
    REQUIRE(r.points.size() == 2);
    for (const auto& p : r.points) {
      CHECK(p.verdict == Verdict::verified);
      CHECK(p.b == rat(1, 10));
      CHECK(p.implication.find("0 < b <= 1/10") != std::string::npos);
    }
  }
}

TEST_CASE("report serialization") {
  SweepConfig config;
  config.mode = SweepMode::thm62;
  config.js = {1};
  config.n = 8;
  config.ls = {0, 250};
  VerificationReport report = run_sweep(config);
  std::string json = report_to_json(report);
  CHECK(json.find("\"schema_version\": 1") != std::string::npos);
  CHECK(json.find("\"verdict\": \"verified\"") != std::string::npos);
  CHECK(json.find("\"a\": \"1/2\"") != std::string::npos);
  CHECK(json.find("\"b\": \"1/10\"") != std::string::npos);
  std::string csv = report_summary_csv(report);
  CHECK(csv.find("mode,n,j,k,l,a,b,lambda,verdict,seconds") == 0);
  SUBCASE("rational strings round-trip") {
    for (const auto& p : report.points) {
      CHECK(rat_parse(rat_str(p.lambda)) == p.lambda);
      CHECK(rat_parse(rat_str(p.a)) == p.a);
    }
  }
}

TEST_CASE("proof chain bookkeeping") {
  SweepConfig config;
  config.mode = SweepMode::thm61;
  config.js = {1};
  config.n = 8;
  config.ks = {1};
  config.ls = {0};
  VerificationReport report = run_sweep(config);
  std::vector<IdentityCase> ids{{"14.8", "expand", "passed", "", 0.0}};
  ProofChainStatus st = proof_chain_status({report}, ids);
  CHECK(st.grid_invariants_ok);
  CHECK(st.thm61_points_done == 1);
  CHECK(st.thm61_points_total == 11917 * 4);
  CHECK(st.thm62_points_total == 753);
  CHECK(st.identity_suite_passed);
  CHECK(st.summary.find("partially re-verified") != std::string::npos);
  ProofChainStatus none = proof_chain_status({}, {});
  CHECK_FALSE(none.identity_suite_passed);
}

TEST_CASE("checkpoint resume skips recorded keys") {
  std::string path = "sweep_checkpoint_test.txt";
  std::remove(path.c_str());
  SweepConfig config;
  config.mode = SweepMode::thm61;
  config.js = {1};
  config.n = 4;
  config.ks = {1};
  config.ls = {0, 13};
  config.checkpoint_path = path;
  VerificationReport first = run_sweep(config);
  CHECK(first.points.size() == 2);
  VerificationReport second = run_sweep(config);
  CHECK(second.points.empty());  // all keys already recorded
  std::remove(path.c_str());
}
