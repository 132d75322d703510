#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <cmath>
#include <string>

#include "tric.h"

TEST_CASE("version and error text") {
  CHECK(std::string(tric_version()) == "1.0.0");
  CHECK(tric_last_error() != nullptr);
}

TEST_CASE("constants through the shape entry point") {
  tric_constants out{};
  REQUIRE(tric_constants_from_shape("0", "1", &out) == TRIC_OK);
  CHECK(out.k1 == doctest::Approx(0.3340766).epsilon(2e-7));
  CHECK(out.k4 == doctest::Approx(0.4915960).epsilon(2e-7));
  CHECK(out.circumradius == doctest::Approx(0.7071068).epsilon(1e-7));
  // the legs-1 right triangle normalizes to its hypotenuse-first labeling
  CHECK(out.normalized_a == doctest::Approx(0.5));
  CHECK(out.normalized_b == doctest::Approx(0.5));
  CHECK(out.scale == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  SUBCASE("decimal and fraction inputs agree exactly") {
    tric_constants dec{}, frac{};
    REQUIRE(tric_constants_from_shape("0.25", "0.5", &dec) == TRIC_OK);
    REQUIRE(tric_constants_from_shape("1/4", "1/2", &frac) == TRIC_OK);
    CHECK(dec.k1 == frac.k1);
    CHECK(dec.k4 == frac.k4);
  }
  SUBCASE("degenerate shape") {
    tric_constants bad{};
    CHECK(tric_constants_from_shape("0", "0", &bad) != TRIC_OK);
    CHECK(std::string(tric_last_error()).size() > 0);
  }
  SUBCASE("malformed rational") {
    tric_constants bad{};
    CHECK(tric_constants_from_shape("x", "1", &bad) == TRIC_ERR_INVALID_ARGUMENT);
  }
}

TEST_CASE("constants through the vertex entry point") {
  double xy[6] = {0, 0, 1, 0, 0, 1};
  tric_constants out{};
  REQUIRE(tric_constants_from_vertices(xy, &out) == TRIC_OK);
  CHECK(out.k2 == doctest::Approx(0.2417624).epsilon(2e-7));
  double collinear[6] = {0, 0, 1, 1, 2, 2};
  tric_constants bad{};
  CHECK(tric_constants_from_vertices(collinear, &bad) == TRIC_ERR_DEGENERATE);
}

TEST_CASE("exact squared constants as strings") {
  char buf[128];
  REQUIRE(tric_l_constant(1, "0", "1", buf, sizeof buf) == TRIC_OK);
  CHECK(std::string(buf) == "25/224");
  REQUIRE(tric_l_constant(4, "0", "1", buf, sizeof buf) == TRIC_OK);
  CHECK(std::string(buf) == "29/120");
  CHECK(tric_l_constant(7, "0", "1", buf, sizeof buf) == TRIC_ERR_INVALID_ARGUMENT);
  char tiny[3];
  CHECK(tric_l_constant(1, "0", "1", tiny, sizeof tiny) == TRIC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("identity runs") {
  tric_report* report = nullptr;
  REQUIRE(tric_identities_run("14.1,14.8", &report) == TRIC_OK);
  REQUIRE(report != nullptr);
  CHECK(tric_report_ok(report) == 1);
  auto j = nlohmann::json::parse(tric_report_json(report));
  CHECK(j["all_passed"].get<bool>());
  CHECK(j["cases"].size() == 2);
  tric_report_free(report);
  report = nullptr;
  CHECK(tric_identities_run("99", &report) == TRIC_ERR_INVALID_ARGUMENT);
  CHECK(report == nullptr);
}

TEST_CASE("table computation") {
  int ns[1] = {4};
  tric_report* report = nullptr;
  REQUIRE(tric_table_compute(1, ns, 1, 4, &report) == TRIC_OK);
  auto j = nlohmann::json::parse(tric_report_json(report));
  CHECK(j["rows"].size() == 12);
  double k1 = j["rows"][0]["k"].get<double>();
  CHECK(k1 == doctest::Approx(0.3340766).epsilon(2e-7));
  double upper = j["rows"][0]["upper_bounds"]["n4"].get<double>();
  double lower = j["rows"][0]["subspace_estimate"].get<double>();
  CHECK(lower <= upper + 1e-9);
  CHECK(std::string(tric_report_csv(report)).find("shape,K1") == 0);
  tric_report_free(report);
  CHECK(tric_table_compute(9, ns, 1, 0, &report) == TRIC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sweep runs") {
  int js[1] = {1};
  int ks[1] = {1};
  int ls[2] = {0, 13};
  tric_verify_config config{};
  config.mode = "thm61";
  config.js = js;
  config.js_count = 1;
  config.n = 8;
  config.ks = ks;
  config.ks_count = 1;
  config.ls = ls;
  config.ls_count = 2;
  config.parallelism = 1;
  tric_report* report = nullptr;
  REQUIRE(tric_verify_run(&config, &report) == TRIC_OK);
  CHECK(tric_report_ok(report) == 1);
  auto j = nlohmann::json::parse(tric_report_json(report));
  CHECK(j["points"].size() == 2);
  CHECK(j["summary"]["all_verified"].get<bool>());
  std::string json1 = tric_report_json(report);
  tric_report_free(report);

  SUBCASE("proof status consumes the serialized report") {
    const char* docs[1] = {json1.c_str()};
    tric_report* st = nullptr;
    REQUIRE(tric_proof_status(docs, 1, 1, &st) == TRIC_OK);
    auto sj = nlohmann::json::parse(tric_report_json(st));
    CHECK(sj["grid_invariants_ok"].get<bool>());
    CHECK(sj["thm61_points"]["done"].get<int>() == 2);
    tric_report_free(st);
  }

  SUBCASE("invalid mode") {
    tric_verify_config bad = config;
    bad.mode = "thm63";
    tric_report* r = nullptr;
    CHECK(tric_verify_run(&bad, &r) == TRIC_ERR_INVALID_ARGUMENT);
  }
}

TEST_CASE("mesh dump") {
  tric_report* report = nullptr;
  REQUIRE(tric_mesh_dump(2, "V2", 4, "0", "1", 1, &report) == TRIC_OK);
  auto j = nlohmann::json::parse(tric_report_json(report));
  CHECK(j["counts"]["vertices"].get<int>() == 6);
  CHECK(j["counts"]["edges"].get<int>() == 9);
  CHECK(j["pencil"]["dim"].get<int>() == 12);
  // exact entries serialize as p/q strings
  std::string a00 = j["A"][0][0].get<std::string>();
  CHECK(a00.find('/') != std::string::npos);
  tric_report_free(report);
}
