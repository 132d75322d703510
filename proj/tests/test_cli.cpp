// End-to-end checks of the command-line binary; the path to the executable
// arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <sys/wait.h>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

}  // namespace

TEST_CASE("constants from a shape") {
  RunResult r = run("constants --shape 0 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("K1 = 0.3340766") != std::string::npos);
  CHECK(r.output.find("K4 = 0.4915960") != std::string::npos);
  RunResult v = run("constants --vertices 0,0 1,0 0,1");
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("K1 = 0.3340766") != std::string::npos);
}

TEST_CASE("degenerate input exits with the usage code") {
  CHECK(run("constants --shape 0 0").exit_code == 2);
  CHECK(run("constants --shape 1 oops").exit_code == 2);
  CHECK(run("constants").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("json output parses and round-trips rational strings") {
  RunResult r = run("--format json constants --shape 1/4 1/2");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["K1"].get<double>() == doctest::Approx(0.2459842).epsilon(2e-7));
}

TEST_CASE("verify slices") {
  RunResult r = run("--format json verify --mode thm61 --k 1 --l 0,25 --j 1 --n 8");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["points"].size() == 2);
  for (const auto& p : j["points"]) {
    CHECK(p["verdict"].get<std::string>() == "verified");
    // rationals serialize exactly
    CHECK(p["b"].get<std::string>() == "1");
  }
  SUBCASE("determinism of the report body") {
    RunResult again = run("--format json verify --mode thm61 --k 1 --l 0,25 --j 1 --n 8");
    auto j2 = nlohmann::json::parse(again.output);
    for (size_t i = 0; i < j["points"].size(); ++i) {
      auto a = j["points"][i], b = j2["points"][i];
      a.erase("seconds");
      b.erase("seconds");
      CHECK(a == b);
    }
  }
  SUBCASE("out-of-range level is a usage error") {
    CHECK(run("verify --mode thm61 --k 0").exit_code == 2);
  }
  SUBCASE("degenerate-limit mode rejects the quartic index") {
    CHECK(run("verify --mode thm62 --l 0 --j 4 --n 8").exit_code != 0);
  }
}

TEST_CASE("identity suite selection") {
  RunResult r = run("--format json identities --lemma 14.1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["all_passed"].get<bool>());
  CHECK(run("identities --lemma 99").exit_code == 2);
}

TEST_CASE("table and dump are well formed") {
  RunResult r = run("--format json table 1 --n 4 --degree 0");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["rows"].size() == 12);
  RunResult d = run("--format json dump-mesh --n 2");
  REQUIRE(d.exit_code == 0);
  auto dj = nlohmann::json::parse(d.output);
  CHECK(dj["counts"]["faces"].get<int>() == 4);
  CHECK(run("table 7").exit_code == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-binary>\n");
    return 2;
  }
  g_binary = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  return ctx.run();
}
