#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "identities.hpp"

using namespace tric;

// The full suite, including the quadratic-form reduction and the big-integer
// determinant identities, runs inside the acceptance binary; this file keeps
// the quick members and the interfaces honest.

TEST_CASE("supported lemma ids") {
  const auto& ids = supported_lemmas();
  CHECK(ids.size() == 15);
  CHECK_THROWS_AS(check_lemma("99"), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma("14.12"), std::invalid_argument);
}

TEST_CASE("manifest checksum is pinned") {
  CHECK(quartic_manifest_checksum() == 0xa1aaa476392b0205ULL);
}

TEST_CASE("fast lemma checks pass with zero residuals") {
  for (const char* id : {"14.1", "14.3", "14.8", "14.10", "5.1", "5.2", "3.2", "3.3"}) {
    IdentityCase c = check_lemma(id);
    INFO(id, ": ", c.detail);
    CHECK(c.status == "passed");
  }
}

TEST_CASE("positivity criterion for the three-by-three form") {
  // PSD form rejected by the (sufficient-only) hypotheses
  CHECK_FALSE(psd3_criterion(rat(1), rat(1), rat(1), rat(0), rat(0), rat(0)));
  // hand-checked admissible instance
  CHECK(psd3_criterion(rat(2), rat(2), rat(2), rat(1), rat(1), rat(1)));
  // indefinite instances fail some hypothesis
  CHECK_FALSE(psd3_criterion(rat(1), rat(1), rat(-1), rat(0), rat(0), rat(0)));
  CHECK_FALSE(psd3_criterion(rat(1), rat(1), rat(1), rat(5), rat(5), rat(5)));

  SUBCASE("accepted inputs give exactly positive leading minors") {
    uint64_t state = 7;
    auto rnd = [&state]() {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return rat(static_cast<long>((state >> 11) % 41) - 20,
                 static_cast<long>((state >> 17) % 9) + 1);
    };
    int accepted = 0;
    for (int trial = 0; trial < 60000 && accepted < 2000; ++trial) {
      Rat A1 = rnd(), A2 = rnd(), A3 = rnd(), B1 = rnd(), B2 = rnd(), B3 = rnd();
      if (!psd3_criterion(A1, A2, A3, B1, B2, B3)) continue;
      ++accepted;
      CHECK(A1 > 0);
      CHECK(A1 * A2 - B3 * B3 > 0);
      CHECK(A1 * A2 * A3 + 2 * B1 * B2 * B3 - A1 * B1 * B1 - A2 * B2 * B2 -
                A3 * B3 * B3 >
            0);
    }
    CHECK(accepted >= 500);
  }
}

TEST_CASE("determinism of a representative check") {
  IdentityCase first = check_lemma("14.8", 42);
  IdentityCase second = check_lemma("14.8", 42);
  CHECK(first.status == second.status);
  CHECK(first.detail == second.detail);
}
