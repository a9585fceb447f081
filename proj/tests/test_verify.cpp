#include <doctest.h>

#include "brauerch/error.hpp"
#include "brauerch/serialize.hpp"
#include "brauerch/verify.hpp"

using namespace brauerch;

TEST_CASE("reports count failures and print details") {
  VerifyReport r("demo");
  r.add("good", true);
  r.add("bad", false, "1 != 2");
  CHECK(r.failures() == 1);
  CHECK_FALSE(r.passed());
  CHECK(r.text() == "PASS good\nFAIL bad: 1 != 2\ndemo: 1/2 checks passed\n");
  const Json j = Json::parse(r.json());
  CHECK(j["failures"] == 1);
  CHECK(j["checks"][1]["detail"] == "1 != 2");
}

TEST_CASE("small suites pass") {
  VerifyOptions o;
  o.max_m = 2;
  o.N_values = {3, 4};
  o.random_pairs = 10;
  for (const char* s : {"relations", "idempotents", "dims", "charmap"}) {
    const VerifyReport r = run_suite(s, o);
    INFO(r.text());
    CHECK(r.passed());
    CHECK(!r.checks().empty());
  }
  CHECK_THROWS_AS(run_suite("nonsense", o), DomainError);
}

TEST_CASE("double Schur identities") {
  std::mt19937_64 rng(1);
  VerifyReport r;
  for (const Rational& eps : {Rational(0), Rational(1, 2), Rational(1)})
    for (int n = 1; n <= 4; ++n) {
      check_double_schur_vanishing(r, eps, n, 4);
      check_double_schur_symmetry(r, eps, n, 4, rng);
      check_row_factorization(r, eps, n, 4);
      check_column_factorization(r, eps, n, 4);
    }
  INFO(r.text());
  CHECK(r.passed());
}
