#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "brauerch/brauerch.h"

namespace {

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  brauerch_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("image handle") {
  brauerch_image* img = nullptr;
  REQUIRE(brauerch_chmap("2,2", BRAUERCH_ORTHOGONAL, 6, BRAUERCH_CH_THEOREM, 0, &img) == BRAUERCH_OK);
  REQUIRE(brauerch_image_term_count(img) == 2);
  char* nu = nullptr;
  char* coeff = nullptr;
  REQUIRE(brauerch_image_term(img, 0, &nu, &coeff) == BRAUERCH_OK);
  CHECK(take(nu) == "2");
  CHECK(take(coeff) == "1/1680");
  REQUIRE(brauerch_image_term(img, 1, &nu, &coeff) == BRAUERCH_OK);
  CHECK(take(nu) == "1,1");
  CHECK(take(coeff) == "1/360");
  CHECK(brauerch_image_term(img, 2, &nu, &coeff) == BRAUERCH_DOMAIN_ERROR);
  char* json = nullptr;
  REQUIRE(brauerch_image_json(img, &json) == BRAUERCH_OK);
  CHECK(take(json).find("\"1/360\"") != std::string::npos);
  brauerch_image_free(img);
}

TEST_CASE("oracle through the handle") {
  brauerch_image* img = nullptr;
  REQUIRE(brauerch_chmap("1,1", BRAUERCH_ORTHOGONAL, 6, BRAUERCH_CH_ORACLE, 0, &img) == BRAUERCH_OK);
  char* text = nullptr;
  REQUIRE(brauerch_image_text(img, &text) == BRAUERCH_OK);
  CHECK(take(text).find("-1/30*s(1)") != std::string::npos);
  brauerch_image_free(img);
}

TEST_CASE("status codes") {
  brauerch_image* img = nullptr;
  CHECK(brauerch_chmap("2,x", BRAUERCH_ORTHOGONAL, 6, 0, 0, &img) == BRAUERCH_USAGE_ERROR);
  CHECK(std::string(brauerch_last_error()).find("malformed") != std::string::npos);
  CHECK(brauerch_chmap("1,1,1,1", BRAUERCH_ORTHOGONAL, 6, 0, 0, &img) == BRAUERCH_DOMAIN_ERROR);
  CHECK(brauerch_chmap("2", BRAUERCH_SYMPLECTIC, 5, 0, 0, &img) == BRAUERCH_DOMAIN_ERROR);
  CHECK(brauerch_chmap("2", 17, 5, 0, 0, &img) == BRAUERCH_USAGE_ERROR);
  CHECK(brauerch_chmap("2", BRAUERCH_ORTHOGONAL, 5, 0, 0, nullptr) == BRAUERCH_USAGE_ERROR);
  int family = -1;
  CHECK(brauerch_parse_family("sp", &family) == BRAUERCH_OK);
  CHECK(family == BRAUERCH_SYMPLECTIC);
  CHECK(brauerch_parse_family("spin", &family) == BRAUERCH_USAGE_ERROR);
}

TEST_CASE("dimensions") {
  char* v = nullptr;
  REQUIRE(brauerch_dimension("1,1", BRAUERCH_SYMPLECTIC, 4, &v) == BRAUERCH_OK);
  CHECK(take(v) == "5");
  REQUIRE(brauerch_dimension("2", BRAUERCH_SYMPLECTIC, 4, &v) == BRAUERCH_OK);
  CHECK(take(v) == "10");
  REQUIRE(brauerch_dimension_report("2,2", BRAUERCH_GL, 3, 1, &v) == BRAUERCH_OK);
  CHECK(take(v).find("\"value\": \"6\"") != std::string::npos);
}

TEST_CASE("operator handle") {
  size_t count = 0;
  REQUIRE(brauerch_tableau_count("2,1", &count) == BRAUERCH_OK);
  CHECK(count == 2);
  brauerch_operator* op = nullptr;
  REQUIRE(brauerch_idempotent("2", 0, BRAUERCH_ORTHOGONAL, 5, 0, &op) == BRAUERCH_OK);
  CHECK(brauerch_operator_dimension(op) == 25);
  char* tr = nullptr;
  REQUIRE(brauerch_operator_trace(op, &tr) == BRAUERCH_OK);
  CHECK(take(tr) == "14");
  char* json = nullptr;
  REQUIRE(brauerch_operator_json(op, &json) == BRAUERCH_OK);
  CHECK(take(json).find("row-major base N") != std::string::npos);
  brauerch_operator_free(op);
  CHECK(brauerch_idempotent("2", 1, BRAUERCH_ORTHOGONAL, 5, 0, &op) == BRAUERCH_DOMAIN_ERROR);
  CHECK(brauerch_idempotent("1,1,1,1,1,1,1", 0, BRAUERCH_GL, 8, 0, &op) == BRAUERCH_DOMAIN_ERROR);
}

TEST_CASE("symmetric functions and basis") {
  char* s = nullptr;
  REQUIRE(brauerch_schur("2", 2, 0, &s) == BRAUERCH_OK);
  CHECK(take(s) == "x1^2 + x1*x2 + x2^2\n");
  REQUIRE(brauerch_double_schur("2", 3, "0", nullptr, "2", 0, &s) == BRAUERCH_OK);
  // (a_5 - a_3)(a_5 - a_4) with a_i = (i-1)^2
  CHECK(take(s) == "84\n");
  REQUIRE(brauerch_double_schur("1", 2, "zero", "1/2,3", nullptr, 0, &s) == BRAUERCH_OK);
  CHECK(take(s) == "7/2\n");
  CHECK(brauerch_double_schur("1", 2, "zero", "1", nullptr, 0, &s) == BRAUERCH_DOMAIN_ERROR);
  REQUIRE(brauerch_basis(5, 1, 0, &s) == BRAUERCH_OK);
  CHECK(take(s) == "945\n");
  REQUIRE(brauerch_basis(2, 0, 0, &s) == BRAUERCH_OK);
  CHECK(take(s) == "1-2,1'-2'\n1-1',2-2'\n1-2',2-1'\n");
}

TEST_CASE("verification through the C interface") {
  const int Ns[] = {3};
  char* report = nullptr;
  int passed = 0;
  REQUIRE(brauerch_verify("dims", 2, Ns, 1, 0, &report, &passed) == BRAUERCH_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("FAIL") == std::string::npos);
}
