#include <doctest.h>

#include <random>

#include "brauerch/brauer.hpp"
#include "brauerch/error.hpp"
#include "brauerch/verify.hpp"

using namespace brauerch;

TEST_CASE("diagram text format") {
  const BrauerDiagram e = BrauerDiagram::parse("1-2,1'-2'");
  CHECK(e.m() == 2);
  CHECK(e.to_string() == "1-2,1'-2'");
  CHECK(BrauerDiagram::parse("2'-1',2-1").to_string() == "1-2,1'-2'");
  CHECK_THROWS_AS(BrauerDiagram::parse("1-2,1-1'"), DomainError);
  CHECK_THROWS_AS(BrauerDiagram::parse("1-2"), DomainError);
  CHECK(BrauerDiagram::parse("1-1',2-2'", 2) == BrauerDiagram::identity(2));
}

TEST_CASE("generators") {
  CHECK(generator(GeneratorKind::transposition, 1, 2, 2).to_string() == "1-2',2-1'");
  CHECK(generator(GeneratorKind::contraction, 1, 2, 2).to_string() == "1-2,1'-2'");
  CHECK(generator(GeneratorKind::transposition, 1, 3, 3).to_string() == "1-3',2-2',3-1'");
  CHECK_THROWS_AS(generator(GeneratorKind::transposition, 2, 2, 3), DomainError);
  CHECK_THROWS_AS(generator(GeneratorKind::contraction, 1, 4, 3), DomainError);
}

TEST_CASE("diagram products") {
  const Rational w(5);
  const BrauerDiagram s = generator(GeneratorKind::transposition, 1, 2, 2);
  const BrauerDiagram e = generator(GeneratorKind::contraction, 1, 2, 2);
  CHECK(diagram_multiply(e, e, w) == w * BrauerElement(e, w));
  CHECK(diagram_multiply(s, s, w) == BrauerElement::identity(2, w));
  CHECK(diagram_multiply(e, s, w) == BrauerElement(e, w));
  CHECK(compose(e, e).second == 1);
  CHECK_THROWS_AS(compose(e, BrauerDiagram::identity(3)), DimensionMismatch);
}

TEST_CASE("Jucys-Murphy elements") {
  const Rational w(5);
  CHECK(jm_element(1, 3, w) == Rational(2) * BrauerElement::identity(3, w));
  const BrauerElement x2 = jm_element(2, 2, w);
  const BrauerElement expect = Rational(2) * BrauerElement::identity(2, w) +
                               BrauerElement(generator(GeneratorKind::transposition, 1, 2, 2), w) -
                               BrauerElement(generator(GeneratorKind::contraction, 1, 2, 2), w);
  CHECK(x2 == expect);
  const BrauerElement a = jm_element(2, 3, w), b = jm_element(3, 3, w);
  CHECK(a * b == b * a);
}

TEST_CASE("basis counts") {
  CHECK(count_basis(1) == 1);
  CHECK(count_basis(2) == 3);
  CHECK(count_basis(5) == 945);
  CHECK(all_diagrams(3).size() == 15);
  const auto all = all_diagrams(4);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("elements reject mixed parameters") {
  const BrauerElement a = BrauerElement::identity(2, Rational(3));
  const BrauerElement b = BrauerElement::identity(2, Rational(4));
  CHECK_THROWS_AS(a + b, DomainError);
  CHECK_THROWS_AS(a * BrauerElement::identity(3, Rational(3)), DimensionMismatch);
}

TEST_CASE("defining relations at three parameter values") {
  std::mt19937_64 rng(3);
  for (const Rational& w : {Rational(3), Rational(-4), Rational(7, 2)}) {
    VerifyReport r;
    for (int m = 1; m <= 4; ++m) check_brauer_relations(r, w, m);
    check_associativity(r, w, 5, 30, rng);
    INFO(r.text());
    CHECK(r.passed());
  }
  VerifyReport r;
  for (int m = 1; m <= 4; ++m) check_symmetric_closure(r, m);
  INFO(r.text());
  CHECK(r.passed());
}
