#include <doctest.h>

#include "brauerch/error.hpp"
#include "brauerch/minpoly.hpp"
#include "brauerch/multipoly.hpp"
#include "brauerch/rational.hpp"
#include "brauerch/unipoly.hpp"

using namespace brauerch;

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(-4, 2).to_string() == "-2");
  CHECK(Rational(3, -9).to_string() == "-1/3");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-1, 2).abs() == Rational(1, 2));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(factorial(6) == Rational(720));
}

TEST_CASE("division by zero is its own error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational parsing round-trips") {
  for (const char* s : {"0", "7", "-7", "1/1680", "-5/12"}) CHECK(Rational::parse(s).to_string() == s);
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("1/"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
}

TEST_CASE("multivariate polynomials") {
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const MultiPoly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.to_string() == "y1^2 - y2^2");
  CHECK(p.total_degree() == 2);
  const std::vector<Rational> pt{Rational(3), Rational(1, 2)};
  CHECK(p.evaluate(pt) == Rational(35, 4));
  CHECK(p.swap_variables(0, 1) == Rational(-1) * p);
  CHECK(p.has_only_even_exponents());
  CHECK(p.halve_exponents() == x - y);
  CHECK((x * y).has_only_even_exponents() == false);
  CHECK(MultiPoly(2).to_string() == "0");
  CHECK((p - p).is_zero());
}

TEST_CASE("univariate polynomials") {
  const UniPoly p = UniPoly::from_roots({Rational(2), Rational(-1), Rational(1, 2)});
  CHECK(p.degree() == 3);
  CHECK(p.evaluate(Rational(-1)).is_zero());
  const auto [q, rem] = p.divide_linear(Rational(2));
  CHECK(rem.is_zero());
  CHECK(q == UniPoly::from_roots({Rational(-1), Rational(1, 2)}));
  CHECK((Rational(3) * p).monic() == p);
}

TEST_CASE("minimal polynomial of a diagonal matrix") {
  RationalMatrix a(4);
  a.set(0, 0, Rational(2));
  a.set(1, 1, Rational(-1, 2));
  a.set(2, 2, Rational(2));
  a.set(3, 3, Rational(0));
  const UniPoly p = minimal_polynomial(a, RationalMatrix::identity(4));
  CHECK(p == UniPoly::from_roots({Rational(2), Rational(-1, 2), Rational(0)}));
  CHECK(evaluate(p, a).is_zero_matrix());
  const auto roots = half_integer_roots(p, Rational(3));
  CHECK(roots == std::vector<Rational>{Rational(-1, 2), Rational(0), Rational(2)});

  // restricted to a seed subspace the polynomial shrinks
  RationalMatrix seed(4);
  seed.set(1, 0, Rational(1));
  CHECK(minimal_polynomial(a, seed) == UniPoly::linear(Rational(-1, 2)));
}

TEST_CASE("half-integer root search rejects polynomials that do not split") {
  CHECK_THROWS_AS(half_integer_roots(UniPoly({Rational(-2), Rational(0), Rational(1)}), Rational(5)), DomainError);
  CHECK_THROWS_AS(half_integer_roots(UniPoly::linear(Rational(1, 3)), Rational(5)), DomainError);
  CHECK_THROWS_AS(half_integer_roots(UniPoly::linear(Rational(7)), Rational(5)), DomainError);
}

TEST_CASE("sparse matrix products against a dense product") {
  RationalMatrix a(3), b(3);
  int k = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if ((i + j) % 2 == 0) a.set(i, j, Rational(k, 2));
      if (i != j) b.set(i, j, Rational(-k));
      ++k;
    }
  const RationalMatrix c = a * b;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s(0);
      for (std::size_t t = 0; t < 3; ++t) s += a.at(i, t) * b.at(t, j);
      CHECK(c.at(i, j) == s);
    }
  CHECK((a - a).nnz() == 0);
  CHECK(a.transpose().transpose() == a);
}
