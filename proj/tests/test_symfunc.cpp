#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brauerch/error.hpp"
#include "brauerch/symfunc.hpp"

using namespace brauerch;

namespace {

// h_k(x_1..x_n) by enumerating weakly increasing index sequences.
MultiPoly complete(int k, int n) {
  MultiPoly h(static_cast<std::size_t>(n));
  if (k < 0) return h;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    Exponents e(static_cast<std::size_t>(n), 0);
    for (int i : idx) ++e[static_cast<std::size_t>(i)];
    h.add_term(e, Rational(1));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 1) --pos;
    if (pos < 0) break;
    const int v = idx[static_cast<std::size_t>(pos)] + 1;
    for (int j = pos; j < k; ++j) idx[static_cast<std::size_t>(j)] = v;
  }
  return h;
}

// Jacobi-Trudi: det(h_{ν_i - i + j}), expanded by permutations.
MultiPoly jacobi_trudi(const Partition& nu, int n) {
  const int l = nu.length();
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly det(static_cast<std::size_t>(n));
  if (l == 0) return MultiPoly::constant(static_cast<std::size_t>(n), Rational(1));
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    MultiPoly term = MultiPoly::constant(static_cast<std::size_t>(n), Rational(inversions % 2 ? -1 : 1));
    for (int i = 0; i < l; ++i) term *= complete(nu.part(i + 1) - (i + 1) + perm[static_cast<std::size_t>(i)] + 1, n);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_CASE("small Schur polynomials") {
  const MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
  CHECK(schur(Partition({1}), 2).poly == x1 + x2);
  CHECK(schur(Partition({2}), 2).poly == x1 * x1 + x1 * x2 + x2 * x2);
  CHECK(schur(Partition({1, 1, 1}), 2).vanished);
  CHECK(schur(Partition({1, 1, 1}), 2).poly.is_zero());
}

TEST_CASE("Schur polynomials agree with the Jacobi-Trudi determinant") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 5; ++m)
      for (const auto& nu : partitions_of(m, n)) CHECK(schur(nu, n).poly == jacobi_trudi(nu, n));
}

TEST_CASE("Schur polynomials are symmetric") {
  for (const auto& nu : partitions_of(4, 3)) CHECK_FALSE(schur(nu, 3).asymmetry_witness().has_value());
}

TEST_CASE("parameter sequence and a_rho") {
  const auto a = ParameterSequence::classical(Rational(1, 2));
  CHECK(a(1) == Rational(1, 4));
  CHECK(a(0) == Rational(1, 4));
  CHECK(a(-1) == Rational(9, 4));
  CHECK_THROWS_AS(ParameterSequence::classical(Rational(1, 3)), DomainError);
  const int n = 3;
  const auto a0 = ParameterSequence::classical(Rational(0));
  CHECK(a_rho(Partition(), n, a0) == std::vector<Rational>{a0(3), a0(2), a0(1)});
  const auto r1 = a_rho(Partition({1}), n, a0);
  CHECK(r1 == std::vector<Rational>{a0(n + 1), a0(n - 1), a0(n - 2)});
  CHECK(a0(n + 1) - a0(n) == Rational(2 * n - 1));
  CHECK_THROWS_AS(a_rho(Partition({1, 1, 1, 1}), n, a0), DomainError);
  // a_{n+i} - a_{n+j} = (i-j)(N+i+j-2) for the orthogonal sequences
  for (const auto& [eps, N] : {std::pair{Rational(0), 6}, std::pair{Rational(1, 2), 7}})
    for (int i = -2; i <= 3; ++i)
      for (int j = -2; j <= 3; ++j) {
        const auto seq = ParameterSequence::classical(eps);
        CHECK(seq(n + i) - seq(n + j) == Rational((i - j) * (N + i + j - 2)));
      }
}

TEST_CASE("double Schur values from the two-row example") {
  const int n = 3;
  for (const Rational& eps : {Rational(0), Rational(1, 2), Rational(1)}) {
    const auto a = ParameterSequence::classical(eps);
    const Rational v = double_schur(Partition({2}), n, a)(a_rho(Partition({2}), n, a));
    CHECK(v == (a(n + 2) - a(n)) * (a(n + 2) - a(n + 1)));
  }
}

TEST_CASE("double Schur reduces to Schur for the zero sequence") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (const auto& nu : partitions_of(4, 3)) {
    std::vector<Rational> x{Rational(d(rng), 2), Rational(d(rng)), Rational(d(rng), 3)};
    CHECK(double_schur(nu, 3, ParameterSequence::zero())(x) == schur(nu, 3).poly.evaluate(x));
  }
}

TEST_CASE("Schur expansion") {
  const MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
  SchurExpansion e = schur_expand(SymmetricPolynomial{x1 + x2});
  CHECK(e.coefficient(Partition({1})) == Rational(1));
  CHECK(e.terms().size() == 1);
  e = schur_expand(SymmetricPolynomial{x1 * x1 + x2 * x2});
  CHECK(e.coefficient(Partition({2})) == Rational(1));
  CHECK(e.coefficient(Partition({1, 1})) == Rational(-1));
  CHECK(e.to_string() == "s(2) - s(1,1)");
  CHECK(schur_expand(SymmetricPolynomial{MultiPoly(2)}).empty());
  CHECK_THROWS_AS(schur_expand(SymmetricPolynomial{x1}), DomainError);
}

TEST_CASE("Schur expansion inverts reconstruction") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    SchurExpansion e(3);
    for (int m = 0; m <= 4; ++m)
      for (const auto& nu : partitions_of(m, 3))
        if (d(rng) > 2) e.add(nu, Rational(d(rng), 1 + (trial % 4)));
    CHECK(schur_expand(SymmetricPolynomial{e.to_polynomial()}) == e);
  }
}
