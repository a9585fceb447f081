#include <doctest.h>

#include <random>

#include "brauerch/error.hpp"
#include "brauerch/groups.hpp"
#include "brauerch/minpoly.hpp"
#include "brauerch/symfunc.hpp"
#include "brauerch/tensorrep.hpp"
#include "brauerch/verify.hpp"

using namespace brauerch;

TEST_CASE("index encoding") {
  const std::vector<int> digits{2, 0, 1};
  CHECK(encode_index(digits, 3) == 19);
  CHECK(decode_index(19, 3, 3) == digits);
  CHECK(tensor_dimension(10, 6) == 1'000'000);
  CHECK_THROWS_AS(tensor_dimension(10, 7), DomainError);
  CHECK(tensor_dimension(10, 7, true) == 10'000'000);
}

TEST_CASE("swap matrix") {
  const TensorOperator p = represent(generator(GeneratorKind::transposition, 1, 2, 2), GroupKind::orthogonal(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) CHECK(p.matrix.at(2 * i + j, 2 * k + l) == Rational(i == l && j == k ? 1 : 0));
  const TensorOperator q = represent(generator(GeneratorKind::transposition, 1, 2, 2), GroupKind::symplectic(2));
  CHECK(q == Rational(-1) * p);
}

TEST_CASE("contraction trace is N") {
  for (int N : {2, 3, 5}) {
    const TensorOperator q = represent(generator(GeneratorKind::contraction, 1, 2, 2), GroupKind::orthogonal(N));
    CHECK(q.matrix.trace() == Rational(N));
  }
}

TEST_CASE("partial traces") {
  const TensorOperator id = TensorOperator::identity(3, 3);
  CHECK(partial_trace(id, 3) == Rational(3) * TensorOperator::identity(2, 3));
  CHECK_THROWS_AS(partial_trace(id, 4), DomainError);
  std::mt19937_64 rng(5);
  for (const GroupKind& kind : {GroupKind::orthogonal(3), GroupKind::symplectic(4), GroupKind::gl(3)}) {
    VerifyReport r;
    check_tensor_identities(r, kind, rng);
    INFO(r.text());
    CHECK(r.passed());
  }
}

TEST_CASE("general diagrams match the direct contraction formula") {
  VerifyReport r;
  for (int m = 1; m <= 3; ++m) check_orthogonal_direct_formula(r, 3, m);
  check_orthogonal_direct_formula(r, 2, 4);
  INFO(r.text());
  CHECK(r.passed());
}

TEST_CASE("representation is multiplicative") {
  std::mt19937_64 rng(9);
  VerifyReport r;
  for (const GroupKind& kind : {GroupKind::orthogonal(3), GroupKind::symplectic(2), GroupKind::gl(2)})
    for (int m = 1; m <= 3; ++m) check_homomorphism(r, kind, m, 20, rng);
  INFO(r.text());
  CHECK(r.passed());
}

TEST_CASE("general linear mode rejects contractions") {
  CHECK_THROWS_AS(represent(generator(GeneratorKind::contraction, 1, 2, 2), GroupKind::gl(3)), DomainError);
  CHECK_THROWS_AS(represent(BrauerElement::identity(2, Rational(4)), GroupKind::orthogonal(3)), DomainError);
}

TEST_CASE("spectrum of x_2 on two orthogonal factors") {
  const GroupKind kind = GroupKind::orthogonal(3);
  const TensorOperator x = jm_operator(2, 2, kind);
  const UniPoly p = minimal_polynomial(x.matrix, RationalMatrix::identity(9));
  CHECK(half_integer_roots(p, Rational(3)) == std::vector<Rational>{Rational(-1), Rational(0), Rational(2)});
}

TEST_CASE("idempotents for two boxes") {
  for (int N : {4, 5, 6}) {
    const GroupKind kind = GroupKind::orthogonal(N);
    const TensorOperator one = TensorOperator::identity(2, N);
    const TensorOperator p = represent(generator(GeneratorKind::transposition, 1, 2, 2), kind);
    const TensorOperator q = represent(generator(GeneratorKind::contraction, 1, 2, 2), kind);
    const auto row = standard_tableaux(Partition({2})).front();
    const auto col = standard_tableaux(Partition({1, 1})).front();
    const TensorOperator e2 = primitive_idempotent(row, kind);
    CHECK(e2 == Rational(1, 2) * (one + p) - Rational(1, N) * q);
    CHECK(e2 * e2 == e2);
    CHECK(p * e2 == e2);
    CHECK((q * e2).matrix.is_zero_matrix());
    CHECK(primitive_idempotent(col, kind) == Rational(1, 2) * (one - p));
  }
  CHECK(primitive_idempotent(standard_tableaux(Partition({1})).front(), GroupKind::symplectic(4)) ==
        TensorOperator::identity(1, 4));
}

TEST_CASE("shape bounds") {
  CHECK_THROWS_AS(check_shape_bound(Partition({1, 1, 1}), GroupKind::orthogonal(5)), DomainError);
  CHECK_NOTHROW(check_shape_bound(Partition({3}), GroupKind::orthogonal(5)));
  CHECK_THROWS_AS(check_shape_bound(Partition({3}), GroupKind::symplectic(4)), DomainError);
  CHECK_NOTHROW(check_shape_bound(Partition({1, 1, 1}), GroupKind::symplectic(4)));
  CHECK_THROWS_AS(check_shape_bound(Partition({1, 1, 1}), GroupKind::gl(2)), DomainError);
}

TEST_CASE("idempotent properties up to three boxes") {
  VerifyReport r;
  for (int N : {3, 4})
    for (const GroupKind& kind : {GroupKind::gl(N), GroupKind::orthogonal(N), GroupKind::symplectic(4)})
      for (int m = 1; m <= 3; ++m)
        for (const auto& p : partitions_of(m)) {
          try {
            check_shape_bound(p, kind);
          } catch (const DomainError&) {
            continue;
          }
          check_idempotents(r, kind, p);
          check_dimensions(r, kind, p);
        }
  INFO(r.text());
  CHECK(r.passed());
}

TEST_CASE("traces against diagonal weights") {
  const GroupKind gl = GroupKind::gl(3);
  const MultiPoly t = trace_against_diagonal(TensorOperator::identity(1, 3), DiagonalWeights::lie_algebra(gl));
  CHECK(t == schur(Partition({1}), 3).poly);
  const auto col = standard_tableaux(Partition({1, 1})).front();
  CHECK(trace_against_diagonal(primitive_idempotent(col, gl), DiagonalWeights::lie_algebra(gl)) ==
        schur(Partition({1, 1}), 3).poly);
  const GroupKind o = GroupKind::orthogonal(5);
  const auto row = standard_tableaux(Partition({2})).front();
  CHECK(trace_value(primitive_idempotent(row, o), DiagonalWeights::unit(o)) == Rational(14));
  // a concrete torus element z = diag(2, 3, 1, 1/3, 1/2) on the vector representation
  const std::vector<Rational> z{Rational(2), Rational(3)};
  CHECK(trace_value(TensorOperator::identity(1, 5), DiagonalWeights::group_element(o, z)) ==
        Rational(2) + Rational(3) + Rational(1) + Rational(1, 3) + Rational(1, 2));
}

TEST_CASE("trace pairing agrees with multiplying by the weight operator") {
  const GroupKind kind = GroupKind::symplectic(4);
  const auto t = standard_tableaux(Partition({2, 1}))[1];
  const TensorOperator e = primitive_idempotent(t, kind);
  const DiagonalWeights w = DiagonalWeights::lie_algebra(kind);
  const PolyMatrix weights = weight_operator(w, 3);
  const PolyMatrix lifted = e.matrix.map_entries([&](const Rational& v) { return MultiPoly::constant(2, v); });
  CHECK((lifted * weights).trace() == trace_against_diagonal(e, w));
}
