#include <doctest.h>

#include "brauerch/charmap.hpp"
#include "brauerch/error.hpp"
#include "brauerch/groups.hpp"
#include "brauerch/verify.hpp"

using namespace brauerch;

namespace {

SchurExpansion single(int n, const Partition& nu, const Rational& c) {
  SchurExpansion e(n);
  e.add(nu, c);
  return e;
}

}  // namespace

TEST_CASE("inner square constants") {
  for (int N : {4, 6, 8}) {
    const GroupKind o = GroupKind::orthogonal(N);
    CHECK(c_constant(Partition({1}), o) == Rational(N * (N - 1)));
    CHECK(c_constant(Partition({2}), o) == Rational((N - 1) * N * (N + 1) * (N + 2)));
    CHECK(c_constant(Partition({1, 1}), o) == Rational((N - 3) * (N - 2) * (N - 1) * N));
  }
  CHECK(c_constant(Partition({2}), GroupKind::orthogonal(7)) == Rational(6 * 7 * 8 * 9));
  CHECK_THROWS_AS(c_constant(Partition({1, 1, 1}), GroupKind::orthogonal(4)), DomainError);
}

TEST_CASE("two-by-two orthogonal image") {
  for (int N : {6, 7, 8, 9}) {
    const ChImage img = ch_theorem(Partition({2, 2}), GroupKind::orthogonal(N));
    CHECK(img.expansion.coefficient(Partition({2})) == Rational(1) / Rational((N - 1) * N * (N + 1) * (N + 2)));
    CHECK(img.expansion.coefficient(Partition({1, 1})) == Rational(1) / Rational((N - 3) * (N - 2) * (N - 1) * N));
    CHECK(img.expansion.terms().size() == 2);
  }
  const ChImage six = ch_theorem(Partition({2, 2}), GroupKind::orthogonal(6));
  CHECK(six.expansion.to_string() == "1/1680*s(2) + 1/360*s(1,1)");
}

TEST_CASE("odd size gives zero") {
  CHECK(ch_theorem(Partition({2, 1}), GroupKind::orthogonal(6)).expansion.empty());
  CHECK(ch_theorem(Partition({2, 1}), GroupKind::symplectic(6)).expansion.empty());
  CHECK(ch_oracle(Partition({1}), GroupKind::orthogonal(5)).expansion.empty());
}

TEST_CASE("column of two, orthogonal") {
  for (int N : {4, 5, 6}) {
    const GroupKind o = GroupKind::orthogonal(N);
    const SchurExpansion expect = single(o.n(), Partition({1}), Rational(-1) / Rational(N * (N - 1)));
    CHECK(ch_theorem(Partition({1, 1}), o).expansion == expect);
    CHECK(ch_oracle(Partition({1, 1}), o).expansion == expect);
  }
  CHECK(ch_oracle(Partition({1, 1}), GroupKind::orthogonal(6)).expansion.to_string() == "-1/30*s(1)");
}

TEST_CASE("symplectic symmetrizer of two boxes") {
  const GroupKind sp = GroupKind::symplectic(6);
  const ChImage phi = ch_oracle(Partition({2}), sp);
  CHECK(normalization(Partition({2}), sp) == Rational(14));
  CHECK(phi.expansion == single(3, Partition({1}), Rational(-1, 42)));
  SchurExpansion scaled = phi.expansion;
  scaled *= Rational(14);
  CHECK(scaled == single(3, Partition({1}), Rational(-1, 3)));
  CHECK(scaled == symmetrizer_image(1, sp, false).expansion);
}

TEST_CASE("closed forms for symmetrizers") {
  for (int N : {4, 5, 6, 7}) {
    const GroupKind o = GroupKind::orthogonal(N);
    CHECK(symmetrizer_image(1, o, false).expansion == single(o.n(), Partition({1}), Rational(N + 2, 2 * N)));
    CHECK(symmetrizer_image(1, o, true).expansion == single(o.n(), Partition({1}), Rational(-1, 2)));
  }
  const GroupKind sp = GroupKind::symplectic(8);
  CHECK(symmetrizer_image(2, sp, true).expansion == single(4, Partition({2}), Rational(1, 24)));
  CHECK_THROWS_AS(symmetrizer_image(2, GroupKind::orthogonal(6), true), DomainError);
  CHECK_THROWS_AS(symmetrizer_image(2, GroupKind::symplectic(6), false), DomainError);
}

TEST_CASE("closed forms agree with the general formula") {
  VerifyReport r;
  for (int N : {4, 5, 6, 8, 9})
    for (int l = 1; l <= 2; ++l) {
      check_corollary(r, GroupKind::orthogonal(N), l, false);
      if (2 * l <= N / 2) check_corollary(r, GroupKind::orthogonal(N), l, true);
    }
  for (int N : {4, 6, 8})
    for (int l = 1; l <= 2; ++l) {
      check_corollary(r, GroupKind::symplectic(N), l, true);
      if (2 * l <= N / 2) check_corollary(r, GroupKind::symplectic(N), l, false);
    }
  INFO(r.text());
  CHECK(r.passed());
}

TEST_CASE("pruning by the vanishing theorem changes nothing") {
  VerifyReport r;
  for (int m : {2, 4, 6})
    for (const auto& p : partitions_of(m)) {
      for (const GroupKind& kind : {GroupKind::orthogonal(7), GroupKind::symplectic(8)}) {
        try {
          check_shape_bound(p, kind);
        } catch (const DomainError&) {
          continue;
        }
        check_pruning(r, kind, p);
      }
    }
  INFO(r.text());
  CHECK(r.passed());
}

TEST_CASE("theorem against oracle on two boxes") {
  VerifyReport r;
  for (int N : {2, 3, 4, 5})
    for (const auto& p : partitions_of(2)) {
      const GroupKind o = GroupKind::orthogonal(N);
      if (p.length() <= o.n()) check_theorem_oracle(r, o, p);
      if (N % 2 == 0 && p.part(1) <= N / 2) check_theorem_oracle(r, GroupKind::symplectic(N), p);
    }
  INFO(r.text());
  CHECK(r.passed());
}

TEST_CASE("central idempotent is central and normalized") {
  const GroupKind o = GroupKind::orthogonal(4);
  const Partition lambda({2, 1});
  const TensorOperator phi = central_idempotent(lambda, o);
  const Rational d = normalization(lambda, o);
  // each E_T has trace D, so the normalized sum has trace equal to the tableau count
  CHECK(phi.matrix.trace() == Rational(static_cast<long>(standard_tableaux(lambda).size())));
  const TensorOperator dphi = d * phi;
  CHECK(dphi * dphi == dphi);
  for (int a = 1; a < 3; ++a)
    for (GeneratorKind g : {GeneratorKind::transposition, GeneratorKind::contraction}) {
      const TensorOperator h = represent(generator(g, a, a + 1, 3), o);
      CHECK(h * phi == phi * h);
    }
}

TEST_CASE("general linear characteristic map") {
  const GroupKind gl = GroupKind::gl(3);
  const auto row = standard_tableaux(Partition({2})).front();
  CHECK(gl_characteristic(primitive_idempotent(row, gl)) == single(3, Partition({2}), Rational(1, 2)));
  CHECK(gl_characteristic(BrauerElement::identity(1, Rational(3)), 3) == single(3, Partition({1}), Rational(1)));
  CHECK_THROWS_AS(gl_characteristic(BrauerElement(generator(GeneratorKind::contraction, 1, 2, 2), Rational(3)), 3),
                  DomainError);
  VerifyReport r;
  for (int N = 1; N <= 4; ++N)
    for (int m = 1; m <= 3; ++m)
      for (const auto& p : partitions_of(m, N)) check_gl_characteristic(r, p, N);
  INFO(r.text());
  CHECK(r.passed());
}

TEST_CASE("characteristic maps reject the wrong family") {
  CHECK_THROWS_AS(ch_theorem(Partition({2}), GroupKind::gl(4)), DomainError);
  CHECK_THROWS_AS(ch_theorem(Partition({1, 1, 1, 1}), GroupKind::orthogonal(6)), DomainError);
  CHECK_THROWS_AS(ch_oracle(Partition({4}), GroupKind::symplectic(6)), DomainError);
}
