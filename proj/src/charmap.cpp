#include "brauerch/charmap.hpp"

#include <string>

#include "brauerch/error.hpp"
#include "brauerch/groups.hpp"

namespace brauerch {

namespace {

void require_brauer(const GroupKind& kind) {
  if (!kind.is_brauer())
    throw DomainError("this map is defined for the orthogonal and symplectic groups only");
}

Partition column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

}  // namespace

Rational c_constant(const Partition& nu, const GroupKind& kind) {
  require_brauer(kind);
  const int n = kind.n();
  if (nu.length() > n)
    throw DomainError("C(nu) needs l(nu) <= n = " + std::to_string(n) + ", got (" + nu.to_string() + ")");
  const Rational eps = kind.epsilon();
  Rational c(1);
  for (const Box& b : nu.boxes()) {
    const int s = b.col - b.row;
    c *= Rational(2 * (n + s)) * (Rational(kind.N() - 1) + Rational(2) * (Rational(s) + eps));
  }
  return c;
}

ChImage ch_theorem(const Partition& lambda, const GroupKind& kind, bool prune) {
  require_brauer(kind);
  check_shape_bound(lambda, kind);
  const int n = kind.n();
  ChImage image{lambda, kind, n, SchurExpansion(n)};
  const int m = lambda.size();
  if (m % 2 != 0) return image;

  const ParameterSequence a = ParameterSequence::for_group(kind);
  const bool sp = kind.family() == Family::symplectic;
  struct Summand {
    Partition rho;
    std::vector<Rational> point;
    Rational weight;
  };
  std::vector<Summand> summands;
  for (const Partition& mu : subpartitions(lambda)) {
    Partition rho = sp ? mu.conjugate() : mu;
    Rational w = Rational(mu.size() % 2 == 0 ? 1 : -1) /
                 (hook_product(SkewShape(mu)) * hook_product(SkewShape(lambda, mu)));
    std::vector<Rational> point = a_rho(rho, n, a);
    summands.push_back({std::move(rho), std::move(point), std::move(w)});
  }

  for (const Partition& nu : partitions_of(m / 2, n)) {
    const DoubleSchur s = double_schur(nu, n, a);
    Rational sum(0);
    for (const Summand& t : summands) {
      if (prune && !t.rho.contains(nu)) continue;
      sum += t.weight * s(t.point);
    }
    if (!sum.is_zero()) image.expansion.add(nu, sum / c_constant(nu, kind));
  }
  return image;
}

Rational normalization(const Partition& lambda, const GroupKind& kind) {
  require_brauer(kind);
  check_shape_bound(lambda, kind);
  if (kind.family() == Family::symplectic) return dim_sp(lambda.conjugate(), kind.N()).value;
  return dim_orth(lambda, kind.N()).value;
}

TensorOperator central_idempotent(const Partition& lambda, const GroupKind& kind, bool force) {
  const Rational d = normalization(lambda, kind);
  if (lambda.empty()) throw DomainError("the empty shape has no idempotent");
  IdempotentBuilder builder(kind, force);
  TensorOperator phi = TensorOperator::zero(lambda.size(), kind.N(), force);
  for (const StandardTableau& t : standard_tableaux(lambda)) phi += builder.build(t);
  phi *= d.inverse();
  return phi;
}

SchurExpansion brauer_characteristic(const TensorOperator& c, const GroupKind& kind) {
  require_brauer(kind);
  MultiPoly tr = trace_against_diagonal(c, DiagonalWeights::lie_algebra(kind));
  if (!tr.has_only_even_exponents())
    throw InternalError("trace has odd powers of y: " + tr.to_string());
  tr *= factorial(c.m).inverse();
  return schur_expand(SymmetricPolynomial{tr.halve_exponents()});
}

ChImage ch_oracle(const Partition& lambda, const GroupKind& kind, bool force) {
  require_brauer(kind);
  check_shape_bound(lambda, kind);
  const int n = kind.n();
  ChImage image{lambda, kind, n, SchurExpansion(n)};
  if (lambda.empty()) return image;
  const Rational d = normalization(lambda, kind);
  const DiagonalWeights y = DiagonalWeights::lie_algebra(kind);
  IdempotentBuilder builder(kind, force);
  // the trace is linear, so φ_λ is never assembled
  MultiPoly tr(static_cast<std::size_t>(n));
  for (const StandardTableau& t : standard_tableaux(lambda)) tr += trace_against_diagonal(builder.build(t), y);
  if (!tr.has_only_even_exponents())
    throw InternalError("trace has odd powers of y: " + tr.to_string());
  tr *= (factorial(lambda.size()) * d).inverse();
  image.expansion = schur_expand(SymmetricPolynomial{tr.halve_exponents()});
  return image;
}

ChImage symmetrizer_image(int l, const GroupKind& kind, bool anti) {
  require_brauer(kind);
  if (l < 1) throw DomainError("symmetrizer images need l >= 1");
  const int n = kind.n();
  const bool sp = kind.family() == Family::symplectic;
  if (sp != anti && 2 * l > n)
    throw DomainError(std::string(sp ? "symplectic symmetrizer" : "orthogonal antisymmetrizer") +
                      " needs 2l <= n = " + std::to_string(n));
  const Rational N(kind.N());
  const Rational inv = factorial(2 * l).inverse();
  const Rational sign(l % 2 == 0 ? 1 : -1);
  Rational coeff;
  Partition nu;
  if (!sp && !anti) {
    coeff = inv * (N + Rational(4 * l - 2)) / (N + Rational(2 * l - 2));
    nu = Partition({l});
  } else if (!sp) {
    coeff = sign * inv;
    nu = column(l);
  } else if (!anti) {
    coeff = sign * inv * Rational(n - 2 * l + 1) / Rational(n - l + 1);
    nu = column(l);
  } else {
    coeff = inv;
    nu = Partition({l});
  }
  ChImage image{anti ? column(2 * l) : Partition({2 * l}), kind, n, SchurExpansion(n)};
  if (nu.length() <= n) image.expansion.add(nu, coeff);
  return image;
}

SchurExpansion gl_characteristic(const TensorOperator& c) {
  const GroupKind kind = GroupKind::gl(c.N);
  MultiPoly tr = trace_against_diagonal(c, DiagonalWeights::lie_algebra(kind));
  tr *= factorial(c.m).inverse();
  return schur_expand(SymmetricPolynomial{tr});
}

SchurExpansion gl_characteristic(const BrauerElement& c, int N) {
  return gl_characteristic(represent(c, GroupKind::gl(N)));
}

TensorOperator chi_lambda(const Partition& lambda, int N, bool force) {
  const GroupKind kind = GroupKind::gl(N);
  check_shape_bound(lambda, kind);
  if (lambda.empty()) throw DomainError("the empty shape has no idempotent");
  IdempotentBuilder builder(kind, force);
  TensorOperator chi = TensorOperator::zero(lambda.size(), N, force);
  for (const StandardTableau& t : standard_tableaux(lambda)) chi += builder.build(t);
  chi *= factorial(lambda.size()) / Rational(dim_skew(SkewShape(lambda)));
  return chi;
}

}  // namespace brauerch
