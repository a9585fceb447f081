#include "brauerch/groups.hpp"

#include <string>

#include "brauerch/error.hpp"

namespace brauerch {

namespace {

DimensionReport finish(GroupKind kind, const Partition& shape, std::vector<Rational> factors) {
  Rational numerator(1);
  for (const auto& f : factors) numerator *= f;
  Rational hook = hook_length_product(shape);
  Rational value = numerator / hook;
  return {kind, shape, std::move(value), std::move(factors), std::move(hook)};
}

void require_rows(const Partition& shape, int limit, const char* what) {
  if (shape.length() > limit)
    throw DomainError(std::string(what) + ": shape (" + shape.to_string() + ") has " +
                      std::to_string(shape.length()) + " rows, at most " + std::to_string(limit) +
                      " allowed");
}

}  // namespace

int orthogonal_d(const Partition& lambda, int i, int j) {
  if (i <= j) return lambda.part(i) + lambda.part(j) - i - j + 1;
  const Partition c = lambda.conjugate();
  return -c.part(i) - c.part(j) + i + j - 1;
}

int symplectic_d(const Partition& rho, int i, int j) {
  if (i > j) return rho.part(i) + rho.part(j) - i - j + 1;
  const Partition c = rho.conjugate();
  return -c.part(i) - c.part(j) + i + j - 1;
}

Rational orthogonal_factor_product(const Partition& lambda, const Rational& N) {
  Rational p(1);
  for (const Box& b : lambda.boxes()) p *= N - Rational(1) + Rational(orthogonal_d(lambda, b.row, b.col));
  return p;
}

Rational symplectic_factor_product(const Partition& rho, const Rational& N) {
  Rational p(1);
  for (const Box& b : rho.boxes()) p *= N + Rational(1) + Rational(symplectic_d(rho, b.row, b.col));
  return p;
}

DimensionReport dim_gl(const Partition& lambda, int N) {
  const GroupKind kind = GroupKind::gl(N);
  require_rows(lambda, N, "GL_N dimension");
  std::vector<Rational> factors;
  for (const Box& b : lambda.boxes()) factors.emplace_back(N + b.col - b.row);
  return finish(kind, lambda, std::move(factors));
}

DimensionReport dim_orth(const Partition& lambda, int N) {
  const GroupKind kind = GroupKind::orthogonal(N);
  require_rows(lambda, kind.n(), "O_N dimension");
  std::vector<Rational> factors;
  for (const Box& b : lambda.boxes()) factors.emplace_back(N - 1 + orthogonal_d(lambda, b.row, b.col));
  return finish(kind, lambda, std::move(factors));
}

DimensionReport dim_sp(const Partition& rho, int N) {
  const GroupKind kind = GroupKind::symplectic(N);
  require_rows(rho, kind.n(), "Sp_N dimension");
  std::vector<Rational> factors;
  for (const Box& b : rho.boxes()) factors.emplace_back(N + 1 + symplectic_d(rho, b.row, b.col));
  return finish(kind, rho, std::move(factors));
}

DimensionReport dimension(const Partition& shape, const GroupKind& kind) {
  switch (kind.family()) {
    case Family::general_linear: return dim_gl(shape, kind.N());
    case Family::orthogonal: return dim_orth(shape, kind.N());
    case Family::symplectic: return dim_sp(shape, kind.N());
  }
  throw InternalError("unknown group family");
}

}  // namespace brauerch
