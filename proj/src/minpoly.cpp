#include "brauerch/minpoly.hpp"

#include <cstdint>
#include <utility>

#include "brauerch/error.hpp"

namespace brauerch {
namespace {

using SparseVec = std::vector<std::pair<std::uint64_t, Rational>>;

SparseVec flatten(const RationalMatrix& m) {
  SparseVec v;
  v.reserve(m.nnz());
  const std::uint64_t dim = m.dimension();
  m.for_each([&](std::size_t r, std::size_t c, const Rational& x) {
    v.emplace_back(static_cast<std::uint64_t>(r) * dim + c, x);
  });
  return v;
}

// v -= f * b
void axpy(SparseVec& v, const Rational& f, const SparseVec& b) {
  SparseVec out;
  out.reserve(v.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < b.size()) {
    if (j == b.size() || (i < v.size() && v[i].first < b[j].first)) {
      out.push_back(std::move(v[i++]));
    } else if (i == v.size() || b[j].first < v[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Rational x = v[i].second - f * b[j].second;
      if (!x.is_zero()) out.emplace_back(v[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

const Rational* find(const SparseVec& v, std::uint64_t key) {
  auto it = std::lower_bound(v.begin(), v.end(), key,
                             [](const auto& e, std::uint64_t k) { return e.first < k; });
  return (it != v.end() && it->first == key) ? &it->second : nullptr;
}

}  // namespace

RationalMatrix evaluate(const UniPoly& p, const RationalMatrix& a) {
  const std::size_t dim = a.dimension();
  RationalMatrix acc(dim);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * a;
    acc += RationalMatrix::scalar(dim, p.coefficient(k));
  }
  return acc;
}

UniPoly minimal_polynomial(const RationalMatrix& a, const RationalMatrix& seeds) {
  if (a.dimension() != seeds.dimension())
    throw DimensionMismatch("seed set and matrix have different dimensions");
  if (seeds.is_zero_matrix()) return UniPoly::constant(1);

  struct Reduced {
    std::uint64_t pivot;
    SparseVec vec;
    std::vector<Rational> comb;  // expression in terms of the Krylov powers
  };
  std::vector<Reduced> basis;
  RationalMatrix krylov = seeds;
  for (std::size_t j = 0; j <= a.dimension(); ++j) {
    SparseVec v = flatten(krylov);
    std::vector<Rational> comb(j + 1);
    comb[j] = Rational(1);
    for (const auto& b : basis) {
      const Rational* x = find(v, b.pivot);
      if (x == nullptr) continue;
      const Rational f = *x / find(b.vec, b.pivot)[0];
      axpy(v, f, b.vec);
      for (std::size_t k = 0; k < b.comb.size(); ++k) comb[k] -= f * b.comb[k];
    }
    if (v.empty()) return UniPoly(std::move(comb));
    const std::uint64_t pivot = v.front().first;
    basis.push_back({pivot, std::move(v), std::move(comb)});
    krylov = a * krylov;
  }
  throw InternalError("Krylov sequence failed to become dependent");
}

std::vector<Rational> half_integer_roots(const UniPoly& p, const Rational& bound) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no finite root set");
  std::vector<Rational> roots;
  UniPoly rest = p;
  const Rational twice_bound = (bound * Rational(2)).abs();
  mpz_class floor_twice;
  mpz_fdiv_q(floor_twice.get_mpz_t(), twice_bound.value().get_num_mpz_t(),
             twice_bound.value().get_den_mpz_t());
  const long limit = floor_twice.get_si();
  for (long twice = -limit; twice <= limit && rest.degree() > 0; ++twice) {
    const Rational c(twice, 2);
    for (;;) {
      auto [q, r] = rest.divide_linear(c);
      if (!r.is_zero()) break;
      roots.push_back(c);
      rest = std::move(q);
      if (rest.degree() == 0) break;
    }
  }
  if (rest.degree() > 0)
    throw DomainError("polynomial " + p.to_string() +
                      " does not split over half-integers of modulus <= " + bound.to_string());
  return roots;
}

}  // namespace brauerch
