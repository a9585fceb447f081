#include "brauerch/tensorrep.hpp"

#include <algorithm>

#include "brauerch/error.hpp"
#include "brauerch/minpoly.hpp"

namespace brauerch {

namespace {

int sign_of_permutation(const std::vector<int>& sigma) {
  std::vector<char> seen(sigma.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j])) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

void check_same_space(const TensorOperator& a, const TensorOperator& b) {
  if (a.m != b.m || a.N != b.N) throw DimensionMismatch("operators act on different tensor spaces");
}

}  // namespace

std::size_t tensor_dimension(int N, int m, bool force) {
  if (N < 1 || m < 0) throw DomainError("tensor space needs N >= 1 and m >= 0");
  std::uint64_t dim = 1;
  for (int a = 0; a < m; ++a) {
    dim *= static_cast<std::uint64_t>(N);
    if (dim > kDeskScaleLimit && !force)
      throw DomainError("N^m = " + std::to_string(N) + "^" + std::to_string(m) +
                        " exceeds the desk-scale limit of 10^6 (use --force-large)");
  }
  return static_cast<std::size_t>(dim);
}

std::size_t encode_index(std::span<const int> digits, int N) {
  std::size_t idx = 0;
  for (int d : digits) idx = idx * static_cast<std::size_t>(N) + static_cast<std::size_t>(d);
  return idx;
}

std::vector<int> decode_index(std::size_t index, int N, int m) {
  std::vector<int> digits(static_cast<std::size_t>(m));
  for (int a = m - 1; a >= 0; --a) {
    digits[static_cast<std::size_t>(a)] = static_cast<int>(index % static_cast<std::size_t>(N));
    index /= static_cast<std::size_t>(N);
  }
  return digits;
}

TensorOperator TensorOperator::identity(int m, int N, bool force) {
  return {m, N, RationalMatrix::identity(tensor_dimension(N, m, force))};
}

TensorOperator TensorOperator::zero(int m, int N, bool force) {
  return {m, N, RationalMatrix(tensor_dimension(N, m, force))};
}

TensorOperator& TensorOperator::operator+=(const TensorOperator& o) {
  check_same_space(*this, o);
  matrix += o.matrix;
  return *this;
}

TensorOperator& TensorOperator::operator-=(const TensorOperator& o) {
  check_same_space(*this, o);
  matrix -= o.matrix;
  return *this;
}

TensorOperator& TensorOperator::operator*=(const Rational& c) {
  matrix *= c;
  return *this;
}

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
  check_same_space(a, b);
  return {a.m, a.N, a.matrix * b.matrix};
}

TensorOperator permutation_operator(const std::vector<int>& sigma, const GroupKind& kind, bool force) {
  const int m = static_cast<int>(sigma.size());
  const int N = kind.N();
  const std::size_t dim = tensor_dimension(N, m, force);
  const Rational value(kind.family() == Family::symplectic ? sign_of_permutation(sigma) : 1);
  TensorOperator op{m, N, RationalMatrix(dim)};
  std::vector<int> in(static_cast<std::size_t>(m));
  for (std::size_t row = 0; row < dim; ++row) {
    // entry [I, J] = 1 iff I_a = J_sigma(a) for every a
    const std::vector<int> out = decode_index(row, N, m);
    for (int a = 0; a < m; ++a)
      in[static_cast<std::size_t>(sigma[static_cast<std::size_t>(a)])] = out[static_cast<std::size_t>(a)];
    op.matrix.push_back_unchecked(row, encode_index(in, N), value);
  }
  return op;
}

TensorOperator contraction_operator(int a, int b, int m, const GroupKind& kind, bool force) {
  if (!kind.is_brauer()) throw DomainError("contractions have no image for the general linear group");
  if (!(1 <= a && a < b && b <= m)) throw DomainError("contraction indices must satisfy 1 <= a < b <= m");
  const int N = kind.N();
  const int n = kind.n();
  const bool sp = kind.family() == Family::symplectic;
  const std::size_t dim = tensor_dimension(N, m, force);
  const auto ia = static_cast<std::size_t>(a - 1), ib = static_cast<std::size_t>(b - 1);
  auto eps = [n](int digit) { return digit < n ? 1 : -1; };
  TensorOperator op{m, N, RationalMatrix(dim)};
  for (std::size_t row = 0; row < dim; ++row) {
    std::vector<int> idx = decode_index(row, N, m);
    if (idx[ib] != N - 1 - idx[ia]) continue;
    const int row_sign = eps(idx[ia]);
    for (int j = 0; j < N; ++j) {
      idx[ia] = j;
      idx[ib] = N - 1 - j;
      const int v = sp ? -row_sign * eps(j) : 1;
      op.matrix.push_back_unchecked(row, encode_index(idx, N), Rational(v));
    }
  }
  return op;
}

TensorOperator represent(const BrauerDiagram& d, const GroupKind& kind, bool force) {
  if (d.is_permutation()) return permutation_operator(d.permutation(), kind, force);
  if (!kind.is_brauer())
    throw DomainError("diagram " + d.to_string() + " lies outside the symmetric group span");
  const int m = d.m();
  const auto top = d.top_arcs();
  const auto bottom = d.bottom_arcs();
  const auto through = d.through_strands();
  const int k = static_cast<int>(top.size());
  std::vector<int> to_middle(static_cast<std::size_t>(m)), from_middle(static_cast<std::size_t>(m));
  for (int i = 0; i < k; ++i) {
    to_middle[static_cast<std::size_t>(top[static_cast<std::size_t>(i)].first)] = 2 * i;
    to_middle[static_cast<std::size_t>(top[static_cast<std::size_t>(i)].second)] = 2 * i + 1;
    from_middle[static_cast<std::size_t>(2 * i)] = bottom[static_cast<std::size_t>(i)].first;
    from_middle[static_cast<std::size_t>(2 * i + 1)] = bottom[static_cast<std::size_t>(i)].second;
  }
  for (std::size_t j = 0; j < through.size(); ++j) {
    to_middle[static_cast<std::size_t>(through[j].first)] = 2 * k + static_cast<int>(j);
    from_middle[static_cast<std::size_t>(2 * k) + j] = through[j].second;
  }
  const BrauerDiagram w1 = BrauerDiagram::from_permutation(to_middle);
  const BrauerDiagram w2 = BrauerDiagram::from_permutation(from_middle);
  BrauerDiagram arcs = BrauerDiagram::identity(m);
  for (int i = 0; i < k; ++i) arcs = compose(arcs, generator(GeneratorKind::contraction, 2 * i + 1, 2 * i + 2, m)).first;
  const auto [left, loops1] = compose(w1, arcs);
  const auto [whole, loops2] = compose(left, w2);
  if (!(whole == d) || loops1 + loops2 != 0)
    throw InternalError("diagram factorization failed for " + d.to_string());

  TensorOperator op = permutation_operator(w1.permutation(), kind, force);
  for (int i = 0; i < k; ++i) op = op * contraction_operator(2 * i + 1, 2 * i + 2, m, kind, force);
  return op * permutation_operator(w2.permutation(), kind, force);
}

TensorOperator represent(const BrauerElement& e, const GroupKind& kind, bool force) {
  if (kind.is_brauer() && e.omega() != kind.omega())
    throw DomainError("element has omega = " + e.omega().to_string() + " but the " +
                      kind.family_name() + " group requires omega = " + kind.omega().to_string());
  if (!kind.is_brauer() && !e.in_symmetric_group_span())
    throw DomainError("element lies outside the symmetric group span");
  TensorOperator sum = TensorOperator::zero(e.m(), kind.N(), force);
  for (const auto& [d, c] : e.terms()) sum += c * represent(d, kind, force);
  return sum;
}

TensorOperator jm_operator(int b, int m, const GroupKind& kind, bool force) {
  if (b < 1 || b > m) throw DomainError("Jucys-Murphy index out of range");
  if (kind.is_brauer()) return represent(jm_element(b, m, kind.omega()), kind, force);
  TensorOperator x = TensorOperator::zero(m, kind.N(), force);
  for (int a = 1; a < b; ++a)
    x += represent(generator(GeneratorKind::transposition, a, b, m), kind, force);
  return x;
}

TensorOperator extend_by_identity(const TensorOperator& a, bool force) {
  const int N = a.N;
  const std::size_t dim = tensor_dimension(N, a.m + 1, force);
  TensorOperator out{a.m + 1, N, RationalMatrix(dim)};
  const auto uN = static_cast<std::size_t>(N);
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    const auto& row = a.matrix.row(r);
    for (std::size_t i = 0; i < uN; ++i)
      for (const auto& [c, v] : row) out.matrix.push_back_unchecked(r * uN + i, c * uN + i, v);
  }
  return out;
}

TensorOperator partial_trace(const TensorOperator& a, int slot) {
  if (slot < 1 || slot > a.m) throw DomainError("partial trace slot out of range");
  const int N = a.N;
  TensorOperator out{a.m - 1, N, RationalMatrix(tensor_dimension(N, a.m - 1, true))};
  const auto s = static_cast<std::size_t>(slot - 1);
  a.matrix.for_each([&](std::size_t r, std::size_t c, const Rational& v) {
    std::vector<int> ri = decode_index(r, N, a.m), ci = decode_index(c, N, a.m);
    if (ri[s] != ci[s]) return;
    ri.erase(ri.begin() + static_cast<std::ptrdiff_t>(s));
    ci.erase(ci.begin() + static_cast<std::ptrdiff_t>(s));
    out.matrix.add_to(encode_index(ri, N), encode_index(ci, N), v);
  });
  return out;
}

void check_shape_bound(const Partition& lambda, const GroupKind& kind) {
  switch (kind.family()) {
    case Family::orthogonal:
      if (lambda.length() > kind.n())
        throw DomainError("orthogonal shapes need at most n = " + std::to_string(kind.n()) +
                          " rows, got (" + lambda.to_string() + ")");
      return;
    case Family::symplectic:
      if (lambda.part(1) > kind.n())
        throw DomainError("symplectic shapes need at most n = " + std::to_string(kind.n()) +
                          " columns, got (" + lambda.to_string() + ")");
      return;
    case Family::general_linear:
      if (lambda.length() > kind.N())
        throw DomainError("general linear shapes need at most N = " + std::to_string(kind.N()) +
                          " rows, got (" + lambda.to_string() + ")");
      return;
  }
}

IdempotentBuilder::IdempotentBuilder(GroupKind kind, bool force) : kind_(kind), force_(force) {}

const TensorOperator& IdempotentBuilder::jm(int m) {
  auto it = jm_cache_.find(m);
  if (it == jm_cache_.end()) it = jm_cache_.emplace(m, jm_operator(m, m, kind_, force_)).first;
  return it->second;
}

const TensorOperator& IdempotentBuilder::build(const StandardTableau& t) {
  if (auto it = cache_.find(t.chain()); it != cache_.end()) return it->second;
  check_shape_bound(t.shape(), kind_);
  const int m = t.size();
  if (m == 0) throw DomainError("the empty tableau has no idempotent");
  tensor_dimension(kind_.N(), m, force_);
  if (m == 1) return cache_.emplace(t.chain(), TensorOperator::identity(1, kind_.N(), force_)).first->second;

  const TensorOperator lifted = extend_by_identity(build(t.without_last()), force_);
  const TensorOperator& x = jm(m);
  const std::optional<Rational> omega =
      kind_.is_brauer() ? std::optional<Rational>(kind_.omega()) : std::nullopt;
  const Rational c = contents(t, omega).back();
  const Rational bound = kind_.is_brauer()
                             ? (kind_.omega().abs() - Rational(1)) / Rational(2) + Rational(m)
                             : Rational(m);

  const UniPoly minpoly = minimal_polynomial(x.matrix, lifted.matrix);
  std::vector<Rational> spectrum = half_integer_roots(minpoly, bound);
  if (std::adjacent_find(spectrum.begin(), spectrum.end()) != spectrum.end())
    throw InternalError("x_" + std::to_string(m) + " is not semisimple on the image of E_U (" +
                        minpoly.to_string() + ")");
  if (std::find(spectrum.begin(), spectrum.end(), c) == spectrum.end())
    throw InternalError("content " + c.to_string() + " is not an eigenvalue of x_" + std::to_string(m) +
                        " on the image of E_U for tableau " + t.to_string());

  RationalMatrix e = lifted.matrix;
  const std::size_t dim = e.dimension();
  for (const Rational& d : spectrum) {
    if (d == c) continue;
    RationalMatrix shifted = x.matrix - RationalMatrix::scalar(dim, d);
    shifted *= (c - d).inverse();
    e = e * shifted;
  }
  spectra_.emplace(t.chain(), std::move(spectrum));
  return cache_.emplace(t.chain(), TensorOperator{m, kind_.N(), std::move(e)}).first->second;
}

const std::vector<Rational>& IdempotentBuilder::spectrum(const StandardTableau& t) {
  if (t.size() < 2) throw DomainError("spectrum is recorded for tableaux with at least two boxes");
  build(t);
  return spectra_.at(t.chain());
}

TensorOperator primitive_idempotent(const StandardTableau& t, const GroupKind& kind, bool force) {
  IdempotentBuilder builder(kind, force);
  return builder.build(t);
}

DiagonalWeights DiagonalWeights::lie_algebra(const GroupKind& kind) {
  const int N = kind.N();
  if (!kind.is_brauer()) {
    std::vector<MultiPoly> e;
    for (int i = 0; i < N; ++i) e.push_back(MultiPoly::variable(static_cast<std::size_t>(N), static_cast<std::size_t>(i)));
    return {kind, static_cast<std::size_t>(N), std::move(e)};
  }
  const auto n = static_cast<std::size_t>(kind.n());
  std::vector<MultiPoly> e(static_cast<std::size_t>(N), MultiPoly(n));
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = MultiPoly::variable(n, i);
    e[static_cast<std::size_t>(N) - 1 - i] = -MultiPoly::variable(n, i);
  }
  return {kind, n, std::move(e)};
}

DiagonalWeights DiagonalWeights::group_element(const GroupKind& kind, std::span<const Rational> z) {
  const int N = kind.N();
  std::vector<MultiPoly> e(static_cast<std::size_t>(N));
  if (!kind.is_brauer()) {
    if (static_cast<int>(z.size()) != N) throw DimensionMismatch("GL_N group element needs N eigenvalues");
    for (int i = 0; i < N; ++i) e[static_cast<std::size_t>(i)] = MultiPoly::constant(0, z[static_cast<std::size_t>(i)]);
    return {kind, 0, std::move(e)};
  }
  const int n = kind.n();
  if (static_cast<int>(z.size()) != n) throw DimensionMismatch("group element needs n eigenvalues z_1..z_n");
  for (int i = 0; i < n; ++i) {
    e[static_cast<std::size_t>(i)] = MultiPoly::constant(0, z[static_cast<std::size_t>(i)]);
    e[static_cast<std::size_t>(N - 1 - i)] = MultiPoly::constant(0, z[static_cast<std::size_t>(i)].inverse());
  }
  if (N % 2 == 1) e[static_cast<std::size_t>(n)] = MultiPoly::constant(0, Rational(1));
  return {kind, 0, std::move(e)};
}

DiagonalWeights DiagonalWeights::unit(const GroupKind& kind) {
  const std::size_t count = static_cast<std::size_t>(kind.is_brauer() ? kind.n() : kind.N());
  std::vector<Rational> ones(count, Rational(1));
  return group_element(kind, ones);
}

MultiPoly trace_against_diagonal(const TensorOperator& a, const DiagonalWeights& w) {
  if (w.kind().N() != a.N) throw DimensionMismatch("weights and operator disagree on N");
  MultiPoly sum(w.variable_count());
  const auto& entries = w.entries();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const Rational v = a.matrix.at(i, i);
    if (v.is_zero()) continue;
    MultiPoly term = MultiPoly::constant(w.variable_count(), v);
    for (int digit : decode_index(i, a.N, a.m)) {
      term *= entries[static_cast<std::size_t>(digit)];
      if (term.is_zero()) break;
    }
    sum += term;
  }
  return sum;
}

Rational trace_value(const TensorOperator& a, const DiagonalWeights& w) {
  if (w.variable_count() != 0) throw DomainError("trace_value needs concrete weights");
  return trace_against_diagonal(a, w).constant_term();
}

PolyMatrix weight_operator(const DiagonalWeights& w, int m, bool force) {
  const int N = w.kind().N();
  const std::size_t dim = tensor_dimension(N, m, force);
  PolyMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    MultiPoly term = MultiPoly::constant(w.variable_count(), Rational(1));
    for (int digit : decode_index(i, N, m)) term *= w.entries()[static_cast<std::size_t>(digit)];
    if (!term.is_zero()) out.push_back_unchecked(i, i, std::move(term));
  }
  return out;
}

}  // namespace brauerch
