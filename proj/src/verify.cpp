#include "brauerch/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "brauerch/brauer.hpp"
#include "brauerch/charmap.hpp"
#include "brauerch/error.hpp"
#include "brauerch/groups.hpp"
#include "brauerch/serialize.hpp"
#include "brauerch/symfunc.hpp"
#include "brauerch/tensorrep.hpp"

namespace brauerch {

namespace {

// Runs f, which returns an empty string on success or a counterexample.
template <class F>
void guarded(VerifyReport& r, const std::string& name, F&& f) {
  try {
    std::string detail = f();
    const bool ok = detail.empty();
    r.add(name, ok, std::move(detail));
  } catch (const std::exception& e) {
    r.add(name, false, std::string("exception: ") + e.what());
  }
}

std::string kind_label(const GroupKind& kind) { return kind.family_name() + " N=" + std::to_string(kind.N()); }

std::string shape_label(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string mismatch(const std::string& lhs, const std::string& rhs) { return lhs + " != " + rhs; }

BrauerElement gen(GeneratorKind k, int a, int b, int m, const Rational& omega) {
  return BrauerElement(generator(k, a, b, m), omega);
}

std::string compare(const BrauerElement& lhs, const BrauerElement& rhs) {
  return lhs == rhs ? std::string() : mismatch(lhs.to_string(), rhs.to_string());
}

std::string compare(const TensorOperator& lhs, const TensorOperator& rhs) {
  if (lhs == rhs) return {};
  std::ostringstream os;
  os << "operators differ (nnz " << lhs.matrix.nnz() << " vs " << rhs.matrix.nnz() << ")";
  const std::size_t dim = std::min(lhs.dimension(), rhs.dimension());
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& a = lhs.matrix.row(i);
    const auto& b = rhs.matrix.row(i);
    if (a == b) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      const Rational x = lhs.matrix.at(i, j), y = rhs.matrix.at(i, j);
      if (!(x == y)) {
        os << "; first at [" << i << "," << j << "]: " << x << " vs " << y;
        return os.str();
      }
    }
  }
  return os.str();
}

std::string compare(const SchurExpansion& lhs, const SchurExpansion& rhs) {
  return lhs == rhs ? std::string() : mismatch(lhs.to_string(), rhs.to_string());
}

std::string compare(const Rational& lhs, const Rational& rhs) {
  return lhs == rhs ? std::string() : mismatch(lhs.to_string(), rhs.to_string());
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  int p = 0;
  while (p == 0) p = num(rng);
  return Rational(p, den(rng));
}

BrauerElement random_element(int m, const Rational& omega, bool permutations_only, std::mt19937_64& rng) {
  static thread_local std::map<int, std::vector<BrauerDiagram>> pools;
  auto& pool = pools[m * 2 + (permutations_only ? 1 : 0)];
  if (pool.empty()) {
    for (const auto& d : all_diagrams(m))
      if (!permutations_only || d.is_permutation()) pool.push_back(d);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(1, 3);
  BrauerElement e(m, omega);
  for (int t = count(rng); t > 0; --t) e.add(pool[pick(rng)], random_rational(rng));
  return e;
}

TensorOperator random_single_factor(int N, std::mt19937_64& rng) {
  TensorOperator x = TensorOperator::zero(1, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) x.matrix.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), random_rational(rng));
  return x;
}

std::vector<int> default_or(const std::vector<int>& given, std::vector<int> fallback) {
  return given.empty() ? fallback : given;
}

bool fits(const Partition& lambda, const GroupKind& kind) {
  try {
    check_shape_bound(lambda, kind);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::vector<GroupKind> kinds_for(int N, bool with_gl) {
  std::vector<GroupKind> kinds;
  if (with_gl) kinds.push_back(GroupKind::gl(N));
  if (N >= 2) kinds.push_back(GroupKind::orthogonal(N));
  if (N % 2 == 0) kinds.push_back(GroupKind::symplectic(N));
  return kinds;
}

// Shared per kind so prefixes are built once per suite run.
IdempotentBuilder& builder_for(const GroupKind& kind) {
  static thread_local std::map<std::pair<int, int>, IdempotentBuilder> builders;
  const std::pair<int, int> key{static_cast<int>(kind.family()), kind.N()};
  auto it = builders.find(key);
  if (it == builders.end()) it = builders.emplace(key, IdempotentBuilder(kind)).first;
  return it->second;
}

Rational double_factorial_odd(int m) {
  Rational r(1);
  for (int k = 1; k <= 2 * m - 1; k += 2) r *= Rational(k);
  return r;
}

}  // namespace

void VerifyReport::add(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
}

void VerifyReport::merge(const VerifyReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << suite_ << ": " << checks_.size() - failures() << "/" << checks_.size() << " checks passed\n";
  return os.str();
}

std::string VerifyReport::json() const {
  Json checks = Json::array();
  for (const auto& c : checks_) {
    Json entry = {{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return dump({{"suite", suite_},
               {"passed", passed()},
               {"total", checks_.size()},
               {"failures", failures()},
               {"checks", checks}});
}

void check_brauer_relations(VerifyReport& r, const Rational& omega, int m) {
  const std::string tag = " m=" + std::to_string(m) + " omega=" + omega.to_string();
  const BrauerElement one = BrauerElement::identity(m, omega);
  auto s = [&](int a) { return gen(GeneratorKind::transposition, a, a + 1, m, omega); };
  auto e = [&](int a) { return gen(GeneratorKind::contraction, a, a + 1, m, omega); };
  guarded(r, "s_a^2 = 1" + tag, [&] {
    for (int a = 1; a < m; ++a)
      if (auto d = compare(s(a) * s(a), one); !d.empty()) return "a=" + std::to_string(a) + ": " + d;
    return std::string();
  });
  guarded(r, "e_a^2 = omega e_a" + tag, [&] {
    for (int a = 1; a < m; ++a)
      if (auto d = compare(e(a) * e(a), omega * e(a)); !d.empty()) return "a=" + std::to_string(a) + ": " + d;
    return std::string();
  });
  guarded(r, "e_a s_a = s_a e_a = e_a" + tag, [&] {
    for (int a = 1; a < m; ++a) {
      if (auto d = compare(e(a) * s(a), e(a)); !d.empty()) return "a=" + std::to_string(a) + ": " + d;
      if (auto d = compare(s(a) * e(a), e(a)); !d.empty()) return "a=" + std::to_string(a) + ": " + d;
    }
    return std::string();
  });
  guarded(r, "braid relation" + tag, [&] {
    for (int a = 1; a + 1 < m; ++a)
      if (auto d = compare(s(a) * s(a + 1) * s(a), s(a + 1) * s(a) * s(a + 1)); !d.empty())
        return "a=" + std::to_string(a) + ": " + d;
    return std::string();
  });
  guarded(r, "e_a e_{a+-1} e_a = e_a" + tag, [&] {
    for (int a = 1; a + 1 < m; ++a) {
      if (auto d = compare(e(a) * e(a + 1) * e(a), e(a)); !d.empty()) return "a=" + std::to_string(a) + ": " + d;
      if (auto d = compare(e(a + 1) * e(a) * e(a + 1), e(a + 1)); !d.empty())
        return "a=" + std::to_string(a + 1) + ": " + d;
    }
    return std::string();
  });
  guarded(r, "Jucys-Murphy elements commute" + tag, [&] {
    for (int a = 1; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b) {
        const BrauerElement xa = jm_element(a, m, omega), xb = jm_element(b, m, omega);
        if (auto d = compare(xa * xb, xb * xa); !d.empty())
          return "x_" + std::to_string(a) + " x_" + std::to_string(b) + ": " + d;
      }
    return std::string();
  });
  if (m < 2) return;
  guarded(r, "e_{m-1} x_m = -e_{m-1} x_{m-1}" + tag, [&] {
    const BrauerElement em = e(m - 1);
    return compare(em * jm_element(m, m, omega), Rational(-1) * (em * jm_element(m - 1, m, omega)));
  });
  guarded(r, "s_{m-1} x_m = x_{m-1} s_{m-1} + 1 - e_{m-1}" + tag, [&] {
    const BrauerElement sm = s(m - 1);
    return compare(sm * jm_element(m, m, omega), jm_element(m - 1, m, omega) * sm + one - e(m - 1));
  });
}

void check_associativity(VerifyReport& r, const Rational& omega, int m, int trials, std::mt19937_64& rng) {
  guarded(r, "associativity m=" + std::to_string(m) + " omega=" + omega.to_string(), [&] {
    const auto all = all_diagrams(m);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < trials; ++t) {
      const BrauerElement a(all[pick(rng)], omega), b(all[pick(rng)], omega), c(all[pick(rng)], omega);
      if (auto d = compare((a * b) * c, a * (b * c)); !d.empty()) return d;
    }
    return std::string();
  });
}

void check_symmetric_closure(VerifyReport& r, int m) {
  guarded(r, "permutation diagrams compose as permutations m=" + std::to_string(m), [&] {
    std::vector<int> s1(static_cast<std::size_t>(m));
    std::iota(s1.begin(), s1.end(), 0);
    do {
      std::vector<int> s2(s1.size());
      std::iota(s2.begin(), s2.end(), 0);
      do {
        const auto [d, loops] = compose(BrauerDiagram::from_permutation(s1), BrauerDiagram::from_permutation(s2));
        std::vector<int> expect(s1.size());
        for (std::size_t a = 0; a < s1.size(); ++a) expect[a] = s2[static_cast<std::size_t>(s1[a])];
        if (loops != 0 || !d.is_permutation() || d.permutation() != expect)
          return "product of " + BrauerDiagram::from_permutation(s1).to_string() + " and " +
                 BrauerDiagram::from_permutation(s2).to_string() + " gave " + d.to_string();
      } while (std::next_permutation(s2.begin(), s2.end()));
    } while (std::next_permutation(s1.begin(), s1.end()));
    return std::string();
  });
}

void check_basis_count(VerifyReport& r, int m) {
  guarded(r, "basis count (2m-1)!! m=" + std::to_string(m), [&] {
    const Rational expect = double_factorial_odd(m);
    if (auto d = compare(Rational(static_cast<long>(count_basis(m))), expect); !d.empty()) return d;
    const auto all = all_diagrams(m);
    if (auto d = compare(Rational(static_cast<long>(all.size())), expect); !d.empty()) return "enumeration: " + d;
    return std::string();
  });
}

void check_homomorphism(VerifyReport& r, const GroupKind& kind, int m, int pairs, std::mt19937_64& rng) {
  guarded(r, "represent is multiplicative " + kind_label(kind) + " m=" + std::to_string(m), [&] {
    const Rational omega = kind.is_brauer() ? kind.omega() : Rational(kind.N());
    for (int t = 0; t < pairs; ++t) {
      const BrauerElement a = random_element(m, omega, !kind.is_brauer(), rng);
      const BrauerElement b = random_element(m, omega, !kind.is_brauer(), rng);
      if (auto d = compare(represent(a * b, kind), represent(a, kind) * represent(b, kind)); !d.empty())
        return a.to_string() + " times " + b.to_string() + ": " + d;
    }
    return std::string();
  });
}

void check_tensor_identities(VerifyReport& r, const GroupKind& kind, std::mt19937_64& rng) {
  const std::string tag = " " + kind_label(kind);
  const int N = kind.N();
  const GroupKind plain = GroupKind::orthogonal(std::max(N, 2));
  guarded(r, "tr_a P_ab = 1" + tag, [&] {
    if (N < 2) return std::string();
    for (int slot : {1, 2}) {
      const TensorOperator p = permutation_operator({1, 0}, plain);
      if (auto d = compare(partial_trace(p, slot), TensorOperator::identity(1, N)); !d.empty())
        return "slot " + std::to_string(slot) + ": " + d;
    }
    return std::string();
  });
  if (!kind.is_brauer()) return;
  const Rational sign(kind.family() == Family::symplectic ? -1 : 1);
  guarded(r, "tr_a Q_ab = 1" + tag, [&] {
    for (int slot : {1, 2}) {
      TensorOperator q = contraction_operator(1, 2, 2, kind);
      q *= sign;
      if (auto d = compare(partial_trace(q, slot), TensorOperator::identity(1, N)); !d.empty())
        return "slot " + std::to_string(slot) + ": " + d;
    }
    return std::string();
  });
  guarded(r, "Q_ab X_a Q_ab = tr(X) Q_ab" + tag, [&] {
    const TensorOperator x = random_single_factor(N, rng);
    const TensorOperator xa = extend_by_identity(x);
    TensorOperator q = contraction_operator(1, 2, 2, kind);
    q *= sign;
    return compare(q * xa * q, x.matrix.trace() * q);
  });
}

void check_orthogonal_direct_formula(VerifyReport& r, int N, int m) {
  guarded(r, "orthogonal diagrams match the contraction formula N=" + std::to_string(N) + " m=" + std::to_string(m), [&] {
    const GroupKind kind = GroupKind::orthogonal(N);
    const std::size_t dim = tensor_dimension(N, m);
    for (const BrauerDiagram& d : all_diagrams(m)) {
      TensorOperator direct = TensorOperator::zero(m, N);
      for (std::size_t row = 0; row < dim; ++row) {
        const auto I = decode_index(row, N, m);
        for (std::size_t col = 0; col < dim; ++col) {
          const auto J = decode_index(col, N, m);
          auto digit = [&](int dot) { return dot < m ? I[static_cast<std::size_t>(dot)] : J[static_cast<std::size_t>(dot - m)]; };
          bool ok = true;
          for (int dot = 0; dot < 2 * m && ok; ++dot) {
            const int other = d.partner(dot);
            if (other < dot) continue;
            const bool same_row = (dot < m) == (other < m);
            ok = same_row ? digit(other) == N - 1 - digit(dot) : digit(other) == digit(dot);
          }
          if (ok) direct.matrix.set(row, col, Rational(1));
        }
      }
      if (auto diff = compare(represent(d, kind), direct); !diff.empty()) return d.to_string() + ": " + diff;
    }
    return std::string();
  });
}

void check_idempotents(VerifyReport& r, const GroupKind& kind, const Partition& lambda) {
  const std::string tag = " " + kind_label(kind) + " " + shape_label(lambda);
  const int m = lambda.size();
  IdempotentBuilder& builder = builder_for(kind);
  const auto tableaux = standard_tableaux(lambda);
  guarded(r, "E_T^2 = E_T" + tag, [&] {
    for (const auto& t : tableaux) {
      const TensorOperator& e = builder.build(t);
      if (auto d = compare(e * e, e); !d.empty()) return t.to_string() + ": " + d;
      if (e.matrix.is_zero_matrix()) return t.to_string() + ": E_T vanishes";
    }
    return std::string();
  });
  guarded(r, "E_T E_T' = 0" + tag, [&] {
    for (const auto& t : tableaux)
      for (const auto& u : tableaux)
        if (!(t == u) && !(builder.build(t) * builder.build(u)).matrix.is_zero_matrix())
          return t.to_string() + " and " + u.to_string();
    return std::string();
  });
  guarded(r, "x_a E_T = E_T x_a = c_a E_T" + tag, [&] {
    std::vector<TensorOperator> x;
    for (int a = 1; a <= m; ++a) x.push_back(jm_operator(a, m, kind));
    for (const auto& t : tableaux) {
      const TensorOperator& e = builder.build(t);
      const auto c = contents(t, kind.is_brauer() ? std::optional<Rational>(kind.omega()) : std::nullopt);
      for (int a = 0; a < m; ++a) {
        const TensorOperator ce = c[static_cast<std::size_t>(a)] * e;
        if (auto d = compare(x[static_cast<std::size_t>(a)] * e, ce); !d.empty())
          return t.to_string() + " a=" + std::to_string(a + 1) + ": " + d;
        if (auto d = compare(e * x[static_cast<std::size_t>(a)], ce); !d.empty())
          return t.to_string() + " a=" + std::to_string(a + 1) + " (right): " + d;
      }
    }
    return std::string();
  });
  guarded(r, "central idempotent commutes with generators" + tag, [&] {
    TensorOperator sum = TensorOperator::zero(m, kind.N());
    for (const auto& t : tableaux) sum += builder.build(t);
    if (auto d = compare(sum * sum, sum); !d.empty()) return "(D phi)^2 != D phi: " + d;
    for (int a = 1; a < m; ++a) {
      std::vector<GeneratorKind> gens{GeneratorKind::transposition};
      if (kind.is_brauer()) gens.push_back(GeneratorKind::contraction);
      for (GeneratorKind g : gens) {
        const TensorOperator h = represent(generator(g, a, a + 1, m), kind);
        if (auto d = compare(h * sum, sum * h); !d.empty())
          return std::string(g == GeneratorKind::transposition ? "s_" : "e_") + std::to_string(a) + ": " + d;
      }
    }
    return std::string();
  });
}

void check_dimensions(VerifyReport& r, const GroupKind& kind, const Partition& lambda) {
  const std::string tag = " " + kind_label(kind) + " " + shape_label(lambda);
  IdempotentBuilder& builder = builder_for(kind);
  const int N = kind.N();
  auto dim_of = [&](const Partition& p) {
    if (kind.family() == Family::symplectic) return dim_sp(p.conjugate(), N).value;
    return dimension(p, kind).value;
  };
  guarded(r, "tr E_T = dimension" + tag, [&] {
    const Rational expect = dim_of(lambda);
    for (const auto& t : standard_tableaux(lambda)) {
      const TensorOperator& e = builder.build(t);
      if (auto d = compare(e.matrix.trace(), expect); !d.empty()) return t.to_string() + ": " + d;
      if (auto d = compare(trace_value(e, DiagonalWeights::unit(kind)), expect); !d.empty())
        return t.to_string() + " (unit weights): " + d;
    }
    return std::string();
  });
  guarded(r, "tr_m E_T = ratio * E_U" + tag, [&] {
    for (const auto& t : standard_tableaux(lambda)) {
      const int m = t.size();
      const TensorOperator eu = m == 1 ? TensorOperator::identity(0, N) : builder.build(t.without_last());
      const Partition mu = t.shape_at(m - 1);
      Rational ratio;
      if (kind.is_brauer()) {
        ratio = dim_of(lambda) / dim_of(mu);
      } else {
        const Rational c = contents(t).back();
        ratio = (Rational(N) + c) * hook_length_product(mu) / hook_length_product(lambda);
      }
      if (auto d = compare(partial_trace(builder.build(t), m), ratio * eu); !d.empty()) return t.to_string() + ": " + d;
    }
    return std::string();
  });
  if (!kind.is_brauer()) {
    guarded(r, "s_lambda(1,...,1) = Robinson dimension" + tag, [&] {
      const auto s = schur(lambda, N);
      const std::vector<Rational> ones(static_cast<std::size_t>(N), Rational(1));
      return compare(s.poly.evaluate(ones), dim_gl(lambda, N).value);
    });
  }
}

void check_duality(VerifyReport& r, int max_size) {
  guarded(r, "orthogonal product at -N = (-1)^|lambda| symplectic product of lambda' (|lambda| <= " +
                 std::to_string(max_size) + ")",
          [&] {
            for (int size = 0; size <= max_size; ++size)
              for (const auto& lambda : partitions_of(size))
                for (int N = 1; N <= 12; ++N) {
                  const Rational lhs = orthogonal_factor_product(lambda, Rational(-N));
                  const Rational rhs = Rational(size % 2 == 0 ? 1 : -1) * symplectic_factor_product(lambda.conjugate(), Rational(N));
                  if (!(lhs == rhs)) return shape_label(lambda) + " N=" + std::to_string(N) + ": " + mismatch(lhs.to_string(), rhs.to_string());
                }
            return std::string();
          });
}

void check_theorem_oracle(VerifyReport& r, const GroupKind& kind, const Partition& lambda) {
  guarded(r, "ch_theorem = ch_oracle " + kind_label(kind) + " " + shape_label(lambda), [&] {
    return compare(ch_theorem(lambda, kind).expansion, ch_oracle(lambda, kind).expansion);
  });
}

void check_odd_vanishing(VerifyReport& r, const GroupKind& kind, const Partition& lambda) {
  guarded(r, "odd m gives zero " + kind_label(kind) + " " + shape_label(lambda), [&] {
    const ChImage oracle = ch_oracle(lambda, kind);
    if (!oracle.expansion.empty()) return "oracle: " + oracle.expansion.to_string();
    const ChImage theorem = ch_theorem(lambda, kind);
    if (!theorem.expansion.empty()) return "theorem: " + theorem.expansion.to_string();
    return std::string();
  });
}

void check_pruning(VerifyReport& r, const GroupKind& kind, const Partition& lambda) {
  guarded(r, "vanishing pruning is exact " + kind_label(kind) + " " + shape_label(lambda), [&] {
    return compare(ch_theorem(lambda, kind, true).expansion, ch_theorem(lambda, kind, false).expansion);
  });
}

void check_corollary(VerifyReport& r, const GroupKind& kind, int l, bool anti) {
  const Partition lambda = anti ? Partition(std::vector<int>(static_cast<std::size_t>(2 * l), 1)) : Partition({2 * l});
  guarded(r, std::string(anti ? "antisymmetrizer" : "symmetrizer") + " closed form " + kind_label(kind) +
                 " l=" + std::to_string(l),
          [&] {
            const ChImage closed = symmetrizer_image(l, kind, anti);
            SchurExpansion scaled = ch_theorem(lambda, kind).expansion;
            scaled *= normalization(lambda, kind);
            return compare(scaled, closed.expansion);
          });
}

void check_gl_characteristic(VerifyReport& r, const Partition& lambda, int N) {
  const std::string tag = " GL N=" + std::to_string(N) + " " + shape_label(lambda);
  SchurExpansion expect(N);
  expect.add(lambda, Rational(1));
  guarded(r, "ch(chi_lambda) = s_lambda" + tag, [&] {
    return compare(gl_characteristic(chi_lambda(lambda, N)), expect);
  });
  guarded(r, "tr E_T X_1...X_m = s_lambda(x)" + tag, [&] {
    const GroupKind kind = GroupKind::gl(N);
    const MultiPoly s = schur(lambda, N).poly;
    for (const auto& t : standard_tableaux(lambda)) {
      const MultiPoly tr = trace_against_diagonal(builder_for(kind).build(t), DiagonalWeights::lie_algebra(kind));
      if (!(tr == s)) return t.to_string() + ": " + mismatch(tr.to_string("x"), s.to_string("x"));
    }
    return std::string();
  });
}

void check_double_schur_vanishing(VerifyReport& r, const Rational& eps, int n, int max_size) {
  guarded(r, "double Schur vanishing eps=" + eps.to_string() + " n=" + std::to_string(n), [&] {
    const ParameterSequence a = ParameterSequence::classical(eps);
    for (int i = 0; i <= max_size; ++i)
      for (const auto& nu : partitions_of(i, n)) {
        const DoubleSchur s = double_schur(nu, n, a);
        for (int j = 0; j <= max_size; ++j)
          for (const auto& rho : partitions_of(j, n)) {
            const Rational v = s(a_rho(rho, n, a));
            const bool contained = rho.contains(nu);
            if (!contained && !v.is_zero())
              return "s_" + shape_label(nu) + "(a_" + shape_label(rho) + ") = " + v.to_string();
            if (contained && v.is_zero())
              return "s_" + shape_label(nu) + "(a_" + shape_label(rho) + ") vanishes although nu is contained in rho";
          }
      }
    return std::string();
  });
}

void check_double_schur_symmetry(VerifyReport& r, const Rational& eps, int n, int max_size, std::mt19937_64& rng) {
  guarded(r, "double Schur symmetry eps=" + eps.to_string() + " n=" + std::to_string(n), [&] {
    const ParameterSequence a = ParameterSequence::classical(eps);
    for (int i = 1; i <= max_size; ++i)
      for (const auto& nu : partitions_of(i, n)) {
        const DoubleSchur s = double_schur(nu, n, a);
        std::vector<Rational> x;
        for (int k = 0; k < n; ++k) x.push_back(random_rational(rng));
        const Rational base = s(x);
        for (int k = 0; k + 1 < n; ++k) {
          std::vector<Rational> y = x;
          std::swap(y[static_cast<std::size_t>(k)], y[static_cast<std::size_t>(k + 1)]);
          if (!(s(y) == base)) return "s_" + shape_label(nu) + " changes under swapping " + std::to_string(k + 1);
        }
      }
    return std::string();
  });
}

void check_double_schur_zero_sequence(VerifyReport& r, int n, int max_size, std::mt19937_64& rng) {
  guarded(r, "double Schur with a = 0 is the Schur polynomial n=" + std::to_string(n), [&] {
    for (int i = 0; i <= max_size; ++i)
      for (const auto& nu : partitions_of(i, n)) {
        std::vector<Rational> x;
        for (int k = 0; k < n; ++k) x.push_back(random_rational(rng));
        const Rational lhs = double_schur(nu, n, ParameterSequence::zero())(x);
        const Rational rhs = schur(nu, n).poly.evaluate(x);
        if (!(lhs == rhs)) return shape_label(nu) + ": " + mismatch(lhs.to_string(), rhs.to_string());
      }
    return std::string();
  });
}

void check_row_factorization(VerifyReport& r, const Rational& eps, int n, int max_k) {
  guarded(r, "row factorization s_(l)(a_(k)|a) eps=" + eps.to_string() + " n=" + std::to_string(n), [&] {
    const ParameterSequence a = ParameterSequence::classical(eps);
    const bool orthogonal = eps != Rational(1);
    const int N = 2 * n + (eps == Rational(1, 2) ? 1 : 0);
    for (int l = 1; 2 * l <= max_k; ++l)
      for (int k = l; k <= 2 * l; ++k) {
        const Rational value = double_schur(Partition({l}), n, a)(a_rho(Partition({k}), n, a));
        Rational product(1);
        for (int j = 0; j < l; ++j) product *= a(k + n) - a(n + j);
        const std::string at = " l=" + std::to_string(l) + " k=" + std::to_string(k);
        if (!(value == product)) return "product form" + at + ": " + mismatch(value.to_string(), product.to_string());
        if (orthogonal) {
          const Rational closed = factorial(k) * factorial(N + k + l - 3) / (factorial(k - l) * factorial(N + k - 3));
          if (!(value == closed)) return "factorial form" + at + ": " + mismatch(value.to_string(), closed.to_string());
        }
      }
    return std::string();
  });
}

void check_column_factorization(VerifyReport& r, const Rational& eps, int n, int max_k) {
  guarded(r, "column factorization s_(1^l)(a_(1^k)|a) eps=" + eps.to_string() + " n=" + std::to_string(n), [&] {
    const ParameterSequence a = ParameterSequence::classical(eps);
    const bool orthogonal = eps != Rational(1);
    const int N = 2 * n + (eps == Rational(1, 2) ? 1 : 0);
    auto col = [](int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); };
    for (int l = 1; 2 * l <= max_k; ++l)
      for (int k = l; k <= 2 * l && k <= n; ++k) {
        const Rational value = double_schur(col(l), n, a)(a_rho(col(k), n, a));
        Rational product(1);
        for (int i = n - l + 2; i <= n + 1; ++i) product *= a(i) - a(n - k + 1);
        const std::string at = " l=" + std::to_string(l) + " k=" + std::to_string(k);
        if (!(value == product)) return "product form" + at + ": " + mismatch(value.to_string(), product.to_string());
        if (orthogonal) {
          const Rational closed = factorial(k) * factorial(N - k) / (factorial(k - l) * factorial(N - k - l));
          if (!(value == closed)) return "factorial form" + at + ": " + mismatch(value.to_string(), closed.to_string());
        }
      }
    return std::string();
  });
}

namespace {

VerifyReport relations_suite(const VerifyOptions& o) {
  VerifyReport r("relations");
  std::mt19937_64 rng(o.seed);
  for (const Rational& omega : {Rational(3), Rational(-4), Rational(7, 2)}) {
    for (int m = 1; m <= o.max_m; ++m) check_brauer_relations(r, omega, m);
    for (int m = 1; m <= std::max(o.max_m, 5); ++m) check_associativity(r, omega, m, 20, rng);
  }
  for (int m = 1; m <= std::min(o.max_m, 5); ++m) check_symmetric_closure(r, m);
  for (int m = 1; m <= std::max(o.max_m, 5); ++m) check_basis_count(r, m);
  for (int N : default_or(o.N_values, {2, 3, 4})) {
    for (const GroupKind& kind : kinds_for(N, true)) {
      for (int m = 1; m <= o.max_m; ++m) {
        if (tensor_dimension(N, m, true) > 1024) continue;
        check_homomorphism(r, kind, m, o.random_pairs, rng);
      }
      check_tensor_identities(r, kind, rng);
    }
  }
  for (int m = 1; m <= std::min(o.max_m, 3); ++m) check_orthogonal_direct_formula(r, 3, m);
  return r;
}

VerifyReport idempotents_suite(const VerifyOptions& o) {
  VerifyReport r("idempotents");
  for (int N : default_or(o.N_values, {4, 5, 6}))
    for (const GroupKind& kind : kinds_for(N, true))
      for (int m = 1; m <= o.max_m; ++m)
        for (const auto& lambda : partitions_of(m))
          if (fits(lambda, kind)) check_idempotents(r, kind, lambda);
  return r;
}

VerifyReport dims_suite(const VerifyOptions& o) {
  VerifyReport r("dims");
  for (int N : default_or(o.N_values, {4, 5, 6}))
    for (const GroupKind& kind : kinds_for(N, true))
      for (int m = 1; m <= o.max_m; ++m)
        for (const auto& lambda : partitions_of(m))
          if (fits(lambda, kind)) check_dimensions(r, kind, lambda);
  check_duality(r, 6);
  return r;
}

VerifyReport charmap_suite(const VerifyOptions& o) {
  VerifyReport r("charmap");
  std::mt19937_64 rng(o.seed);
  for (int N : default_or(o.N_values, {5, 6}))
    for (const GroupKind& kind : kinds_for(N, false))
      for (int m = 1; m <= o.max_m; ++m)
        for (const auto& lambda : partitions_of(m)) {
          if (!fits(lambda, kind)) continue;
          if (m % 2 == 0) {
            check_theorem_oracle(r, kind, lambda);
            check_pruning(r, kind, lambda);
          } else {
            check_odd_vanishing(r, kind, lambda);
          }
        }
  for (int N : default_or(o.N_values, {5, 6}))
    for (const GroupKind& kind : kinds_for(N, false))
      for (int l = 1; 2 * l <= o.max_m; ++l)
        for (bool anti : {false, true}) {
          const bool sp = kind.family() == Family::symplectic;
          if (sp != anti && 2 * l > kind.n()) continue;
          check_corollary(r, kind, l, anti);
        }
  for (int N = 1; N <= 4; ++N)
    for (int m = 1; m <= std::min(o.max_m, 3); ++m)
      for (const auto& lambda : partitions_of(m, N)) check_gl_characteristic(r, lambda, N);
  for (const Rational& eps : {Rational(0), Rational(1, 2), Rational(1)})
    for (int n = 1; n <= 4; ++n) {
      check_double_schur_vanishing(r, eps, n, o.max_m);
      check_double_schur_symmetry(r, eps, n, o.max_m, rng);
      check_row_factorization(r, eps, n, o.max_m);
      check_column_factorization(r, eps, n, o.max_m);
    }
  for (int n = 1; n <= 4; ++n) check_double_schur_zero_sequence(r, n, o.max_m, rng);
  return r;
}

}  // namespace

VerifyReport run_suite(const std::string& suite, const VerifyOptions& options) {
  if (options.max_m < 1) throw DomainError("--max-m must be at least 1");
  for (int N : options.N_values)
    if (N < 1) throw DomainError("--N values must be positive");
  if (suite == "relations") return relations_suite(options);
  if (suite == "idempotents") return idempotents_suite(options);
  if (suite == "dims") return dims_suite(options);
  if (suite == "charmap") return charmap_suite(options);
  if (suite == "all") {
    VerifyReport all("all");
    for (const char* s : {"relations", "idempotents", "dims", "charmap"}) all.merge(run_suite(s, options));
    return all;
  }
  throw DomainError("unknown suite '" + suite + "' (expected relations, idempotents, dims, charmap or all)");
}

}  // namespace brauerch
