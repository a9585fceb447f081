#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "brauerch/brauer.hpp"
#include "brauerch/group_kind.hpp"
#include "brauerch/multipoly.hpp"
#include "brauerch/sparse_matrix.hpp"
#include "brauerch/young.hpp"

namespace brauerch {

/// Operators on (C^N)^{⊗m} larger than this are refused unless forced.
inline constexpr std::uint64_t kDeskScaleLimit = 1'000'000;

/// N^m, throwing DomainError above the desk-scale limit unless `force`.
std::size_t tensor_dimension(int N, int m, bool force = false);

/// Basis index of e_{i_1} ⊗ ... ⊗ e_{i_m} (0-based digits, leftmost factor
/// most significant).
std::size_t encode_index(std::span<const int> digits, int N);
std::vector<int> decode_index(std::size_t index, int N, int m);

/// An element of End((C^N)^{⊗m}) as an exact sparse matrix.
struct TensorOperator {
  int m = 0;
  int N = 1;
  RationalMatrix matrix;

  static TensorOperator identity(int m, int N, bool force = false);
  static TensorOperator zero(int m, int N, bool force = false);

  std::size_t dimension() const { return matrix.dimension(); }

  TensorOperator& operator+=(const TensorOperator& o);
  TensorOperator& operator-=(const TensorOperator& o);
  TensorOperator& operator*=(const Rational& c);
  friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
  friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
  friend TensorOperator operator*(const Rational& c, TensorOperator a) { return a *= c; }
  friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);
  friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
    return a.m == b.m && a.N == b.N && a.matrix == b.matrix;
  }
};

/// Image of the permutation diagram joining top dot a to bottom dot sigma[a]:
/// P_sigma, times sgn(sigma) in the symplectic case.
TensorOperator permutation_operator(const std::vector<int>& sigma, const GroupKind& kind,
                                    bool force = false);

/// Image of ε_ab (1-based, a < b): Q_ab for the orthogonal group and -Q_ab,
/// with the ε_i ε_j signs inside Q_ab, for the symplectic group.
TensorOperator contraction_operator(int a, int b, int m, const GroupKind& kind, bool force = false);

/// Brauer diagrams act through s_ab ↦ ±P_ab, ε_ab ↦ ±Q_ab. A general diagram is
/// factored as w1 · ε_12 ε_34 ⋯ · w2 with permutations w1, w2. The general
/// linear group accepts permutation diagrams only.
TensorOperator represent(const BrauerDiagram& d, const GroupKind& kind, bool force = false);
/// Linear extension; the element's ω must equal kind.omega() for O_N / Sp_N.
TensorOperator represent(const BrauerElement& e, const GroupKind& kind, bool force = false);

/// Image of the Jucys–Murphy element x_b: (ω-1)/2 + Σ_{a<b}(s_ab - ε_ab)
/// for O_N / Sp_N, Σ_{a<b} s_ab for GL_N.
TensorOperator jm_operator(int b, int m, const GroupKind& kind, bool force = false);

/// A ⊗ 1: the operator acting on one more tensor factor.
TensorOperator extend_by_identity(const TensorOperator& a, bool force = false);

/// Trace over the given tensor factor (1-based).
TensorOperator partial_trace(const TensorOperator& a, int slot);

/// Throws DomainError unless λ fits the group: λ'_1 <= n (orthogonal),
/// λ_1 <= n (symplectic), ℓ(λ) <= N (general linear).
void check_shape_bound(const Partition& lambda, const GroupKind& kind);

/// Primitive idempotents E_T built one box at a time: given E_U, the matrix of
/// x_m is restricted to the image of E_U, its exact spectrum is found, and
/// E_T = E_U · Π_{d ≠ c_m} (x_m - d)/(c_m - d). Results are cached by tableau
/// prefix, so building every tableau of a shape shares the common work.
class IdempotentBuilder {
 public:
  explicit IdempotentBuilder(GroupKind kind, bool force = false);

  const TensorOperator& build(const StandardTableau& t);
  /// Spectrum of x_m on the image of E_U found while building t (t nonempty).
  const std::vector<Rational>& spectrum(const StandardTableau& t);
  const GroupKind& kind() const { return kind_; }

 private:
  const TensorOperator& jm(int m);

  GroupKind kind_;
  bool force_;
  std::map<std::vector<Box>, TensorOperator> cache_;
  std::map<std::vector<Box>, std::vector<Rational>> spectra_;
  std::map<int, TensorOperator> jm_cache_;
};

TensorOperator primitive_idempotent(const StandardTableau& t, const GroupKind& kind, bool force = false);

/// Eigenvalues of a diagonal matrix, paired with an operator's diagonal in
/// traces. Symbolic weights: Y = diag(y_1..y_n, [0], -y_n..-y_1) for O_N /
/// Sp_N, X = diag(x_1..x_N) for GL_N. Concrete weights: the group element
/// diag(z_1..z_n, [1], z_n^{-1}..z_1^{-1}) or diag(x_1..x_N).
class DiagonalWeights {
 public:
  static DiagonalWeights lie_algebra(const GroupKind& kind);
  static DiagonalWeights group_element(const GroupKind& kind, std::span<const Rational> z);
  /// The identity matrix (traces give dimensions).
  static DiagonalWeights unit(const GroupKind& kind);

  const GroupKind& kind() const { return kind_; }
  std::size_t variable_count() const { return vars_; }
  const std::vector<MultiPoly>& entries() const { return entries_; }

 private:
  DiagonalWeights(GroupKind kind, std::size_t vars, std::vector<MultiPoly> entries)
      : kind_(kind), vars_(vars), entries_(std::move(entries)) {}

  GroupKind kind_;
  std::size_t vars_;
  std::vector<MultiPoly> entries_;
};

/// tr A·W_1⋯W_m = Σ_i A[i,i] Π_a w(i_a); only the diagonal of A is read.
MultiPoly trace_against_diagonal(const TensorOperator& a, const DiagonalWeights& w);
/// Same, for concrete weights.
Rational trace_value(const TensorOperator& a, const DiagonalWeights& w);

/// W_1⋯W_m as a diagonal operator with polynomial entries.
PolyMatrix weight_operator(const DiagonalWeights& w, int m, bool force = false);

}  // namespace brauerch
