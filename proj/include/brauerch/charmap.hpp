#pragma once

#include "brauerch/brauer.hpp"
#include "brauerch/group_kind.hpp"
#include "brauerch/symfunc.hpp"
#include "brauerch/tensorrep.hpp"
#include "brauerch/young.hpp"

namespace brauerch {

/// Image of a central idempotent under ch, written in the Schur basis of the
/// variables t_i = y_i^2 (i = 1..n).
struct ChImage {
  Partition lambda;
  GroupKind kind;
  int n = 0;
  SchurExpansion expansion;

  friend bool operator==(const ChImage&, const ChImage&) = default;
};

/// C(ν) = Π_{(i,j)∈ν} 2(n+j-i)(N-1+2(j-i+ε)). Requires ℓ(ν) <= n.
Rational c_constant(const Partition& nu, const GroupKind& kind);

/// The closed form: for |λ| = 2l the coefficient of s_ν, ν ⊢ l, is
///   (1/C(ν)) Σ_{μ⊆λ} (-1)^{|μ|} s_ν(a_ρ | a) / (H(μ) H(λ/μ))
/// with ρ = μ (orthogonal) or μ' (symplectic). Odd |λ| gives zero. With
/// `prune`, terms with ν ⊄ ρ are skipped since they vanish.
ChImage ch_theorem(const Partition& lambda, const GroupKind& kind, bool prune = true);

/// D(λ) for the orthogonal group, D(λ') for the symplectic group.
Rational normalization(const Partition& lambda, const GroupKind& kind);

/// φ_λ = (1/D) Σ_T E_T in the tensor representation.
TensorOperator central_idempotent(const Partition& lambda, const GroupKind& kind, bool force = false);

/// ch(C) = (1/m!) tr C·Y_1⋯Y_m, Schur-expanded in y_i^2. Throws
/// InternalError if odd powers of some y_i survive.
SchurExpansion brauer_characteristic(const TensorOperator& c, const GroupKind& kind);

/// ch(φ_λ) computed from the matrices.
ChImage ch_oracle(const Partition& lambda, const GroupKind& kind, bool force = false);

/// ch of the symmetrizer S^(2l) or, with `anti`, the antisymmetrizer A^(2l)
/// in B_{2l}(±N), by the closed forms. Note these are ch(E_T), so they equal
/// D times the ch_theorem image of the row or column shape.
ChImage symmetrizer_image(int l, const GroupKind& kind, bool anti);

/// (1/m!) tr C·X_1⋯X_m in x_1..x_N, Schur-expanded.
SchurExpansion gl_characteristic(const TensorOperator& c);
/// Same for a symmetric-group element; ε-diagrams are rejected.
SchurExpansion gl_characteristic(const BrauerElement& c, int N);

/// χ_λ = (m!/dim λ) Σ_T E_T for the general linear group. Requires ℓ(λ) <= N.
TensorOperator chi_lambda(const Partition& lambda, int N, bool force = false);

}  // namespace brauerch
