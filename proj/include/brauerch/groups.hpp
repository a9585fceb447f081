#pragma once

#include <vector>

#include "brauerch/group_kind.hpp"
#include "brauerch/rational.hpp"
#include "brauerch/young.hpp"

namespace brauerch {

/// A dimension together with the factors of its numerator:
/// value = Π factors / hook.
struct DimensionReport {
  GroupKind group;
  Partition shape;
  Rational value;
  std::vector<Rational> factors;
  Rational hook;

  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

/// d(i,j) for the orthogonal product: λ_i+λ_j-i-j+1 when i <= j, otherwise
/// -λ'_i-λ'_j+i+j-1.
int orthogonal_d(const Partition& lambda, int i, int j);
/// The symplectic variant, with the branch conditions swapped.
int symplectic_d(const Partition& rho, int i, int j);

/// Π_{(i,j)∈λ} (N-1+d(i,j)), as a polynomial identity in N.
Rational orthogonal_factor_product(const Partition& lambda, const Rational& N);
/// Π_{(i,j)∈ρ} (N+1+d(i,j)).
Rational symplectic_factor_product(const Partition& rho, const Rational& N);

/// Robinson's formula Π (N+j-i) / H(λ). Requires ℓ(λ) <= N.
DimensionReport dim_gl(const Partition& lambda, int N);
/// D(λ) for O_N. Requires ℓ(λ) <= n.
DimensionReport dim_orth(const Partition& lambda, int N);
/// D(ρ) for Sp_N. Requires N even and ℓ(ρ) <= n.
DimensionReport dim_sp(const Partition& rho, int N);

/// Dispatch on the family. For the symplectic group the shape is the row
/// label ρ.
DimensionReport dimension(const Partition& shape, const GroupKind& kind);

}  // namespace brauerch
