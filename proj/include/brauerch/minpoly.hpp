#pragma once

#include <vector>

#include "brauerch/rational.hpp"
#include "brauerch/sparse_matrix.hpp"
#include "brauerch/unipoly.hpp"

namespace brauerch {

/// p(A), by Horner's rule.
RationalMatrix evaluate(const UniPoly& p, const RationalMatrix& a);

/// Monic polynomial of least degree with p(A)·S = 0, where the columns of
/// `seeds` span the subspace of interest. Found by exact linear-dependence
/// search along the Krylov sequence S, AS, A²S, ...
UniPoly minimal_polynomial(const RationalMatrix& a, const RationalMatrix& seeds);

/// Roots of p among the half-integers c (2c integral) with |c| <= bound,
/// repeated according to multiplicity. Throws DomainError when p does not
/// split over that set.
std::vector<Rational> half_integer_roots(const UniPoly& p, const Rational& bound);

}  // namespace brauerch
