#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "brauerch/group_kind.hpp"
#include "brauerch/multipoly.hpp"
#include "brauerch/rational.hpp"
#include "brauerch/young.hpp"

namespace brauerch {

/// The sequence a_i = (ε + i - 1)², i ∈ Z, for ε ∈ {0, 1/2, 1}; or the
/// all-zero sequence, under which double Schur polynomials reduce to ordinary
/// ones.
class ParameterSequence {
 public:
  static ParameterSequence classical(const Rational& eps);
  static ParameterSequence for_group(const GroupKind& kind) { return classical(kind.epsilon()); }
  static ParameterSequence zero() { return ParameterSequence(std::nullopt); }

  Rational operator()(int i) const;
  bool is_zero_sequence() const { return !eps_.has_value(); }
  /// Empty for the zero sequence.
  const std::optional<Rational>& epsilon() const { return eps_; }

 private:
  explicit ParameterSequence(std::optional<Rational> eps) : eps_(std::move(eps)) {}
  std::optional<Rational> eps_;
};

struct SymmetricPolynomial {
  MultiPoly poly;
  /// Set when the polynomial is zero because ℓ(ν) exceeded the variable count.
  bool vanished = false;

  /// Empty when symmetric, otherwise a monomial whose image under some
  /// adjacent transposition has a different coefficient.
  std::optional<Exponents> asymmetry_witness() const;
};

/// Calls f with the entries of each semistandard ν-tableau with entries in
/// 1..n, listed in the row-major order of ν.boxes().
void for_each_semistandard(const Partition& nu, int n,
                           const std::function<void(const std::vector<int>&)>& f);

/// s_ν(x_1..x_n) as a sum over semistandard tableaux.
SymmetricPolynomial schur(const Partition& nu, int n);

/// Double Schur polynomial s_ν(x | a) evaluated by tableau summation:
/// Σ_T Π_{α∈ν} (x_{T(α)} - a_{T(α)+c(α)}).
class DoubleSchur {
 public:
  DoubleSchur(Partition nu, int n, ParameterSequence a);

  Rational operator()(std::span<const Rational> x) const;
  const Partition& nu() const { return nu_; }
  int variable_count() const { return n_; }

 private:
  Partition nu_;
  int n_;
  ParameterSequence a_;
  std::vector<Box> boxes_;
  std::vector<std::vector<int>> fillings_;
};

DoubleSchur double_schur(const Partition& nu, int n, const ParameterSequence& a);

/// a_ρ = (a_{ρ_1+n}, a_{ρ_2+n-1}, ..., a_{ρ_n+1}); requires ℓ(ρ) <= n.
std::vector<Rational> a_rho(const Partition& rho, int n, const ParameterSequence& a);

/// A symmetric polynomial written in the Schur basis.
class SchurExpansion {
 public:
  using TermMap = std::map<Partition, Rational, PartitionOutputOrder>;

  explicit SchurExpansion(int n = 0) : n_(n) {}

  int variable_count() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Rational coefficient(const Partition& nu) const;
  void add(const Partition& nu, const Rational& c);

  SchurExpansion& operator*=(const Rational& c);
  friend SchurExpansion operator*(const Rational& c, SchurExpansion e) { return e *= c; }
  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

  /// Σ coeff · s_ν(x_1..x_n).
  MultiPoly to_polynomial() const;
  /// "1/1680*s(2) + 1/360*s(1,1)"; "0" when empty.
  std::string to_string() const;

 private:
  int n_;
  TermMap terms_;
};

/// Schur-basis coefficients by repeated elimination of the leading monomial.
/// Throws DomainError naming a monomial when p is not symmetric.
SchurExpansion schur_expand(const SymmetricPolynomial& p);

}  // namespace brauerch
