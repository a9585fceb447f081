#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brauerch/rational.hpp"

namespace brauerch {

using Exponents = std::vector<int>;

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in descending lexicographic order of exponent vectors and
/// zero coefficients are never stored. A zero polynomial with no variables
/// behaves as a universal zero: it adopts the variable count of whatever it is
/// combined with, so default-constructed accumulators work in generic code.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t variables) : vars_(variables) {}

  static MultiPoly constant(std::size_t variables, const Rational& c);
  static MultiPoly variable(std::size_t variables, std::size_t index);
  static MultiPoly monomial(Exponents exps, const Rational& c);

  std::size_t variable_count() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;
  int total_degree() const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  Rational evaluate(std::span<const Rational> point) const;

  /// Exchange variables i and j.
  MultiPoly swap_variables(std::size_t i, std::size_t j) const;
  /// Divide every exponent by two; fails unless all exponents are even.
  MultiPoly halve_exponents() const;
  /// True when every exponent is even.
  bool has_only_even_exponents() const;

  /// Sorted sum of "coeff*y1^a1*...*yn^an" terms (factors with a zero exponent
  /// and unit exponents are elided). The zero polynomial prints as "0".
  std::string to_string(std::string_view var = "y") const;

 private:
  void adopt(const MultiPoly& o);

  std::size_t vars_ = 0;
  TermMap terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace brauerch
