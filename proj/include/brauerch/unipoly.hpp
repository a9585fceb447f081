#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brauerch/rational.hpp"

namespace brauerch {

/// Univariate polynomial, coefficients stored lowest degree first. The
/// leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  /// u - root
  static UniPoly linear(const Rational& root);
  static UniPoly from_roots(const std::vector<Rational>& roots);

  const std::vector<Rational>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational leading() const;
  Rational coefficient(int k) const;

  UniPoly monic() const;
  Rational evaluate(const Rational& u) const;
  /// Division by (u - root): quotient and remainder.
  std::pair<UniPoly, Rational> divide_linear(const Rational& root) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string to_string(std::string_view var = "u") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace brauerch
