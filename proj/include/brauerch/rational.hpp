#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace brauerch {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  template <std::signed_integral I>
  Rational(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral I>
  Rational(I v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Accepts "p", "-p" and "p/q"; the result is canonicalized.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const;
  /// Requires is_integer() and a value that fits in a long.
  long to_long() const;

  std::string numerator_string() const;
  std::string denominator_string() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational pow(int exponent) const;
  Rational abs() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// k! as an exact rational; k >= 0.
Rational factorial(int k);

}  // namespace brauerch
