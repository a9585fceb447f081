#include "brauerch/rational.hpp"

#include <ostream>

#include "brauerch/error.hpp"

namespace brauerch {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw DomainError("empty rational literal");
  const auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(num.begin());
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw DomainError("malformed rational literal '" + s + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw DivisionByZero();
  return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const { return q_.get_den() == 1; }

long Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw DomainError("rational " + to_string() + " is not a machine integer");
  return q_.get_num().get_si();
}

std::string Rational::numerator_string() const { return q_.get_num().get_str(); }
std::string Rational::denominator_string() const { return q_.get_den().get_str(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(1) / *this;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}
Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational factorial(int k) {
  if (k < 0) throw DomainError("factorial of a negative number");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(mpq_class(f));
}

}  // namespace brauerch
