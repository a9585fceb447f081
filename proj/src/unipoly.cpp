#include "brauerch/unipoly.hpp"

#include <sstream>

#include "brauerch/error.hpp"

namespace brauerch {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::linear(const Rational& root) { return UniPoly({-root, Rational(1)}); }

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
  UniPoly p = constant(1);
  for (const auto& r : roots) p = p * linear(r);
  return p;
}

Rational UniPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::coefficient(int k) const {
  return (k < 0 || k > degree()) ? Rational(0) : c_[static_cast<std::size_t>(k)];
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw DomainError("the zero polynomial has no monic form");
  const Rational inv = leading().inverse();
  return inv * *this;
}

Rational UniPoly::evaluate(const Rational& u) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= u;
    acc += *it;
  }
  return acc;
}

std::pair<UniPoly, Rational> UniPoly::divide_linear(const Rational& root) const {
  if (c_.empty()) return {UniPoly(), Rational(0)};
  std::vector<Rational> q(c_.size() - 1);
  Rational carry;
  for (std::size_t k = c_.size(); k-- > 0;) {
    carry = carry * root + c_[k];
    if (k > 0) q[k - 1] = carry;
  }
  return {UniPoly(std::move(q)), carry};
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(r));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  std::vector<Rational> r = p.c_;
  for (auto& x : r) x *= s;
  return UniPoly(std::move(r));
}

std::string UniPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace brauerch
