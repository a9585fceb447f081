#include "brauerch/multipoly.hpp"

#include <sstream>

#include "brauerch/error.hpp"

namespace brauerch {

MultiPoly MultiPoly::constant(std::size_t variables, const Rational& c) {
  MultiPoly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw DomainError("variable index out of range");
  Exponents e(variables, 0);
  e[index] = 1;
  return monomial(std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rational& c) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int x : terms_.begin()->first)
    if (x != 0) return false;
  return true;
}

Rational MultiPoly::constant_term() const {
  return coefficient(Exponents(vars_, 0));
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_) {
    if (vars_ == 0 && terms_.empty())
      vars_ = e.size();
    else
      throw DimensionMismatch("exponent vector length differs from variable count");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::adopt(const MultiPoly& o) {
  if (vars_ == o.vars_) return;
  if (vars_ == 0 && terms_.empty()) {
    vars_ = o.vars_;
    return;
  }
  if (o.vars_ == 0 && o.terms_.empty()) return;
  throw DimensionMismatch("polynomials over different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a.vars_);
  r.adopt(b);
  if (a.is_zero() || b.is_zero()) return r;
  Exponents e(r.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_)
    throw DimensionMismatch("evaluation point has the wrong number of coordinates");
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= point[i].pow(e[i]);
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::swap_variables(std::size_t i, std::size_t j) const {
  if (i >= vars_ || j >= vars_) throw DomainError("variable index out of range");
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::swap(f[i], f[j]);
    r.add_term(f, c);
  }
  return r;
}

bool MultiPoly::has_only_even_exponents() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x % 2 != 0) return false;
  return true;
}

MultiPoly MultiPoly::halve_exponents() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (int& x : f) {
      if (x % 2 != 0) throw DomainError("polynomial contains an odd exponent");
      x /= 2;
    }
    r.add_term(f, c);
  }
  return r;
}

std::string MultiPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (int x : e)
      if (x != 0) constant = false;
    const bool unit = !constant && mag == Rational(1);
    if (!unit) os << mag.to_string();
    if (constant) continue;
    bool lead = unit;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (lead ? "" : "*") << var << (i + 1);
      lead = false;
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace brauerch
