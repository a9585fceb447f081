#include "brauerch/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "brauerch/error.hpp"

namespace brauerch {

namespace {

std::string exponents_to_string(const Exponents& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

}  // namespace

ParameterSequence ParameterSequence::classical(const Rational& eps) {
  if (eps != Rational(0) && eps != Rational(1, 2) && eps != Rational(1))
    throw DomainError("epsilon must be 0, 1/2 or 1");
  return ParameterSequence(eps);
}

Rational ParameterSequence::operator()(int i) const {
  if (!eps_) return Rational(0);
  const Rational base = *eps_ + Rational(i - 1);
  return base * base;
}

std::optional<Exponents> SymmetricPolynomial::asymmetry_witness() const {
  const std::size_t n = poly.variable_count();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (const auto& [e, c] : poly.terms()) {
      Exponents f = e;
      std::swap(f[i], f[i + 1]);
      if (poly.coefficient(f) != c) return e;
    }
  }
  return std::nullopt;
}

void for_each_semistandard(const Partition& nu, int n,
                           const std::function<void(const std::vector<int>&)>& f) {
  const std::vector<Box> boxes = nu.boxes();
  if (nu.length() > n) return;
  // index of each box in row-major order, for neighbour lookup
  std::vector<int> row_start(static_cast<std::size_t>(nu.length()) + 1, 0);
  for (int i = 1; i <= nu.length(); ++i)
    row_start[static_cast<std::size_t>(i)] = row_start[static_cast<std::size_t>(i - 1)] + nu.part(i);
  std::vector<int> fill(boxes.size(), 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == boxes.size()) {
      f(fill);
      return;
    }
    const Box b = boxes[k];
    int lo = 1;
    if (b.col > 1) lo = std::max(lo, fill[k - 1]);
    if (b.row > 1) {
      const std::size_t above = static_cast<std::size_t>(row_start[static_cast<std::size_t>(b.row - 2)] + b.col - 1);
      lo = std::max(lo, fill[above] + 1);
    }
    for (int v = lo; v <= n; ++v) {
      fill[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

SymmetricPolynomial schur(const Partition& nu, int n) {
  if (n < 0) throw DomainError("variable count must be non-negative");
  SymmetricPolynomial out{MultiPoly(static_cast<std::size_t>(n)), nu.length() > n};
  if (out.vanished) return out;
  Exponents e(static_cast<std::size_t>(n));
  for_each_semistandard(nu, n, [&](const std::vector<int>& fill) {
    std::fill(e.begin(), e.end(), 0);
    for (int v : fill) ++e[static_cast<std::size_t>(v - 1)];
    out.poly.add_term(e, Rational(1));
  });
  return out;
}

DoubleSchur::DoubleSchur(Partition nu, int n, ParameterSequence a)
    : nu_(std::move(nu)), n_(n), a_(std::move(a)), boxes_(nu_.boxes()) {
  if (nu_.length() > n_) throw DomainError("double Schur polynomial needs l(nu) <= n");
  for_each_semistandard(nu_, n_, [&](const std::vector<int>& fill) { fillings_.push_back(fill); });
}

Rational DoubleSchur::operator()(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != n_)
    throw DimensionMismatch("double Schur evaluation point has the wrong length");
  Rational sum;
  for (const auto& fill : fillings_) {
    Rational term(1);
    for (std::size_t k = 0; k < boxes_.size() && !term.is_zero(); ++k) {
      const int v = fill[k];
      term *= x[static_cast<std::size_t>(v - 1)] - a_(v + boxes_[k].content());
    }
    sum += term;
  }
  return sum;
}

DoubleSchur double_schur(const Partition& nu, int n, const ParameterSequence& a) {
  return DoubleSchur(nu, n, a);
}

std::vector<Rational> a_rho(const Partition& rho, int n, const ParameterSequence& a) {
  if (rho.length() > n)
    throw DomainError("a_rho needs l(rho) <= n, got rho = (" + rho.to_string() + ") and n = " +
                      std::to_string(n));
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back(a(rho.part(i) + n - i + 1));
  return out;
}

Rational SchurExpansion::coefficient(const Partition& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SchurExpansion::add(const Partition& nu, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SchurExpansion& SchurExpansion::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [nu, v] : terms_) v *= c;
  return *this;
}

MultiPoly SchurExpansion::to_polynomial() const {
  MultiPoly p(static_cast<std::size_t>(n_));
  for (const auto& [nu, c] : terms_) p += c * schur(nu, n_).poly;
  return p;
}

std::string SchurExpansion::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [nu, c] : terms_) {
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (c.abs() != Rational(1)) os << c.abs() << "*";
    os << "s(" << nu.to_string() << ")";
  }
  return os.str();
}

SchurExpansion schur_expand(const SymmetricPolynomial& p) {
  const int n = static_cast<int>(p.poly.variable_count());
  if (auto w = p.asymmetry_witness())
    throw DomainError("polynomial is not symmetric: monomial " + exponents_to_string(*w) +
                      " has an asymmetric partner");
  SchurExpansion out(n);
  std::map<Partition, MultiPoly> cache;
  MultiPoly rest = p.poly;
  while (!rest.is_zero()) {
    const int d = rest.total_degree();
    const Exponents* lead = nullptr;
    Rational c;
    for (const auto& [e, coeff] : rest.terms()) {
      int deg = 0;
      for (int x : e) deg += x;
      if (deg == d) {
        lead = &e;
        c = coeff;
        break;
      }
    }
    if (!std::is_sorted(lead->begin(), lead->end(), std::greater<>()))
      throw DomainError("nonzero remainder at monomial " + exponents_to_string(*lead) +
                        " while expanding in Schur polynomials");
    const Partition nu(*lead);
    auto it = cache.find(nu);
    if (it == cache.end()) it = cache.emplace(nu, schur(nu, n).poly).first;
    out.add(nu, c);
    rest -= c * it->second;
  }
  return out;
}

}  // namespace brauerch
