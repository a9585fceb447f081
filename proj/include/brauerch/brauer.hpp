#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brauerch/rational.hpp"

namespace brauerch {

/// A Brauer m-diagram: a perfect matching on 2m dots. Dots 0..m-1 are the top
/// row (written 1..m), dots m..2m-1 the bottom row (written 1'..m').
class BrauerDiagram {
 public:
  /// partner[x] is the dot joined to x; must be a fixed-point-free involution.
  explicit BrauerDiagram(std::vector<int> partner);

  static BrauerDiagram identity(int m);
  /// Top dot a joined to bottom dot sigma[a] (0-based).
  static BrauerDiagram from_permutation(const std::vector<int>& sigma);
  /// Edge list text such as "1-2,1'-2'". m is inferred from the largest index
  /// unless given.
  static BrauerDiagram parse(std::string_view text, std::optional<int> m = std::nullopt);

  int m() const { return static_cast<int>(partner_.size() / 2); }
  int partner(int dot) const { return partner_.at(static_cast<std::size_t>(dot)); }
  const std::vector<int>& partners() const { return partner_; }

  bool is_permutation() const;
  /// sigma[a] = bottom position joined to top dot a; requires is_permutation().
  std::vector<int> permutation() const;
  /// Horizontal arcs (a, b), a < b, 0-based positions within the row.
  std::vector<std::pair<int, int>> top_arcs() const;
  std::vector<std::pair<int, int>> bottom_arcs() const;
  /// Vertical strands (top position, bottom position), sorted by top.
  std::vector<std::pair<int, int>> through_strands() const;

  /// Canonical edge list: each edge written with its smaller dot first, edges
  /// sorted by that dot.
  std::string to_string() const;

  friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;

 private:
  std::vector<int> partner_;
};

/// Stack d1 above d2: the diagram obtained and the number of closed loops.
std::pair<BrauerDiagram, int> compose(const BrauerDiagram& d1, const BrauerDiagram& d2);

/// Every m-diagram, in canonical order.
std::vector<BrauerDiagram> all_diagrams(int m);

/// (2m-1)!!, computed by enumerating the perfect matchings.
std::uint64_t count_basis(int m);

/// Linear combination of m-diagrams with rational coefficients, at a fixed
/// specialization of the parameter ω.
class BrauerElement {
 public:
  using TermMap = std::map<BrauerDiagram, Rational>;

  BrauerElement(int m, Rational omega) : m_(m), omega_(std::move(omega)) {}
  BrauerElement(const BrauerDiagram& d, Rational omega, Rational coeff = Rational(1));

  static BrauerElement identity(int m, const Rational& omega);

  int m() const { return m_; }
  const Rational& omega() const { return omega_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const BrauerDiagram& d) const;
  bool in_symmetric_group_span() const;

  void add(const BrauerDiagram& d, const Rational& c);

  BrauerElement& operator+=(const BrauerElement& o);
  BrauerElement& operator-=(const BrauerElement& o);
  BrauerElement& operator*=(const Rational& c);
  friend BrauerElement operator+(BrauerElement a, const BrauerElement& b) { return a += b; }
  friend BrauerElement operator-(BrauerElement a, const BrauerElement& b) { return a -= b; }
  friend BrauerElement operator*(const Rational& c, BrauerElement a) { return a *= c; }
  friend BrauerElement operator*(const BrauerElement& a, const BrauerElement& b);
  friend bool operator==(const BrauerElement& a, const BrauerElement& b);

  std::string to_string() const;

 private:
  void check_compatible(const BrauerElement& o) const;

  int m_;
  Rational omega_;
  TermMap terms_;
};

/// ω^s · (d1 d2 without loops).
BrauerElement diagram_multiply(const BrauerDiagram& d1, const BrauerDiagram& d2, const Rational& omega);

enum class GeneratorKind { transposition, contraction };

/// s_ab (transposition) or ε_ab (contraction); 1 <= a < b <= m.
BrauerDiagram generator(GeneratorKind kind, int a, int b, int m);

/// Jucys–Murphy element x_b = (ω-1)/2 + Σ_{a<b} (s_ab - ε_ab); 1 <= b <= m.
BrauerElement jm_element(int b, int m, const Rational& omega);

}  // namespace brauerch
