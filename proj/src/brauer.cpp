#include "brauerch/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "brauerch/error.hpp"

namespace brauerch {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

std::string dot_name(int dot, int m) {
  return dot < m ? std::to_string(dot + 1) : std::to_string(dot - m + 1) + "'";
}

}  // namespace

BrauerDiagram::BrauerDiagram(std::vector<int> partner) : partner_(std::move(partner)) {
  const int n = static_cast<int>(partner_.size());
  if (n == 0 || n % 2 != 0) throw DomainError("a Brauer diagram needs 2m dots with m >= 1");
  for (int x = 0; x < n; ++x) {
    const int y = partner_[static_cast<std::size_t>(x)];
    if (y < 0 || y >= n || y == x || partner_[static_cast<std::size_t>(y)] != x)
      throw DomainError("diagram edges do not form a perfect matching");
  }
}

BrauerDiagram BrauerDiagram::identity(int m) {
  std::vector<int> sigma(static_cast<std::size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 0);
  return from_permutation(sigma);
}

BrauerDiagram BrauerDiagram::from_permutation(const std::vector<int>& sigma) {
  const int m = static_cast<int>(sigma.size());
  std::vector<int> partner(static_cast<std::size_t>(2 * m), -1);
  for (int a = 0; a < m; ++a) {
    const int b = sigma[static_cast<std::size_t>(a)];
    if (b < 0 || b >= m) throw DomainError("permutation entry out of range");
    partner[static_cast<std::size_t>(a)] = m + b;
    partner[static_cast<std::size_t>(m + b)] = a;
  }
  return BrauerDiagram(std::move(partner));
}

BrauerDiagram BrauerDiagram::parse(std::string_view text, std::optional<int> m) {
  struct Dot {
    int index;
    bool bottom;
  };
  std::vector<std::pair<Dot, Dot>> edges;
  std::stringstream ss{std::string(text)};
  std::string item;
  auto parse_dot = [&](std::string s) {
    Dot d{0, false};
    if (!s.empty() && s.back() == '\'') {
      d.bottom = true;
      s.pop_back();
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("malformed diagram dot '" + s + "'");
    d.index = std::stoi(s);
    if (d.index < 1) throw DomainError("diagram dots are numbered from 1");
    return d;
  };
  int largest = 0;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw DomainError("malformed diagram edge '" + item + "'");
    Dot a = parse_dot(item.substr(0, dash));
    Dot b = parse_dot(item.substr(dash + 1));
    largest = std::max({largest, a.index, b.index});
    edges.emplace_back(a, b);
  }
  const int mm = m.value_or(largest);
  if (largest > mm) throw DomainError("diagram dot index exceeds m");
  std::vector<int> partner(static_cast<std::size_t>(2 * mm), -1);
  auto id = [&](Dot d) { return d.bottom ? mm + d.index - 1 : d.index - 1; };
  for (const auto& [a, b] : edges) {
    const int x = id(a), y = id(b);
    if (partner[static_cast<std::size_t>(x)] != -1 || partner[static_cast<std::size_t>(y)] != -1)
      throw DomainError("a diagram dot lies on two edges");
    partner[static_cast<std::size_t>(x)] = y;
    partner[static_cast<std::size_t>(y)] = x;
  }
  return BrauerDiagram(std::move(partner));
}

bool BrauerDiagram::is_permutation() const {
  const int mm = m();
  for (int a = 0; a < mm; ++a)
    if (partner_[static_cast<std::size_t>(a)] < mm) return false;
  return true;
}

std::vector<int> BrauerDiagram::permutation() const {
  if (!is_permutation()) throw DomainError("diagram is not a permutation");
  const int mm = m();
  std::vector<int> sigma(static_cast<std::size_t>(mm));
  for (int a = 0; a < mm; ++a) sigma[static_cast<std::size_t>(a)] = partner_[static_cast<std::size_t>(a)] - mm;
  return sigma;
}

std::vector<std::pair<int, int>> BrauerDiagram::top_arcs() const {
  std::vector<std::pair<int, int>> out;
  const int mm = m();
  for (int a = 0; a < mm; ++a) {
    const int b = partner_[static_cast<std::size_t>(a)];
    if (b < mm && a < b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::pair<int, int>> BrauerDiagram::bottom_arcs() const {
  std::vector<std::pair<int, int>> out;
  const int mm = m();
  for (int a = mm; a < 2 * mm; ++a) {
    const int b = partner_[static_cast<std::size_t>(a)];
    if (b >= mm && a < b) out.emplace_back(a - mm, b - mm);
  }
  return out;
}

std::vector<std::pair<int, int>> BrauerDiagram::through_strands() const {
  std::vector<std::pair<int, int>> out;
  const int mm = m();
  for (int a = 0; a < mm; ++a) {
    const int b = partner_[static_cast<std::size_t>(a)];
    if (b >= mm) out.emplace_back(a, b - mm);
  }
  return out;
}

std::string BrauerDiagram::to_string() const {
  const int mm = m();
  std::string s;
  for (int x = 0; x < 2 * mm; ++x) {
    const int y = partner_[static_cast<std::size_t>(x)];
    if (y < x) continue;
    if (!s.empty()) s += ",";
    s += dot_name(x, mm) + "-" + dot_name(y, mm);
  }
  return s;
}

std::pair<BrauerDiagram, int> compose(const BrauerDiagram& d1, const BrauerDiagram& d2) {
  const int m = d1.m();
  if (d2.m() != m) throw DimensionMismatch("cannot multiply diagrams of different sizes");
  // layers: 0..m-1 top of d1, m..2m-1 the glued middle row, 2m..3m-1 bottom of d2
  const auto um = static_cast<std::size_t>(m);
  UnionFind uf(3 * um);
  for (int x = 0; x < 2 * m; ++x) {
    const int y = d1.partner(x);
    if (x < y) uf.unite(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    const int u = d2.partner(x);
    if (x < u) uf.unite(static_cast<std::size_t>(x) + um, static_cast<std::size_t>(u) + um);
  }
  std::vector<std::vector<int>> outer(3 * um);
  for (int x = 0; x < 3 * m; ++x) {
    if (x >= m && x < 2 * m) continue;
    outer[uf.find(static_cast<std::size_t>(x))].push_back(x);
  }
  std::vector<int> partner(2 * um, -1);
  auto result_dot = [m](int x) { return x < m ? x : x - m; };
  for (const auto& ends : outer) {
    if (ends.empty()) continue;
    if (ends.size() != 2) throw InternalError("diagram composition produced an open strand");
    const int a = result_dot(ends[0]), b = result_dot(ends[1]);
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  }
  int loops = 0;
  std::vector<char> seen(3 * um, 0);
  for (std::size_t x = um; x < 2 * um; ++x) {
    const std::size_t root = uf.find(x);
    if (outer[root].empty() && !seen[root]) {
      seen[root] = 1;
      ++loops;
    }
  }
  return {BrauerDiagram(std::move(partner)), loops};
}

std::vector<BrauerDiagram> all_diagrams(int m) {
  if (m < 1) throw DomainError("m must be positive");
  std::vector<BrauerDiagram> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * m), -1);
  auto rec = [&](auto&& self) -> void {
    auto it = std::find(partner.begin(), partner.end(), -1);
    if (it == partner.end()) {
      out.emplace_back(partner);
      return;
    }
    const int x = static_cast<int>(it - partner.begin());
    for (int y = x + 1; y < 2 * m; ++y) {
      if (partner[static_cast<std::size_t>(y)] != -1) continue;
      partner[static_cast<std::size_t>(x)] = y;
      partner[static_cast<std::size_t>(y)] = x;
      self(self);
      partner[static_cast<std::size_t>(x)] = -1;
      partner[static_cast<std::size_t>(y)] = -1;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_basis(int m) { return all_diagrams(m).size(); }

BrauerElement::BrauerElement(const BrauerDiagram& d, Rational omega, Rational coeff)
    : m_(d.m()), omega_(std::move(omega)) {
  add(d, coeff);
}

BrauerElement BrauerElement::identity(int m, const Rational& omega) {
  return BrauerElement(BrauerDiagram::identity(m), omega);
}

Rational BrauerElement::coefficient(const BrauerDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool BrauerElement::in_symmetric_group_span() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_permutation(); });
}

void BrauerElement::add(const BrauerDiagram& d, const Rational& c) {
  if (d.m() != m_) throw DimensionMismatch("diagram size differs from element size");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void BrauerElement::check_compatible(const BrauerElement& o) const {
  if (m_ != o.m_) throw DimensionMismatch("Brauer elements of different sizes");
  if (omega_ != o.omega_) throw DomainError("Brauer elements at different values of omega");
}

BrauerElement& BrauerElement::operator+=(const BrauerElement& o) {
  check_compatible(o);
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

BrauerElement& BrauerElement::operator-=(const BrauerElement& o) {
  check_compatible(o);
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

BrauerElement& BrauerElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

BrauerElement operator*(const BrauerElement& a, const BrauerElement& b) {
  a.check_compatible(b);
  BrauerElement r(a.m_, a.omega_);
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      auto [d, loops] = compose(da, db);
      r.add(d, ca * cb * a.omega_.pow(loops));
    }
  }
  return r;
}

bool operator==(const BrauerElement& a, const BrauerElement& b) {
  return a.m_ == b.m_ && a.omega_ == b.omega_ && a.terms_ == b.terms_;
}

std::string BrauerElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*[" << d.to_string() << "]";
  }
  return os.str();
}

BrauerElement diagram_multiply(const BrauerDiagram& d1, const BrauerDiagram& d2, const Rational& omega) {
  auto [d, loops] = compose(d1, d2);
  return BrauerElement(d, omega, omega.pow(loops));
}

BrauerDiagram generator(GeneratorKind kind, int a, int b, int m) {
  if (!(1 <= a && a < b && b <= m))
    throw DomainError("generator indices must satisfy 1 <= a < b <= m");
  std::vector<int> partner(static_cast<std::size_t>(2 * m));
  for (int x = 0; x < m; ++x) {
    partner[static_cast<std::size_t>(x)] = m + x;
    partner[static_cast<std::size_t>(m + x)] = x;
  }
  const int i = a - 1, j = b - 1;
  auto join = [&](int x, int y) {
    partner[static_cast<std::size_t>(x)] = y;
    partner[static_cast<std::size_t>(y)] = x;
  };
  if (kind == GeneratorKind::transposition) {
    join(i, m + j);
    join(j, m + i);
  } else {
    join(i, j);
    join(m + i, m + j);
  }
  return BrauerDiagram(std::move(partner));
}

BrauerElement jm_element(int b, int m, const Rational& omega) {
  if (b < 1 || b > m) throw DomainError("Jucys-Murphy index out of range");
  BrauerElement x = (omega - Rational(1)) / Rational(2) * BrauerElement::identity(m, omega);
  for (int a = 1; a < b; ++a) {
    x.add(generator(GeneratorKind::transposition, a, b, m), Rational(1));
    x.add(generator(GeneratorKind::contraction, a, b, m), Rational(-1));
  }
  return x;
}

}  // namespace brauerch
