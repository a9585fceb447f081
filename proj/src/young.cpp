#include "brauerch/young.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "brauerch/error.hpp"

namespace brauerch {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string s(text);
  if (s.empty() || s == "0") return Partition();
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos)
      throw DomainError("malformed partition '" + s + "'");
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw DomainError("malformed partition '" + s + "'");
    }
  }
  if (s.back() == ',') throw DomainError("malformed partition '" + s + "'");
  return Partition(std::move(parts));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  const int cols = part(1);
  for (int j = 1; j <= cols; ++j) {
    int h = 0;
    for (int p : parts_)
      if (p >= j) ++h;
    c.push_back(h);
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

bool Partition::contains_box(Box b) const {
  return b.row >= 1 && b.col >= 1 && b.col <= part(b.row);
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
  return out;
}

int Partition::hook_length(Box b) const {
  if (!contains_box(b)) throw DomainError("box outside the diagram");
  const int arm = part(b.row) - b.col;
  int leg = 0;
  for (int i = b.row + 1; i <= length() && part(i) >= b.col; ++i) ++leg;
  return arm + leg + 1;
}

std::vector<Box> Partition::addable_boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= length() + 1; ++i)
    if (i == 1 || part(i) < part(i - 1)) out.push_back({i, part(i) + 1});
  return out;
}

std::vector<Box> Partition::removable_boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= length(); ++i)
    if (part(i) > part(i + 1)) out.push_back({i, part(i)});
  return out;
}

Partition Partition::with_box(Box b) const {
  if (b.row < 1 || b.col != part(b.row) + 1 || (b.row > 1 && part(b.row - 1) < b.col))
    throw DomainError("box is not addable");
  std::vector<int> p = parts_;
  if (b.row > length()) p.push_back(1);
  else ++p[static_cast<std::size_t>(b.row - 1)];
  return Partition(std::move(p));
}

Partition Partition::without_box(Box b) const {
  if (b.col != part(b.row) || part(b.row + 1) >= b.col)
    throw DomainError("box is not removable");
  std::vector<int> p = parts_;
  --p[static_cast<std::size_t>(b.row - 1)];
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool PartitionOutputOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.parts() > b.parts();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) throw DomainError("inner shape is not contained in outer shape");
}

std::string SkewShape::to_string() const {
  return "(" + outer_.to_string() + ")/(" + inner_.to_string() + ")";
}

StandardTableau::StandardTableau(std::vector<Box> chain) : chain_(std::move(chain)) {
  Partition p;
  for (const Box& b : chain_) p = p.with_box(b);
  shape_ = std::move(p);
}

Partition StandardTableau::shape_at(int k) const {
  if (k < 0 || k > size()) throw DomainError("tableau prefix length out of range");
  Partition p;
  for (int a = 0; a < k; ++a) p = p.with_box(chain_[static_cast<std::size_t>(a)]);
  return p;
}

StandardTableau StandardTableau::without_last() const {
  if (chain_.empty()) throw DomainError("empty tableau has no last entry");
  return StandardTableau(std::vector<Box>(chain_.begin(), chain_.end() - 1));
}

std::string StandardTableau::to_string() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape_.length()));
  for (std::size_t a = 0; a < chain_.size(); ++a) {
    auto& row = rows[static_cast<std::size_t>(chain_[a].row - 1)];
    row.resize(static_cast<std::size_t>(shape_.part(chain_[a].row)));
    row[static_cast<std::size_t>(chain_[a].col - 1)] = static_cast<int>(a + 1);
  }
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += "|";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) s += " ";
      s += std::to_string(rows[i][j]);
    }
  }
  return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::optional<int> max_rows,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_rows && static_cast<int>(cur.size()) >= *max_rows) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, max_rows, out);
    cur.pop_back();
  }
}

void tableaux_rec(const Partition& target, Partition cur, std::vector<Box>& chain,
                  std::vector<StandardTableau>& out) {
  if (cur == target) {
    out.emplace_back(chain);
    return;
  }
  for (const Box& b : cur.addable_boxes()) {
    if (!target.contains_box(b)) continue;
    chain.push_back(b);
    tableaux_rec(target, cur.with_box(b), chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m, std::optional<int> max_rows, std::optional<int> max_cols) {
  if (m < 0) throw DomainError("cannot partition a negative number");
  std::vector<Partition> out;
  std::vector<int> cur;
  const int max_part = max_cols ? std::min(m, *max_cols) : m;
  if (m == 0) return {Partition()};
  if (max_part < 1) return out;
  partitions_rec(m, max_part, cur, max_rows, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row) -> void {
    out.emplace_back(cur);
    if (row > lambda.length()) return;
    const int bound = std::min(lambda.part(row), cur.empty() ? lambda.part(row) : cur.back());
    for (int p = 1; p <= bound; ++p) {
      cur.push_back(p);
      self(self, row + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), PartitionOutputOrder{});
  return out;
}

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  std::vector<StandardTableau> out;
  std::vector<Box> chain;
  tableaux_rec(lambda, Partition(), chain, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t dim_skew(const SkewShape& shape) {
  std::map<Partition, std::uint64_t> memo;
  auto count = [&](auto&& self, const Partition& outer) -> std::uint64_t {
    if (outer == shape.inner()) return 1;
    if (auto it = memo.find(outer); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (const Box& b : outer.removable_boxes()) {
      Partition smaller = outer.without_box(b);
      if (smaller.contains(shape.inner())) total += self(self, smaller);
    }
    memo.emplace(outer, total);
    return total;
  };
  return count(count, shape.outer());
}

Rational hook_product(const SkewShape& shape) {
  return factorial(shape.size()) / Rational(dim_skew(shape));
}

Rational hook_length_product(const Partition& lambda) {
  Rational h(1);
  for (const Box& b : lambda.boxes()) h *= Rational(lambda.hook_length(b));
  return h;
}

std::vector<Rational> contents(const StandardTableau& t, const std::optional<Rational>& omega) {
  const Rational shift = omega ? (*omega - Rational(1)) / Rational(2) : Rational(0);
  std::vector<Rational> c;
  c.reserve(t.chain().size());
  for (const Box& b : t.chain()) c.push_back(shift + Rational(b.content()));
  return c;
}

}  // namespace brauerch
