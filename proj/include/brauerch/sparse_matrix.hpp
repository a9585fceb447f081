#pragma once

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "brauerch/error.hpp"
#include "brauerch/multipoly.hpp"
#include "brauerch/rational.hpp"

namespace brauerch {

/// Square sparse matrix with exact entries (Rational or MultiPoly).
///
/// Storage is one column-sorted entry list per row, so iteration visits the
/// nonzeros in sorted (row, column) order. Zero values are never stored.
template <class E>
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, E>;
  using Row = std::vector<Entry>;

  explicit SparseMatrix(std::size_t dim = 0) : dim_(dim), rows_(dim) {}

  static SparseMatrix identity(std::size_t dim)
    requires std::is_same_v<E, Rational>
  {
    return scalar(dim, Rational(1));
  }

  static SparseMatrix scalar(std::size_t dim, const E& c) {
    SparseMatrix m(dim);
    if (is_zero(c)) return m;
    for (std::size_t i = 0; i < dim; ++i) m.rows_[i].emplace_back(i, c);
    return m;
  }

  /// Builds from (row, column, value) triples; duplicates are summed.
  static SparseMatrix from_triples(std::size_t dim,
                                   const std::vector<std::tuple<std::size_t, std::size_t, E>>& t) {
    SparseMatrix m(dim);
    for (const auto& [r, c, v] : t) m.add_to(r, c, v);
    return m;
  }

  std::size_t dimension() const { return dim_; }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  const Row& row(std::size_t r) const { return rows_.at(r); }

  E at(std::size_t r, std::size_t c) const {
    check_index(r, c);
    const Row& row = rows_[r];
    auto it = lower(row, c);
    return (it != row.end() && it->first == c) ? it->second : E();
  }

  void set(std::size_t r, std::size_t c, E v) {
    check_index(r, c);
    Row& row = rows_[r];
    auto it = lower(row, c);
    const bool present = it != row.end() && it->first == c;
    if (is_zero(v)) {
      if (present) row.erase(it);
    } else if (present) {
      it->second = std::move(v);
    } else {
      row.insert(it, Entry(c, std::move(v)));
    }
  }

  void add_to(std::size_t r, std::size_t c, const E& v) {
    check_index(r, c);
    if (is_zero(v)) return;
    Row& row = rows_[r];
    auto it = lower(row, c);
    if (it != row.end() && it->first == c) {
      it->second += v;
      if (is_zero(it->second)) row.erase(it);
    } else {
      row.insert(it, Entry(c, v));
    }
  }

  /// Appends to a row; the caller guarantees increasing columns and nonzero v.
  void push_back_unchecked(std::size_t r, std::size_t c, E v) {
    rows_[r].emplace_back(c, std::move(v));
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t r = 0; r < dim_; ++r)
      for (const auto& [c, v] : rows_[r]) f(r, c, v);
  }

  E trace() const {
    E t{};
    for (std::size_t r = 0; r < dim_; ++r) {
      const Row& row = rows_[r];
      auto it = lower(row, r);
      if (it != row.end() && it->first == r) t += it->second;
    }
    return t;
  }

  std::vector<E> diagonal() const {
    std::vector<E> d(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      auto it = lower(rows_[r], r);
      if (it != rows_[r].end() && it->first == r) d[r] = it->second;
    }
    return d;
  }

  SparseMatrix& operator+=(const SparseMatrix& o) { return merge(o, false); }
  SparseMatrix& operator-=(const SparseMatrix& o) { return merge(o, true); }

  SparseMatrix& operator*=(const Rational& s) {
    if (s.is_zero()) {
      for (auto& r : rows_) r.clear();
      return *this;
    }
    for (auto& r : rows_)
      for (auto& e : r) e.second *= s;
    return *this;
  }

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(const Rational& s, SparseMatrix a) { return a *= s; }
  friend SparseMatrix operator*(SparseMatrix a, const Rational& s) { return a *= s; }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("matrix product of unequal dimensions");
    SparseMatrix out(a.dim_);
    std::vector<E> acc(a.dim_);
    std::vector<char> used(a.dim_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t r = 0; r < a.dim_; ++r) {
      touched.clear();
      for (const auto& [k, av] : a.rows_[r]) {
        for (const auto& [c, bv] : b.rows_[k]) {
          if (!used[c]) {
            used[c] = 1;
            touched.push_back(c);
            acc[c] = av * bv;
          } else {
            acc[c] += av * bv;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      Row& dst = out.rows_[r];
      dst.reserve(touched.size());
      for (std::size_t c : touched) {
        used[c] = 0;
        if (!is_zero(acc[c])) dst.emplace_back(c, std::move(acc[c]));
        acc[c] = E();
      }
    }
    return out;
  }

  std::vector<E> apply(const std::vector<E>& v) const {
    if (v.size() != dim_) throw DimensionMismatch("vector length differs from matrix dimension");
    std::vector<E> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (const auto& [c, x] : rows_[r])
        if (!is_zero(v[c])) out[r] += x * v[c];
    return out;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
    return t;
  }

  template <class F>
  auto map_entries(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const E&>()))>;
    SparseMatrix<Out> m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (const auto& [c, v] : rows_[r]) {
        Out o = f(v);
        if (!is_zero(o)) m.push_back_unchecked(r, c, std::move(o));
      }
    return m;
  }

  bool is_zero_matrix() const {
    for (const auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t r = 0; r < a.dim_; ++r) {
      const Row& x = a.rows_[r];
      const Row& y = b.rows_[r];
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].first != y[i].first || !(x[i].second == y[i].second)) return false;
    }
    return true;
  }

 private:
  static typename Row::const_iterator lower(const Row& row, std::size_t c) {
    return std::lower_bound(row.begin(), row.end(), c,
                            [](const Entry& e, std::size_t col) { return e.first < col; });
  }
  static typename Row::iterator lower(Row& row, std::size_t c) {
    return std::lower_bound(row.begin(), row.end(), c,
                            [](const Entry& e, std::size_t col) { return e.first < col; });
  }

  void check_index(std::size_t r, std::size_t c) const {
    if (r >= dim_ || c >= dim_) throw DomainError("matrix index out of range");
  }

  SparseMatrix& merge(const SparseMatrix& o, bool subtract) {
    if (dim_ != o.dim_) throw DimensionMismatch("matrix sum of unequal dimensions");
    for (std::size_t r = 0; r < dim_; ++r) {
      const Row& b = o.rows_[r];
      if (b.empty()) continue;
      Row& a = rows_[r];
      Row merged;
      merged.reserve(a.size() + b.size());
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
          merged.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].first < a[i].first) {
          merged.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
          ++j;
        } else {
          E v = std::move(a[i].second);
          if (subtract)
            v -= b[j].second;
          else
            v += b[j].second;
          if (!is_zero(v)) merged.emplace_back(a[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      a = std::move(merged);
    }
    return *this;
  }

  std::size_t dim_;
  std::vector<Row> rows_;
};

using RationalMatrix = SparseMatrix<Rational>;
using PolyMatrix = SparseMatrix<MultiPoly>;

}  // namespace brauerch
