#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauerch/rational.hpp"

namespace brauerch {

/// A box (i, j) of a diagram, 1-based: row i, column j.
struct Box {
  int row = 0;
  int col = 0;

  int content() const { return col - row; }
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Integer partition, stored as its weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else that is not weakly decreasing
  /// and positive is rejected.
  explicit Partition(std::vector<int> parts);

  /// "2,2,1"; the empty partition is "" or "0".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// λ_i for i >= 1, zero past the last row.
  int part(int i) const;

  Partition conjugate() const;
  bool contains(const Partition& inner) const;
  bool contains_box(Box b) const;

  std::vector<Box> boxes() const;
  int hook_length(Box b) const;
  std::vector<Box> addable_boxes() const;
  std::vector<Box> removable_boxes() const;
  Partition with_box(Box b) const;
  Partition without_box(Box b) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Ordering used for outputs: by size, then reverse lexicographic.
struct PartitionOutputOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition()) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  std::string to_string() const;

 private:
  Partition outer_;
  Partition inner_;
};

/// Standard tableau, held as the chain of boxes added for entries 1..m.
class StandardTableau {
 public:
  /// Validates that every prefix of the chain is a partition.
  explicit StandardTableau(std::vector<Box> chain);

  const std::vector<Box>& chain() const { return chain_; }
  int size() const { return static_cast<int>(chain_.size()); }
  const Partition& shape() const { return shape_; }
  /// Shape after the first k entries.
  Partition shape_at(int k) const;
  /// The tableau with the entry m removed.
  StandardTableau without_last() const;
  /// Entry rows, e.g. "1 2|3" for the (2,1) tableau with first row {1, 2}.
  std::string to_string() const;

  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) {
    return a.chain_ <=> b.chain_;
  }
  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.chain_ == b.chain_;
  }

 private:
  std::vector<Box> chain_;
  Partition shape_;
};

/// All partitions of m within the optional row/column bounds, reverse
/// lexicographic: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions_of(int m, std::optional<int> max_rows = std::nullopt,
                                     std::optional<int> max_cols = std::nullopt);

/// All partitions contained in λ (including ∅ and λ), by size then reverse lex.
std::vector<Partition> subpartitions(const Partition& lambda);

/// Standard tableaux of shape λ, sorted lexicographically by the sequence of
/// added boxes.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

/// Number of standard fillings of the skew shape.
std::uint64_t dim_skew(const SkewShape& shape);

/// H(θ) = |θ|! / dim θ.
Rational hook_product(const SkewShape& shape);

/// Product of the hook lengths of a normal shape.
Rational hook_length_product(const Partition& lambda);

/// Contents c_1..c_m. With ω given: (ω-1)/2 + j - i (Brauer algebra). Without:
/// j - i (symmetric group).
std::vector<Rational> contents(const StandardTableau& t,
                               const std::optional<Rational>& omega = std::nullopt);

}  // namespace brauerch
