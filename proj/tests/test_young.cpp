#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "brauerch/error.hpp"
#include "brauerch/young.hpp"

using namespace brauerch;

namespace {

// Counts standard fillings of a skew shape by trying every assignment.
std::uint64_t brute_force_standard(const SkewShape& s) {
  std::vector<Box> cells;
  for (const Box& b : s.outer().boxes())
    if (!s.inner().contains_box(b)) cells.push_back(b);
  std::vector<int> label(cells.size());
  std::iota(label.begin(), label.end(), 1);
  std::uint64_t count = 0;
  auto value_at = [&](int row, int col) -> int {
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (cells[k].row == row && cells[k].col == col) return label[k];
    return -1;
  };
  do {
    bool ok = true;
    for (std::size_t k = 0; k < cells.size() && ok; ++k) {
      const int right = value_at(cells[k].row, cells[k].col + 1);
      const int below = value_at(cells[k].row + 1, cells[k].col);
      if (right != -1 && right < label[k]) ok = false;
      if (below != -1 && below < label[k]) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(label.begin(), label.end()));
  return count;
}

}  // namespace

TEST_CASE("partition parsing and validation") {
  CHECK(Partition::parse("2,2") == Partition({2, 2}));
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("0").empty());
  CHECK(Partition({3, 1, 0}) == Partition({3, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition::parse("2,,1"), DomainError);
  CHECK_THROWS_AS(Partition::parse("a"), DomainError);
  CHECK(Partition({3, 1}).to_string() == "3,1");
}

TEST_CASE("conjugation is an involution") {
  for (int m = 0; m <= 8; ++m)
    for (const auto& p : partitions_of(m)) CHECK(p.conjugate().conjugate() == p);
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
}

TEST_CASE("partitions are listed in reverse lexicographic order") {
  const auto ps = partitions_of(4);
  REQUIRE(ps.size() == 5);
  CHECK(ps[0] == Partition({4}));
  CHECK(ps[1] == Partition({3, 1}));
  CHECK(ps[2] == Partition({2, 2}));
  CHECK(ps[3] == Partition({2, 1, 1}));
  CHECK(ps[4] == Partition({1, 1, 1, 1}));
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(4, std::nullopt, 2).size() == 3);
  CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("sum of squared dimensions is m!") {
  for (int m = 1; m <= 6; ++m) {
    std::uint64_t sum = 0, fact = 1;
    for (int k = 2; k <= m; ++k) fact *= static_cast<std::uint64_t>(k);
    for (const auto& p : partitions_of(m)) {
      const auto d = dim_skew(SkewShape(p));
      sum += d * d;
      CHECK(d == dim_skew(SkewShape(p.conjugate())));
      CHECK(standard_tableaux(p).size() == d);
    }
    CHECK(sum == fact);
  }
}

TEST_CASE("hook products agree with hook lengths") {
  for (int m = 0; m <= 8; ++m)
    for (const auto& p : partitions_of(m)) CHECK(hook_product(SkewShape(p)) == hook_length_product(p));
  CHECK(hook_length_product(Partition({2, 2})) == Rational(12));
}

TEST_CASE("skew dimensions against brute-force fillings") {
  for (int m = 0; m <= 6; ++m)
    for (const auto& outer : partitions_of(m))
      for (const auto& inner : subpartitions(outer)) {
        const SkewShape s(outer, inner);
        CHECK(dim_skew(s) == brute_force_standard(s));
      }
  CHECK(hook_product(SkewShape(Partition({2, 2}), Partition({1}))) == Rational(3));
}

TEST_CASE("subpartitions include both ends") {
  const auto subs = subpartitions(Partition({2, 1}));
  CHECK(subs.size() == 5);
  CHECK(subs.front().empty());
  CHECK(subs.back() == Partition({2, 1}));
  CHECK_THROWS_AS(SkewShape(Partition({1}), Partition({2})), DomainError);
}

TEST_CASE("standard tableaux and contents") {
  const auto ts = standard_tableaux(Partition({2, 1}));
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].to_string() == "1 2|3");
  CHECK(ts[1].to_string() == "1 3|2");
  CHECK(ts[0] < ts[1]);
  CHECK(ts[0].without_last().shape() == Partition({2}));
  CHECK(contents(ts[0]) == std::vector<Rational>{Rational(0), Rational(1), Rational(-1)});
  CHECK(contents(ts[0], Rational(6)) == std::vector<Rational>{Rational(5, 2), Rational(7, 2), Rational(3, 2)});
}

TEST_CASE("addable and removable boxes") {
  const Partition p({2, 1});
  CHECK(p.addable_boxes().size() == 3);
  CHECK(p.removable_boxes().size() == 2);
  CHECK(p.with_box(Box{1, 3}) == Partition({3, 1}));
  CHECK(p.without_box(Box{2, 1}) == Partition({2}));
  CHECK_THROWS_AS(p.with_box(Box{3, 2}), DomainError);
  CHECK(p.hook_length(Box{1, 1}) == 3);
}
