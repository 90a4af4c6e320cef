#include "cdmat/gf2.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cdmat/zoo.hpp"
#include "test_support.hpp"

namespace cdmat {
namespace {

using testing::brute_rank;
using testing::columns_of;
using testing::mask_of;

Gf2Matrix s8_matrix() { return zoo::s8().representation(); }

TEST(Rref, ZeroMatrixHasRankZero) {
  const auto e = rref(Gf2Matrix(2, 3));
  EXPECT_EQ(e.rank, 0);
  EXPECT_TRUE(e.pivot_columns.empty());
  EXPECT_EQ(e.matrix, Gf2Matrix(2, 3));
}

TEST(Rref, IdentityIsFixed) {
  const auto id = Gf2Matrix::identity(4);
  const auto e = rref(id);
  EXPECT_EQ(e.matrix, id);
  EXPECT_EQ(e.rank, 4);
  EXPECT_EQ(e.pivot_columns, (std::vector<int>{0, 1, 2, 3}));
}

TEST(Rref, S8HasRankFour) {
  EXPECT_EQ(rref(s8_matrix()).rank, 4);
}

TEST(Rref, IdempotentRowEquivalentAndRankBounded) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = static_cast<int>(rng() % 7), n = 1 + static_cast<int>(rng() % 10);
    const auto m = testing::random_matrix(rng, r, n);
    const auto once = rref(m);
    const auto twice = rref(once.matrix);
    EXPECT_EQ(twice.matrix, once.matrix);
    EXPECT_LE(once.rank, std::min(r, n));
    EXPECT_TRUE(std::is_sorted(once.pivot_columns.begin(), once.pivot_columns.end()));
    EXPECT_EQ(std::adjacent_find(once.pivot_columns.begin(), once.pivot_columns.end()),
              once.pivot_columns.end());
    // Row-equivalent: stacking either onto the other adds no rank.
    std::vector<std::uint64_t> both(m.row_words().begin(), m.row_words().end());
    both.insert(both.end(), once.matrix.row_words().begin(), once.matrix.row_words().end());
    EXPECT_EQ(rref(Gf2Matrix::from_rows(both, n)).rank, once.rank);
    EXPECT_EQ(once.rank, brute_rank(columns_of(m), cdmat::detail::low_mask(n)));
  }
}

TEST(NullSpace, FullColumnRankHasEmptyBasis) {
  EXPECT_TRUE(null_space_basis(Gf2Matrix::identity(3)).empty());
}

TEST(NullSpace, TwoEqualColumns) {
  const auto basis = null_space_basis(Gf2Matrix::from_strings({"11"}));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], ElementSet::of({0, 1}, 2));
}

TEST(NullSpace, S8HasDimensionFour) {
  EXPECT_EQ(null_space_basis(s8_matrix()).size(), 8u - 4u);
}

TEST(NullSpace, SpanIsExactlyTheColumnDependencies) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = static_cast<int>(rng() % 6), n = 1 + static_cast<int>(rng() % 9);
    const auto m = testing::random_matrix(rng, r, n);
    const auto cols = columns_of(m);
    const auto basis = null_space_basis(m);
    EXPECT_EQ(static_cast<int>(basis.size()), n - rref(m).rank);
    std::vector<std::uint64_t> words;
    for (const auto& b : basis) words.push_back(b.bits());
    // Every combination sums the selected columns to zero ...
    std::set<std::uint64_t> span{0};
    for_each_nonzero_combination(words, [&](std::uint64_t v) {
      span.insert(v);
      std::uint64_t acc = 0;
      cdmat::detail::for_each_bit(v, [&](int j) { acc ^= cols[static_cast<std::size_t>(j)]; });
      EXPECT_EQ(acc, 0u);
    });
    EXPECT_EQ(span.size(), std::size_t{1} << basis.size());
    // ... and every zero-sum subset is in the span.
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
      std::uint64_t acc = 0;
      cdmat::detail::for_each_bit(s, [&](int j) { acc ^= cols[static_cast<std::size_t>(j)]; });
      if (acc == 0) EXPECT_TRUE(span.count(s)) << s;
    }
  }
}

TEST(RankOfColumns, Examples) {
  const auto m = s8_matrix();
  EXPECT_EQ(rank_of_columns(m, ElementSet::none(8)), 0);
  const ElementSet c(mask_of({1, 4, 7, 8}), 8);
  EXPECT_EQ(brute_rank(columns_of(m), c.bits()), 3);
  EXPECT_EQ(rank_of_columns(m, c), 3);
  EXPECT_EQ(rank_of_columns(m, ElementSet::all(8)), 4);
}

TEST(RankOfColumns, MonotoneAndSubmodularExhaustively) {
  std::mt19937_64 rng(3);
  std::vector<Gf2Matrix> cases{s8_matrix(), zoo::complete(4).representation()};
  for (int i = 0; i < 6; ++i) cases.push_back(testing::random_matrix(rng, 4, 8));
  for (const auto& m : cases) {
    const int n = m.column_count();
    std::vector<int> rank(std::size_t{1} << n);
    for (std::uint64_t s = 0; s < rank.size(); ++s) rank[s] = rank_of_columns(m, {s, n});
    for (std::uint64_t a = 0; a < rank.size(); ++a) {
      for (std::uint64_t b = 0; b < rank.size(); ++b) {
        ASSERT_GE(rank[a] + rank[b], rank[a | b] + rank[a & b]);
        if ((a & ~b) == 0) ASSERT_LE(rank[a], rank[b]);
      }
    }
  }
}

TEST(ElementSet, OperationsStayInUniverse) {
  const auto a = ElementSet::of({0, 2, 4}, 5);
  const auto b = ElementSet::of({1, 2}, 5);
  EXPECT_EQ(a ^ b, ElementSet::of({0, 1, 4}, 5));
  EXPECT_EQ(a | b, ElementSet::of({0, 1, 2, 4}, 5));
  EXPECT_EQ(a & b, ElementSet::of({2}, 5));
  EXPECT_EQ(a - b, ElementSet::of({0, 4}, 5));
  EXPECT_EQ(a.complement(), ElementSet::of({1, 3}, 5));
  EXPECT_EQ(ElementSet::all(64).complement(), ElementSet::none(64));
  EXPECT_THROW(ElementSet(0b100000, 5), std::invalid_argument);
  EXPECT_THROW(a ^ ElementSet::none(6), std::invalid_argument);
}

TEST(ElementSet, LexicographicOrder) {
  EXPECT_TRUE(lex_less(ElementSet::of({0, 1}, 6), ElementSet::of({0, 1, 5}, 6)));
  EXPECT_TRUE(lex_less(ElementSet::of({0, 1, 5}, 6), ElementSet::of({0, 2}, 6)));
  EXPECT_FALSE(lex_less(ElementSet::of({0, 2}, 6), ElementSet::of({0, 1, 5}, 6)));
  EXPECT_TRUE(lex_less(ElementSet::none(6), ElementSet::of({5}, 6)));
}

TEST(CycleSpace, CapIsEnforced) {
  std::vector<std::uint64_t> basis(kCycleSpaceCap + 1, 1);
  EXPECT_THROW(for_each_nonzero_combination(basis, [](std::uint64_t) {}), CapExceeded);
}

}  // namespace
}  // namespace cdmat
