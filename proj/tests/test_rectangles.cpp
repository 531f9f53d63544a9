#include <gtest/gtest.h>

#include <algorithm>

#include "ldal/error.hpp"
#include "ldal/rectangles.hpp"

using namespace ldal;

namespace {

std::vector<std::vector<Weight>> rows_of(const RectangularArray& r) {
  std::vector<std::vector<Weight>> out(r.rows());
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) out[i].push_back(r.at(i, j));
  return out;
}

std::vector<Weight> sums(const RectangularArray& r) {
  std::vector<Weight> s(r.cols(), 0);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) s[j] += r.at(i, j);
  return s;
}

bool covers(std::vector<Weight> xs, Weight lo, Weight hi) {
  std::sort(xs.begin(), xs.end());
  if (static_cast<Weight>(xs.size()) != hi - lo + 1) return false;
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (xs[k] != lo + static_cast<Weight>(k)) return false;
  return true;
}

using Rows = std::vector<std::vector<Weight>>;

}  // namespace

TEST(MatrixA, Examples) {
  auto a = build_matrix_A(2, 3);
  EXPECT_EQ(rows_of(a), (Rows{{1, 2, 3}, {6, 5, 4}}));
  EXPECT_EQ(sums(a), (std::vector<Weight>{7, 7, 7}));
  auto b = build_matrix_A(4, 3);
  EXPECT_EQ(b.at(0, 0) + b.at(1, 0) + b.at(2, 0) + b.at(3, 0), 26);
  EXPECT_EQ(rows_of(build_matrix_A(2, 1)), (Rows{{1}, {2}}));
  EXPECT_THROW(build_matrix_A(3, 2), ParameterError);
}

TEST(MatrixBC, Examples) {
  auto b = build_matrix_B(3, 2);
  auto c = build_matrix_C(3, 2);
  EXPECT_EQ(rows_of(b), (Rows{{1, 2}, {3, 4}, {8, 6}}));
  EXPECT_EQ(rows_of(c), (Rows{{7, 5}, {9, 10}, {11, 12}}));
  EXPECT_EQ(sums(b), (std::vector<Weight>{12, 12}));
  EXPECT_EQ(sums(c), (std::vector<Weight>{27, 27}));
  auto all = b.entries();
  all.insert(all.end(), c.entries().begin(), c.entries().end());
  EXPECT_TRUE(covers(all, 1, 12));
  EXPECT_TRUE(jointly_cover({&b, &c}));
  EXPECT_THROW(build_matrix_B(4, 2), ParameterError);
  EXPECT_THROW(build_matrix_C(1, 2), ParameterError);
}

TEST(MatrixA, AllEvenUpTo20) {
  for (int n = 2; n <= 20; n += 2)
    for (int m = 1; m <= 20; ++m) {
      auto a = build_matrix_A(n, m);
      ASSERT_TRUE(covers(a.entries(), 1, static_cast<Weight>(n) * m)) << n << "x" << m;
      for (Weight s : sums(a)) ASSERT_EQ(2 * s, static_cast<Weight>(n) * (n * m + 1));
      EXPECT_EQ(column_sum_A(n, m), static_cast<Weight>(n) * (n * m + 1) / 2);
    }
}

TEST(MatrixBC, AllOddUpTo19) {
  for (int n = 3; n <= 19; n += 2)
    for (int m = 1; m <= 20; ++m) {
      auto b = build_matrix_B(n, m);
      auto c = build_matrix_C(n, m);
      const Weight M = m, N = n;
      for (Weight s : sums(b)) ASSERT_EQ(s, M * N * N - 4 * M + 2);
      for (Weight s : sums(c)) ASSERT_EQ(s, M * N * N + 4 * M + N - 2);
      ASSERT_NE(M * N * N - 4 * M + 2, M * N * N + 4 * M + N - 2);
      auto all = b.entries();
      all.insert(all.end(), c.entries().begin(), c.entries().end());
      ASSERT_TRUE(covers(all, 1, 2 * N * M)) << n << "x" << m;
    }
}

TEST(Magic, ThreeByThree) {
  auto r = build_magic_rectangle(3, 3);
  EXPECT_TRUE(covers(r.entries(), 1, 9));
  EXPECT_EQ(sums(r), (std::vector<Weight>{15, 15, 15}));
}

TEST(Magic, ThreeByFive) {
  auto r = build_magic_rectangle(3, 5);
  EXPECT_EQ(sums(r), (std::vector<Weight>(5, 24)));
}

TEST(Magic, SingleRowIsDegenerate) {
  auto r = build_magic_rectangle(1, 5);
  EXPECT_EQ(rows_of(r), (Rows{{1, 2, 3, 4, 5}}));
  EXPECT_TRUE(r.degenerate());
  EXPECT_FALSE(build_magic_rectangle(1, 1).degenerate());
  EXPECT_FALSE(build_magic_rectangle(3, 3).degenerate());
}

TEST(Magic, AllOddUpTo11) {
  for (int n = 3; n <= 11; n += 2)
    for (int m = 1; m <= 11; m += 2) {
      auto r = build_magic_rectangle(n, m);
      ASSERT_TRUE(covers(r.entries(), 1, static_cast<Weight>(n) * m));
      for (Weight s : sums(r)) ASSERT_EQ(2 * s, static_cast<Weight>(n) * (n * m + 1)) << n << "x" << m;
    }
  EXPECT_THROW(build_magic_rectangle(2, 3), ParameterError);
  EXPECT_THROW(build_magic_rectangle(3, 4), ParameterError);
}

TEST(Shift, AddsNkPerColumn) {
  for (Weight k : {0, 1, 7, 40}) {
    auto a = build_matrix_A(4, 5);
    auto s = a.shifted(k);
    EXPECT_EQ(s.offset(), k);
    EXPECT_TRUE(s.is_range_permutation());
    auto before = sums(a), after = sums(s);
    for (std::size_t j = 0; j < before.size(); ++j) EXPECT_EQ(after[j], before[j] + 4 * k);
  }
}

TEST(ColumnSums, MatchesReference) {
  auto r = build_matrix_C(5, 4);
  EXPECT_EQ(column_sums(r), sums(r));
}

TEST(Dump, Format) {
  EXPECT_EQ(dump_rectangle(build_matrix_A(2, 3)), "2 3 0\n1 2 3\n6 5 4\n");
  EXPECT_EQ(dump_rectangle(build_matrix_A(2, 1).shifted(4)), "2 1 4\n5\n6\n");
}
