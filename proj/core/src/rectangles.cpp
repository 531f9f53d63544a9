#include "ldal/rectangles.hpp"

#include <algorithm>
#include <sstream>

#include "ldal/error.hpp"

namespace ldal {

RectangularArray::RectangularArray(int rows, int cols, std::vector<Weight> entries, Weight offset)
    : rows_(rows), cols_(cols), offset_(offset), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0 || entries_.size() != static_cast<std::size_t>(rows) * cols)
    throw ParameterError("rectangle entry count does not match its shape");
}

RectangularArray RectangularArray::shifted(Weight k) const {
  auto e = entries_;
  for (auto& x : e) x += k;
  RectangularArray out(rows_, cols_, std::move(e), offset_ + k);
  out.degenerate_ = degenerate_;
  return out;
}

bool RectangularArray::is_range_permutation() const {
  std::vector<Weight> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != offset_ + static_cast<Weight>(i) + 1) return false;
  return true;
}

std::vector<Weight> column_sums(const RectangularArray& r) {
  std::vector<Weight> sums(r.cols(), 0);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) sums[j] += r.at(i, j);
  return sums;
}

bool jointly_cover(const std::vector<const RectangularArray*>& parts) {
  std::vector<Weight> all;
  for (const auto* p : parts) all.insert(all.end(), p->entries().begin(), p->entries().end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<Weight>(i) + 1) return false;
  return true;
}

// Formulas below use 1-based (i, j) as written.

RectangularArray build_matrix_A(int n, int m) {
  if (n < 2 || n % 2 != 0) throw ParameterError("matrix A needs an even row count >= 2");
  if (m < 1) throw ParameterError("matrix A needs m >= 1");
  std::vector<Weight> e;
  for (Weight i = 1; i <= n; ++i)
    for (Weight j = 1; j <= m; ++j) e.push_back(i % 2 == 1 ? (i - 1) * m + j : i * m + 1 - j);
  return RectangularArray(n, m, std::move(e));
}

RectangularArray build_matrix_B(int n, int m) {
  if (n < 3 || n % 2 == 0) throw ParameterError("matrix B needs an odd row count >= 3");
  if (m < 1) throw ParameterError("matrix B needs m >= 1");
  std::vector<Weight> e;
  for (Weight i = 1; i <= n; ++i)
    for (Weight j = 1; j <= m; ++j) {
      Weight x;
      if (i == 1) x = j;
      else if (i == 2) x = j + m;
      else if (i == 3) x = 4 * m - (2 * j - 2);
      else if (i % 2 == 0) x = 6 * m + 2 * j - 1 + 2 * m * (i - 4);
      else x = 2 * i * m - (2 * j - 1);
      e.push_back(x);
    }
  return RectangularArray(n, m, std::move(e));
}

RectangularArray build_matrix_C(int n, int m) {
  if (n < 3 || n % 2 == 0) throw ParameterError("matrix C needs an odd row count >= 3");
  if (m < 1) throw ParameterError("matrix C needs m >= 1");
  std::vector<Weight> e;
  for (Weight i = 1; i <= n; ++i)
    for (Weight j = 1; j <= m; ++j) {
      Weight x;
      if (i == 1) x = 4 * m + 1 - 2 * j;
      else if (i == 2) x = 4 * m + j;
      else if (i == 3) x = 5 * m + j;
      else if (i % 2 == 0) x = 6 * m + 2 * j + 2 * m * (i - 4);
      else x = 2 * i * m - (2 * j - 2);
      e.push_back(x);
    }
  return RectangularArray(n, m, std::move(e));
}

RectangularArray build_magic_rectangle(int n, int m) {
  if (n < 1 || m < 1 || n % 2 == 0 || m % 2 == 0)
    throw ParameterError("magic rectangle needs odd dimensions");
  if (n == 1) {
    std::vector<Weight> e;
    for (Weight j = 1; j <= m; ++j) e.push_back(j);
    RectangularArray r(1, m, std::move(e));
    if (m > 1) r.mark_degenerate();
    return r;
  }
  const Weight M = m;
  const Weight pairs = (n - 3) / 2;
  const Weight c = M * pairs;  // values below the three seed rows
  const Weight seed_sum = 3 * (3 * M + 1) / 2;
  std::vector<std::vector<Weight>> rows(n, std::vector<Weight>(m));
  for (Weight j = 1; j <= M; ++j) {
    Weight t = j - 1;
    Weight r1 = j;
    Weight r2 = M + 1 + ((M - 1 - 2 * t) % M + M) % M;
    Weight r3 = seed_sum - r1 - r2;
    rows[0][t] = r1 + c;
    rows[1][t] = r2 + c;
    rows[2][t] = r3 + c;
  }
  const Weight top = static_cast<Weight>(n) * M + 1;
  for (Weight p = 0; p < pairs; ++p)
    for (Weight j = 1; j <= M; ++j) {
      Weight low = p * M + j;
      rows[3 + 2 * p][j - 1] = low;
      rows[4 + 2 * p][j - 1] = top - low;
    }
  std::vector<Weight> e;
  for (const auto& row : rows) e.insert(e.end(), row.begin(), row.end());
  return RectangularArray(n, m, std::move(e));
}

Weight column_sum_A(int n, int m) { return static_cast<Weight>(n) * (static_cast<Weight>(n) * m + 1) / 2; }
Weight column_sum_B(int n, int m) { return static_cast<Weight>(m) * n * n - 4 * static_cast<Weight>(m) + 2; }
Weight column_sum_C(int n, int m) { return static_cast<Weight>(m) * n * n + 4 * static_cast<Weight>(m) + n - 2; }
Weight column_sum_magic(int n, int m) { return column_sum_A(n, m); }

std::string dump_rectangle(const RectangularArray& r) {
  std::ostringstream out;
  out << r.rows() << ' ' << r.cols() << ' ' << r.offset() << '\n';
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < r.cols(); ++j) out << (j ? " " : "") << r.at(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace ldal
