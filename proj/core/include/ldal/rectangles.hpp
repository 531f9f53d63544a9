#pragma once

#include <string>
#include <vector>

#include "ldal/graph.hpp"

namespace ldal {

/// n x m integer array whose entries are meant to permute
/// {offset+1 .. offset+n*m}. Indices are 0-based in code.
class RectangularArray {
 public:
  RectangularArray() = default;
  RectangularArray(int rows, int cols, std::vector<Weight> entries, Weight offset = 0);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Weight offset() const noexcept { return offset_; }
  Weight at(int i, int j) const { return entries_.at(static_cast<std::size_t>(i) * cols_ + j); }
  const std::vector<Weight>& entries() const noexcept { return entries_; }

  /// Every entry plus k; offset moves with it.
  RectangularArray shifted(Weight k) const;

  /// True iff the entries permute {offset+1 .. offset+rows*cols}.
  bool is_range_permutation() const;

  /// Marked for the 1 x m magic case, whose columns cannot all agree.
  bool degenerate() const noexcept { return degenerate_; }
  void mark_degenerate() noexcept { degenerate_ = true; }

  bool operator==(const RectangularArray& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && offset_ == o.offset_ && entries_ == o.entries_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  Weight offset_ = 0;
  std::vector<Weight> entries_;
  bool degenerate_ = false;
};

std::vector<Weight> column_sums(const RectangularArray& r);

/// True iff all entries of the arrays together permute {1 .. total size}.
bool jointly_cover(const std::vector<const RectangularArray*>& parts);

/// Odd rows read left to right, even rows right to left. n even, n >= 2, m >= 1.
RectangularArray build_matrix_A(int n, int m);
/// Together B and C permute {1..2nm}. n odd, n >= 3, m >= 1.
RectangularArray build_matrix_B(int n, int m);
RectangularArray build_matrix_C(int n, int m);
/// Equal column sums n(nm+1)/2 on {1..nm}; n, m odd. n = 1 with m > 1 is
/// allowed but flagged degenerate.
RectangularArray build_magic_rectangle(int n, int m);

/// Column sums the builders promise.
Weight column_sum_A(int n, int m);
Weight column_sum_B(int n, int m);
Weight column_sum_C(int n, int m);
Weight column_sum_magic(int n, int m);

/// "n m offset" header, then one line per row.
std::string dump_rectangle(const RectangularArray& r);

}  // namespace ldal
