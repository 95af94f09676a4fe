// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "tmt/field.hpp"

namespace tmt {

// Dense rows x cols matrix over GF(p). Entries are canonical representatives.
// Empty matrices (0 rows) are legal values. Immutable use is the norm; the
// mutators exist for construction and for the elimination kernels.
class Mat {
 public:
  Mat(const Field& f, int rows, int cols);  // zero matrix
  Mat(const Field& f, const std::vector<std::vector<long long>>& entries);

  static Mat identity(const Field& f, int n);
  static Mat from_rows(const Field& f, const std::vector<std::vector<int>>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return f_; }

  int at(int r, int c) const {
    bounds(r, c);
    return a_[static_cast<size_t>(r) * cols_ + c];
  }
  void set(int r, int c, long long v) {
    bounds(r, c);
    a_[static_cast<size_t>(r) * cols_ + c] = f_.canon(v);
  }

  std::vector<int> row(int r) const;
  bool row_is_zero(int r) const;
  bool is_zero() const;

  void swap_rows(int r1, int r2);
  void scale_row(int r, int s);             // row r *= s
  void axpy_row(int dst, int src, int s);   // row dst += s * row src

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  // Text format shared with the CLI: "p r c" then r lines of c integers.
  std::string to_text() const;
  // Bare rows, space separated, no header.
  std::string format_rows() const;

 private:
  void bounds(int r, int c) const {
    require(r >= 0 && r < rows_ && c >= 0 && c < cols_, errc::out_of_range,
            "matrix index out of range");
  }

  Field f_;
  int rows_, cols_;
  std::vector<int> a_;
};

Mat mat_from_text(const std::string& text);  // parse_error on malformed input

Mat multiply(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat stack(const Mat& top, const Mat& bottom);     // vertical
Mat augment(const Mat& left, const Mat& right);   // horizontal
Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat neg(const Mat& a);
Mat scale(const Mat& a, int s);
Mat take_rows(const Mat& a, const std::vector<int>& rows);
Mat take_cols(const Mat& a, const std::vector<int>& cols);
Mat submatrix(const Mat& a, const std::vector<int>& rows, const std::vector<int>& cols);
Mat block(const Mat& a, int r0, int c0, int rr, int cc);

int rank(const Mat& a);
// Left/right reduced row echelon forms. Shape is preserved; zero rows sink to
// the bottom. rref_left puts the identity on the leading pivot columns,
// rref_right on the trailing pivot columns (rows ordered by pivot column).
Mat rref_left(const Mat& a);
Mat rref_right(const Mat& a);
std::vector<int> pivots_left(const Mat& a);   // leading pivot columns, sorted
std::vector<int> pivots_right(const Mat& a);  // trailing pivot columns, sorted
// Maximal orthogonal complement: full-row-rank H with a . H^T = 0 and
// rank(H) = cols - rank(a).
Mat null_space(const Mat& a);
Mat inverse(const Mat& a);  // Singular / NotSquare

// Permutation matrix P with P[i][perm[i]] = 1.
Mat permutation_mat(const Field& f, const std::vector<int>& perm);
// Reversal permutation (antidiagonal ones).
Mat reversal_mat(const Field& f, int n);
// True if row spaces coincide.
bool same_row_space(const Mat& a, const Mat& b);

// Leading/trailing pivot columns of G plus the complements J0/J1, which are
// the trailing/leading pivot columns of the orthogonal complement H.
struct PivotProfile {
  std::vector<int> i0, i1, j0, j1;
  bool operator==(const PivotProfile&) const = default;
};

// Cross-checks that H's leading pivots equal J1 and its trailing pivots J0;
// raises NotOrthogonalPair when G.H^T != 0 or ranks do not complement.
PivotProfile pivot_profile(const Mat& g, const Mat& h);

}  // namespace tmt
