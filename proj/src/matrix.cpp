// SPDX-License-Identifier: MIT
#include "tmt/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace tmt {

Mat::Mat(const Field& f, int rows, int cols) : f_(f), rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0, errc::dimension_mismatch, "negative dimension");
  a_.assign(static_cast<size_t>(rows) * cols, 0);
}

Mat::Mat(const Field& f, const std::vector<std::vector<long long>>& entries) : f_(f) {
  rows_ = static_cast<int>(entries.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(entries[0].size());
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : entries) {
    require(static_cast<int>(row.size()) == cols_, errc::dimension_mismatch, "ragged rows");
    for (long long v : row) a_.push_back(f_.canon(v));
  }
}

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<std::vector<int>>& rows, int cols) {
  Mat m(f, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    require(static_cast<int>(rows[i].size()) == cols, errc::dimension_mismatch, "ragged rows");
    for (int j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::vector<int> Mat::row(int r) const {
  return std::vector<int>(a_.begin() + static_cast<size_t>(r) * cols_,
                          a_.begin() + static_cast<size_t>(r + 1) * cols_);
}

bool Mat::row_is_zero(int r) const {
  for (int c = 0; c < cols_; ++c)
    if (at(r, c) != 0) return false;
  return true;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](int v) { return v == 0; });
}

void Mat::swap_rows(int r1, int r2) {
  if (r1 == r2) return;
  for (int c = 0; c < cols_; ++c) {
    std::swap(a_[static_cast<size_t>(r1) * cols_ + c], a_[static_cast<size_t>(r2) * cols_ + c]);
  }
}

void Mat::scale_row(int r, int s) {
  for (int c = 0; c < cols_; ++c) set(r, c, f_.mul(at(r, c), s));
}

void Mat::axpy_row(int dst, int src, int s) {
  for (int c = 0; c < cols_; ++c) set(dst, c, f_.add(at(dst, c), f_.mul(s, at(src, c))));
}

bool Mat::operator==(const Mat& o) const {
  return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string Mat::to_text() const {
  std::ostringstream os;
  os << f_.p() << ' ' << rows_ << ' ' << cols_ << '\n';
  os << format_rows();
  return os.str();
}

std::string Mat::format_rows() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << at(r, c);
    }
    os << '\n';
  }
  return os.str();
}

Mat mat_from_text(const std::string& text) {
  std::istringstream is(text);
  long long p = 0, r = -1, c = -1;
  if (!(is >> p >> r >> c)) fail(errc::parse_error, "expected header 'p r c'");
  if (p < 2 || p > 251) fail(errc::parse_error, "modulus out of range in header");
  if (r < 0 || c < 0 || r > 4096 || c > 4096) fail(errc::parse_error, "bad dimensions in header");
  Field f(static_cast<int>(p));
  Mat m(f, static_cast<int>(r), static_cast<int>(c));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      long long v;
      if (!(is >> v)) fail(errc::parse_error, "expected " + std::to_string(r * c) + " entries");
      m.set(i, j, v);
    }
  }
  long long extra;
  if (is >> extra) fail(errc::parse_error, "trailing data after matrix entries");
  return m;
}

namespace {

void check_same_field(const Mat& a, const Mat& b) {
  require(a.field() == b.field(), errc::dimension_mismatch, "mixed fields");
}

}  // namespace

Mat multiply(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  require(a.cols() == b.rows(), errc::dimension_mismatch,
          "multiply: " + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
  const Field& f = a.field();
  Mat out(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      int aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out.set(i, j, f.add(out.at(i, j), f.mul(aik, b.at(k, j))));
      }
    }
  }
  return out;
}

Mat transpose(const Mat& a) {
  Mat out(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(j, i, a.at(i, j));
  return out;
}

Mat stack(const Mat& top, const Mat& bottom) {
  check_same_field(top, bottom);
  require(top.cols() == bottom.cols(), errc::dimension_mismatch, "stack: column mismatch");
  Mat out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) out.set(i, j, top.at(i, j));
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < bottom.cols(); ++j) out.set(top.rows() + i, j, bottom.at(i, j));
  return out;
}

Mat augment(const Mat& left, const Mat& right) {
  check_same_field(left, right);
  require(left.rows() == right.rows(), errc::dimension_mismatch, "augment: row mismatch");
  Mat out(left.field(), left.rows(), left.cols() + right.cols());
  for (int i = 0; i < left.rows(); ++i) {
    for (int j = 0; j < left.cols(); ++j) out.set(i, j, left.at(i, j));
    for (int j = 0; j < right.cols(); ++j) out.set(i, left.cols() + j, right.at(i, j));
  }
  return out;
}

Mat add(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  require(a.rows() == b.rows() && a.cols() == b.cols(), errc::dimension_mismatch, "add: shape mismatch");
  Mat out(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.field().add(a.at(i, j), b.at(i, j)));
  return out;
}

Mat sub(const Mat& a, const Mat& b) { return add(a, neg(b)); }

Mat neg(const Mat& a) {
  Mat out(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.field().neg(a.at(i, j)));
  return out;
}

Mat scale(const Mat& a, int s) {
  Mat out(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.field().mul(a.at(i, j), s));
  return out;
}

Mat take_rows(const Mat& a, const std::vector<int>& rows) {
  Mat out(a.field(), static_cast<int>(rows.size()), a.cols());
  for (int i = 0; i < out.rows(); ++i) {
    require(rows[i] >= 0 && rows[i] < a.rows(), errc::out_of_range, "row index");
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(rows[i], j));
  }
  return out;
}

Mat take_cols(const Mat& a, const std::vector<int>& cols) {
  Mat out(a.field(), a.rows(), static_cast<int>(cols.size()));
  for (int j = 0; j < out.cols(); ++j) {
    require(cols[j] >= 0 && cols[j] < a.cols(), errc::out_of_range, "column index");
    for (int i = 0; i < a.rows(); ++i) out.set(i, j, a.at(i, cols[j]));
  }
  return out;
}

Mat submatrix(const Mat& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  return take_cols(take_rows(a, rows), cols);
}

Mat block(const Mat& a, int r0, int c0, int rr, int cc) {
  require(r0 >= 0 && c0 >= 0 && r0 + rr <= a.rows() && c0 + cc <= a.cols(), errc::out_of_range,
          "block out of bounds");
  Mat out(a.field(), rr, cc);
  for (int i = 0; i < rr; ++i)
    for (int j = 0; j < cc; ++j) out.set(i, j, a.at(r0 + i, c0 + j));
  return out;
}

namespace {

// In-place Gaussian elimination to left RREF; returns leading pivot columns.
std::vector<int> rref_left_inplace(Mat& m) {
  const Field& f = m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    m.swap_rows(r, pr);
    m.scale_row(r, f.inv(m.at(r, c)));
    for (int i = 0; i < m.rows(); ++i) {
      if (i != r && m.at(i, c) != 0) m.axpy_row(i, r, f.neg(m.at(i, c)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const Mat& a) {
  Mat m = a;
  return static_cast<int>(rref_left_inplace(m).size());
}

Mat rref_left(const Mat& a) {
  Mat m = a;
  rref_left_inplace(m);
  return m;
}

std::vector<int> pivots_left(const Mat& a) {
  Mat m = a;
  return rref_left_inplace(m);
}

Mat rref_right(const Mat& a) {
  // RREF of the column-reversed matrix, un-reversed; rows ordered by trailing
  // pivot column increasing, zero rows at the bottom.
  const int n = a.cols();
  Mat rev(a.field(), a.rows(), n);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < n; ++j) rev.set(i, j, a.at(i, n - 1 - j));
  std::vector<int> piv = rref_left_inplace(rev);
  Mat out(a.field(), a.rows(), n);
  const int k = static_cast<int>(piv.size());
  for (int i = 0; i < a.rows(); ++i) {
    // Reversing columns reverses the pivot order; flip nonzero rows so pivot
    // columns increase.
    int src = i < k ? k - 1 - i : i;
    for (int j = 0; j < n; ++j) out.set(i, j, rev.at(src, n - 1 - j));
  }
  return out;
}

std::vector<int> pivots_right(const Mat& a) {
  const int n = a.cols();
  Mat rev(a.field(), a.rows(), n);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < n; ++j) rev.set(i, j, a.at(i, n - 1 - j));
  std::vector<int> piv = rref_left_inplace(rev);
  std::vector<int> out;
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) out.push_back(n - 1 - *it);
  return out;
}

Mat null_space(const Mat& a) {
  const Field& f = a.field();
  const int n = a.cols();
  Mat m = a;
  std::vector<int> piv = rref_left_inplace(m);
  std::vector<bool> is_piv(n, false);
  for (int c : piv) is_piv[c] = true;
  Mat h(f, n - static_cast<int>(piv.size()), n);
  int hr = 0;
  for (int c = 0; c < n; ++c) {
    if (is_piv[c]) continue;
    // Basis vector: 1 at the free column, minus the reduced column above each
    // pivot.
    h.set(hr, c, 1);
    for (size_t pi = 0; pi < piv.size(); ++pi) h.set(hr, piv[pi], f.neg(m.at(static_cast<int>(pi), c)));
    ++hr;
  }
  return h;
}

Mat inverse(const Mat& a) {
  require(a.rows() == a.cols(), errc::not_square, "inverse of non-square matrix");
  const int n = a.rows();
  Mat work = augment(a, Mat::identity(a.field(), n));
  std::vector<int> piv = rref_left_inplace(work);
  require(static_cast<int>(piv.size()) == n && (n == 0 || piv[n - 1] == n - 1), errc::singular,
          "matrix is singular");
  return block(work, 0, n, n, n);
}

Mat permutation_mat(const Field& f, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Mat p(f, n, n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    require(perm[i] >= 0 && perm[i] < n && !seen[perm[i]], errc::out_of_range, "not a permutation");
    seen[perm[i]] = true;
    p.set(i, perm[i], 1);
  }
  return p;
}

Mat reversal_mat(const Field& f, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
  return permutation_mat(f, perm);
}

bool same_row_space(const Mat& a, const Mat& b) {
  if (a.field() != b.field() || a.cols() != b.cols()) return false;
  int ra = rank(a), rb = rank(b);
  return ra == rb && rank(stack(a, b)) == ra;
}

PivotProfile pivot_profile(const Mat& g, const Mat& h) {
  require(g.field() == h.field() && g.cols() == h.cols(), errc::not_orthogonal_pair,
          "G and H must share field and length");
  const int n = g.cols();
  require(multiply(g, transpose(h)).is_zero(), errc::not_orthogonal_pair, "G.H^T != 0");
  require(rank(g) == g.rows() && rank(h) == h.rows(), errc::not_orthogonal_pair,
          "G and H must have full row rank");
  require(g.rows() + h.rows() == n, errc::not_orthogonal_pair, "rank(G) + rank(H) != n");
  PivotProfile pp;
  pp.i0 = pivots_left(g);
  pp.i1 = pivots_right(g);
  std::vector<bool> in0(n, false), in1(n, false);
  for (int c : pp.i0) in0[c] = true;
  for (int c : pp.i1) in1[c] = true;
  for (int c = 0; c < n; ++c) {
    if (!in0[c]) pp.j0.push_back(c);
    if (!in1[c]) pp.j1.push_back(c);
  }
  require(pivots_left(h) == pp.j1, errc::not_orthogonal_pair, "H leading pivots != J1");
  require(pivots_right(h) == pp.j0, errc::not_orthogonal_pair, "H trailing pivots != J0");
  return pp;
}

}  // namespace tmt
