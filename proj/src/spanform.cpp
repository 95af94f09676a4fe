// SPDX-License-Identifier: MIT
#include "tmt/spanform.hpp"

#include <algorithm>
#include <numeric>

namespace tmt {

int MsfReport::spanlength() const {
  int s = 0;
  for (const ConvSpan& sp : spans) s += sp.length();
  return s;
}

ConvSpan conv_span(const std::vector<int>& v) {
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (v[i] != 0) {
      if (first < 0) first = i;
      last = i;
    }
  }
  require(first >= 0, errc::zero_vector, "span of the zero vector is undefined");
  return ConvSpan{first, last};
}

ConvSpan conv_span_row(const Mat& m, int r) {
  try {
    return conv_span(m.row(r));
  } catch (const error&) {
    fail(errc::zero_row, "zero row " + std::to_string(r));
  }
}

bool is_msf(const Mat& m) {
  std::vector<bool> starts(m.cols(), false), ends(m.cols(), false);
  for (int r = 0; r < m.rows(); ++r) {
    ConvSpan s = conv_span_row(m, r);
    if (starts[s.i0] || ends[s.i1]) return false;
    starts[s.i0] = true;
    ends[s.i1] = true;
  }
  return true;
}

namespace {

struct WorkRows {
  const Field f;
  std::vector<std::vector<int>> rows;
  std::vector<ConvSpan> spans;

  void respan(int r) { spans[r] = conv_span(rows[r]); }

  // row dst -= (dst[c] / src[c]) * src, clearing position c.
  void clear_at(int dst, int src, int c) {
    int factor = f.div(rows[dst][c], rows[src][c]);
    for (size_t j = 0; j < rows[dst].size(); ++j)
      rows[dst][j] = f.sub(rows[dst][j], f.mul(factor, rows[src][j]));
    respan(dst);
  }
};

// One greedy pass: find two rows sharing a start or an end and shorten one of
// them; returns false at the LR fixed point.
bool greedy_step(WorkRows& w) {
  const int k = static_cast<int>(w.rows.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const ConvSpan a = w.spans[i], b = w.spans[j];
      if (a.i0 == b.i0) {
        // Shared start: shorten the row with the larger end from the left;
        // its end is untouched, so total spanlength strictly drops.
        int victim = a.i1 >= b.i1 ? i : j;
        int other = victim == i ? j : i;
        w.clear_at(victim, other, a.i0);
        return true;
      }
      if (a.i1 == b.i1) {
        // Shared end: shorten the row with the smaller start from the right.
        int victim = a.i0 <= b.i0 ? i : j;
        int other = victim == i ? j : i;
        w.clear_at(victim, other, a.i1);
        return true;
      }
    }
  }
  return false;
}

struct OrderedRows {
  std::vector<std::vector<int>> rows;
  std::vector<ConvSpan> spans;
};

OrderedRows msf_rows(const Mat& m) {
  require(rank(m) == m.rows(), errc::rank_deficient, "input must have full row rank");
  WorkRows w{m.field(), {}, {}};
  for (int r = 0; r < m.rows(); ++r) {
    w.rows.push_back(m.row(r));
    w.spans.push_back(conv_span_row(m, r));
  }
  while (greedy_step(w)) {
  }
  OrderedRows out{std::move(w.rows), std::move(w.spans)};
  return out;
}

void sort_rows(OrderedRows& o, bool by_start) {
  std::vector<int> idx(o.rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return by_start ? o.spans[a].i0 < o.spans[b].i0 : o.spans[a].i1 < o.spans[b].i1;
  });
  OrderedRows s;
  for (int i : idx) {
    s.rows.push_back(o.rows[i]);
    s.spans.push_back(o.spans[i]);
  }
  o = std::move(s);
}

int index_of(const std::vector<int>& sorted, int value) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin());
}

// Assemble the report factors from ordered MSF rows.
MsfReport make_report(const Field& f, const OrderedRows& o, int cols, MsfFlavor flavor) {
  const int k = static_cast<int>(o.rows.size());
  Mat matrix = Mat::from_rows(f, o.rows, cols);
  std::vector<int> i0, i1;
  for (const ConvSpan& s : o.spans) {
    i0.push_back(s.i0);
    i1.push_back(s.i1);
  }
  std::sort(i0.begin(), i0.end());
  std::sort(i1.begin(), i1.end());
  Mat lead = take_cols(matrix, i0);
  Mat trail = take_cols(matrix, i1);
  if (flavor == MsfFlavor::right_left_reduced) {
    // Rows ordered by end: the trailing minor is lower triangular as-is; the
    // leading minor factors as P.U.
    std::vector<int> perm(k);
    for (int r = 0; r < k; ++r) perm[r] = index_of(i0, o.spans[r].i0);
    Mat p = permutation_mat(f, perm);
    Mat u = multiply(transpose(p), lead);
    return MsfReport{matrix, o.spans, u, p, trail, flavor, i0, i1};
  }
  // Left-ordered (unreduced or reduced): the leading minor is upper
  // triangular as-is; the trailing minor factors as P.L.
  std::vector<int> perm(k);
  for (int r = 0; r < k; ++r) perm[r] = index_of(i1, o.spans[r].i1);
  Mat p = permutation_mat(f, perm);
  Mat l = multiply(transpose(p), trail);
  return MsfReport{matrix, o.spans, lead, p, l, flavor, i0, i1};
}

}  // namespace

MsfReport to_msf(const Mat& m) {
  OrderedRows o = msf_rows(m);
  sort_rows(o, /*by_start=*/true);
  return make_report(m.field(), o, m.cols(), MsfFlavor::unreduced);
}

MsfReport reduce_msf(const Mat& m, MsfFlavor flavor) {
  require(flavor != MsfFlavor::unreduced, errc::out_of_range, "flavor must name a reduced form");
  const Field f = m.field();
  OrderedRows o = msf_rows(m);
  const int k = static_cast<int>(o.rows.size());
  WorkRows w{f, std::move(o.rows), std::move(o.spans)};
  if (flavor == MsfFlavor::left_right_reduced) {
    OrderedRows tmp{std::move(w.rows), std::move(w.spans)};
    sort_rows(tmp, /*by_start=*/true);
    w.rows = std::move(tmp.rows);
    w.spans = std::move(tmp.spans);
    // Clear north of each trailing pivot, last column first. Only rows that
    // start earlier than the owner can be nonzero there, and the subtraction
    // stays inside their spans.
    std::vector<int> by_end(k);
    std::iota(by_end.begin(), by_end.end(), 0);
    std::sort(by_end.begin(), by_end.end(), [&](int a, int b) { return w.spans[a].i1 > w.spans[b].i1; });
    for (int owner : by_end) {
      int c = w.spans[owner].i1;
      for (int r = 0; r < k; ++r) {
        if (r != owner && w.rows[r][c] != 0 && w.spans[r].i0 < w.spans[owner].i0) w.clear_at(r, owner, c);
      }
    }
    for (int r = 0; r < k; ++r) {
      int t = w.rows[r][w.spans[r].i1];
      if (t != 1) {
        for (int& v : w.rows[r]) v = f.div(v, t);
      }
    }
  } else {
    OrderedRows tmp{std::move(w.rows), std::move(w.spans)};
    sort_rows(tmp, /*by_start=*/false);
    w.rows = std::move(tmp.rows);
    w.spans = std::move(tmp.spans);
    // Clear south of each leading pivot, first column first; only rows that
    // end later can be nonzero there.
    std::vector<int> by_start(k);
    std::iota(by_start.begin(), by_start.end(), 0);
    std::sort(by_start.begin(), by_start.end(), [&](int a, int b) { return w.spans[a].i0 < w.spans[b].i0; });
    for (int owner : by_start) {
      int c = w.spans[owner].i0;
      for (int r = 0; r < k; ++r) {
        if (r != owner && w.rows[r][c] != 0 && w.spans[r].i1 > w.spans[owner].i1) w.clear_at(r, owner, c);
      }
    }
    for (int r = 0; r < k; ++r) {
      int t = w.rows[r][w.spans[r].i0];
      if (t != 1) {
        for (int& v : w.rows[r]) v = f.div(v, t);
      }
    }
  }
  OrderedRows done{std::move(w.rows), std::move(w.spans)};
  for (size_t r = 0; r < done.rows.size(); ++r) done.spans[r] = conv_span(done.rows[r]);
  return make_report(f, done, m.cols(), flavor);
}

Lpu lpu(const Mat& a) {
  require(a.rows() == a.cols(), errc::not_square, "LPU needs a square matrix");
  const Field& f = a.field();
  const int n = a.rows();
  Mat m = a;
  Mat l = Mat::identity(f, n);
  // Eliminate columns left to right with strictly downward row operations:
  // among rows currently leading at column j the topmost survives.
  for (int j = 0; j < n; ++j) {
    int owner = -1;
    for (int r = 0; r < n; ++r) {
      int lead = -1;
      for (int c = 0; c < n; ++c) {
        if (m.at(r, c) != 0) {
          lead = c;
          break;
        }
      }
      require(lead >= 0, errc::singular, "matrix is singular");
      if (lead != j) continue;
      if (owner < 0) {
        owner = r;
        continue;
      }
      int factor = f.div(m.at(r, j), m.at(owner, j));
      m.axpy_row(r, owner, f.neg(factor));
      // A = L.M is preserved: column `owner` of L gains factor * column r.
      for (int i = 0; i < n; ++i) l.set(i, owner, f.add(l.at(i, owner), f.mul(factor, l.at(i, r))));
    }
  }
  // M = P.U with P read off the leading positions.
  std::vector<int> lead(n);
  for (int r = 0; r < n; ++r) {
    int c = 0;
    while (c < n && m.at(r, c) == 0) ++c;
    require(c < n, errc::singular, "matrix is singular");
    lead[r] = c;
  }
  std::vector<int> sorted = lead;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> perm(n);
  for (int r = 0; r < n; ++r)
    perm[r] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), lead[r]) - sorted.begin());
  Mat p = permutation_mat(f, perm);
  Mat u = multiply(transpose(p), m);
  require(multiply(l, multiply(p, u)) == a, errc::singular, "LPU internal check failed");
  return Lpu{l, p, u};
}

Mat bruhat_corner(const Mat& a, Corner corner) {
  require(a.rows() == a.cols(), errc::not_square, "Bruhat corner needs a square matrix");
  require(rank(a) == a.rows(), errc::singular, "matrix is singular");
  const Field& f = a.field();
  Mat r = reversal_mat(f, a.rows());
  switch (corner) {
    case Corner::nw:
      return lpu(a).p;
    case Corner::ne:
      return multiply(lpu(multiply(a, r)).p, r);
    case Corner::sw:
      return multiply(r, lpu(multiply(r, a)).p);
    case Corner::se:
      return multiply(r, multiply(lpu(multiply(r, multiply(a, r))).p, r));
  }
  fail(errc::out_of_range, "bad corner");
}

}  // namespace tmt
