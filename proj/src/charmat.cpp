// SPDX-License-Identifier: MIT
#include "tmt/charmat.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tmt/error.hpp"

namespace tmt {

std::string circ_span_text(const CircSpan& s) {
  std::ostringstream os;
  os << "(" << s.i << ", " << s.j << "]";
  return os.str();
}

namespace {

// Previous nonzero position walking backward circularly from i-1; lands on i
// itself only for a singleton row.
int back_walk(const Mat& m, int row, int i) {
  const int n = m.cols();
  for (int step = 1; step <= n; ++step) {
    const int p = ((i - step) % n + n) % n;
    if (m.at(row, p) != 0) return p;
  }
  return i;
}

// Next nonzero position walking forward circularly from j+1.
int fwd_walk(const Mat& m, int row, int j) {
  const int n = m.cols();
  for (int step = 1; step <= n; ++step) {
    const int p = (j + step) % n;
    if (m.at(row, p) != 0) return p;
  }
  return j;
}

bool is_permutation(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<bool> seen(n, false);
  for (int x : v) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

// Profile induced by the span bijection: I0 = conventional starts, J0 = wrapped
// starts, I1/J1 = their images under sigma.
PivotProfile profile_from_sigma(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  PivotProfile pp;
  for (int i = 0; i < n; ++i) {
    if (sigma[i] >= i)
      pp.i0.push_back(i);
    else
      pp.j0.push_back(i);
  }
  for (int i : pp.i0) pp.i1.push_back(sigma[i]);
  for (int j : pp.j0) pp.j1.push_back(sigma[j]);
  std::sort(pp.i1.begin(), pp.i1.end());
  std::sort(pp.j1.begin(), pp.j1.end());
  return pp;
}

bool same_profile(const PivotProfile& a, const PivotProfile& b) {
  return a.i0 == b.i0 && a.i1 == b.i1 && a.j0 == b.j0 && a.j1 == b.j1;
}

bool has_zero_column(const Mat& m) {
  for (int j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < m.rows() && zero; ++i) zero = m.at(i, j) == 0;
    if (zero) return true;
  }
  return false;
}

void require_domain(const Mat& g, const Mat& h) {
  require(!has_zero_column(g), errc::not_characteristic,
          "the dual code contains a unit vector; no characteristic matrix exists");
  require(!has_zero_column(h), errc::not_characteristic,
          "the code contains a unit vector; no characteristic matrix exists");
}

// Positional split around the main diagonal: X = X0 + X1 with X0 upper
// triangular including the diagonal, X1 strictly lower.
void split_x(const Mat& x, Mat& x0, Mat& x1) {
  const int n = x.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j >= i)
        x0.set(i, j, x.at(i, j));
      else
        x1.set(i, j, x.at(i, j));
    }
}

// Y = Y1 + Y0 with Y1 strictly upper, Y0 lower including the diagonal.
void split_y(const Mat& y, Mat& y1, Mat& y0) {
  const int n = y.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j > i)
        y1.set(i, j, y.at(i, j));
      else
        y0.set(i, j, y.at(i, j));
    }
}

std::vector<CircSpan> spans_x_from_sigma(int n, const std::vector<int>& sigma) {
  std::vector<CircSpan> out;
  for (int i = 0; i < n; ++i) out.push_back(CircSpan{n, i, sigma[i]});
  return out;
}

std::vector<CircSpan> spans_y_from_sigma(int n, const std::vector<int>& sigma) {
  std::vector<CircSpan> out;
  for (int j = 0; j < n; ++j) out.push_back(CircSpan{n, sigma[j], j});
  return out;
}

long long total_length(const std::vector<CircSpan>& spans) {
  long long s = 0;
  for (const auto& sp : spans) s += sp.length();
  return s;
}

// k == n: X is the identity and the companion is the formal Y = -(X0^T)^{-1}.
CharPair full_space_pair(const Field& f, int n) {
  Mat x = Mat::identity(f, n);
  Mat y = neg(x);
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  PivotProfile profile = pivot_profile(x, Mat(f, 0, n));
  return CharPair{f,
                  n,
                  n,
                  x,
                  x,
                  Mat(f, n, n),
                  y,
                  Mat(f, n, n),
                  y,
                  spans_x_from_sigma(n, sigma),
                  spans_y_from_sigma(n, sigma),
                  sigma,
                  profile,
                  true};
}

void check_generator(const Mat& g) {
  require(g.rows() >= 1, errc::dimension_mismatch, "generator must have at least one row");
  require(g.rows() <= g.cols(), errc::dimension_mismatch, "generator has more rows than columns");
  require(rank(g) == g.rows(), errc::rank_deficient, "generator does not have full row rank");
}

}  // namespace

std::vector<CircSpan> circ_spans(const Field& f, const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  Mat m(f, 1, n);
  bool nonzero = false;
  for (int j = 0; j < n; ++j) {
    m.set(0, j, v[j]);
    nonzero = nonzero || m.at(0, j) != 0;
  }
  require(nonzero, errc::zero_vector, "zero vector has no circular span");
  std::vector<CircSpan> out;
  for (int i = 0; i < n; ++i) {
    if (m.at(0, i) == 0) continue;
    out.push_back(CircSpan{n, i, back_walk(m, 0, i)});
  }
  return out;
}

bool is_circ_span(const Field& f, const std::vector<int>& v, const CircSpan& s) {
  const int n = static_cast<int>(v.size());
  if (s.n != n || s.i < 0 || s.i >= n || s.j < 0 || s.j >= n) return false;
  Mat m(f, 1, n);
  for (int j = 0; j < n; ++j) m.set(0, j, v[j]);
  if (m.at(0, s.i) == 0 || m.at(0, s.j) == 0) return false;
  for (int p = 0; p < n; ++p) {
    if (m.at(0, p) != 0 && !s.contains(p)) return false;
  }
  return true;
}

Mat CharPair::g01() const { return take_rows(x, profile.i0); }

Mat CharPair::h10() const { return take_rows(y, profile.j0); }

CharPair char_pair_reduced(const Mat& g) {
  const Field f = g.field();
  const int n = g.cols();
  const int k = g.rows();
  check_generator(g);
  if (k == n) return full_space_pair(f, n);
  const Mat h = null_space(g);
  require_domain(g, h);

  // X rows are the shortest-span band rows of [(-I | I); (0 | G)] in
  // left-right reduced minimal span form.
  Mat sx(f, n + k, 2 * n);
  for (int i = 0; i < n; ++i) {
    sx.set(i, i, f.neg(1));
    sx.set(i, n + i, 1);
  }
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) sx.set(n + r, n + c, g.at(r, c));
  const MsfReport rx = reduce_msf(sx, MsfFlavor::left_right_reduced);

  Mat x0(f, n, n), x1(f, n, n);
  std::vector<int> sigma(n, -1);
  for (int i = 0; i < n; ++i) {
    const ConvSpan sp = rx.spans[i];
    require(sp.i0 == i, errc::not_characteristic, "stack reduction lost the band structure");
    require(sp.i1 < n + i, errc::not_characteristic,
            "band row spans a full window; no characteristic matrix exists");
    for (int c = 0; c < n; ++c) {
      x0.set(i, c, rx.matrix.at(i, c));
      x1.set(i, c, rx.matrix.at(i, n + c));
    }
    sigma[i] = sp.i1 % n;
  }
  Mat g01x(f, k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) g01x.set(r, c, rx.matrix.at(n + r, n + c));

  // Y rows likewise from [(H | 0); (I | -I)] in right-left reduced form.
  const int m = n - k;
  Mat sy(f, m + n, 2 * n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) sy.set(r, c, h.at(r, c));
  for (int j = 0; j < n; ++j) {
    sy.set(m + j, j, 1);
    sy.set(m + j, n + j, f.neg(1));
  }
  const MsfReport ry = reduce_msf(sy, MsfFlavor::right_left_reduced);

  Mat y0(f, n, n), y1(f, n, n);
  std::vector<int> sigy(n, -1);
  Mat h10x(f, m, n);
  for (int r = 0; r < m; ++r) {
    require(ry.spans[r].i1 < n, errc::not_characteristic, "stack reduction lost the band structure");
    for (int c = 0; c < n; ++c) h10x.set(r, c, ry.matrix.at(r, c));
  }
  for (int j = 0; j < n; ++j) {
    const int row = m + j;
    const ConvSpan sp = ry.spans[row];
    require(sp.i1 == n + j, errc::not_characteristic, "stack reduction lost the band structure");
    require(sp.i0 > j, errc::not_characteristic,
            "band row spans a full window; no characteristic matrix exists");
    for (int c = 0; c < n; ++c) {
      y1.set(j, c, ry.matrix.at(row, c));
      y0.set(j, c, ry.matrix.at(row, n + c));
    }
    sigy[j] = sp.i0 % n;
  }
  require(sigy == sigma, errc::not_characteristic, "span bijections of the two stacks disagree");

  const PivotProfile profile = pivot_profile(g01x, h10x);
  require(same_profile(profile, profile_from_sigma(sigma)), errc::not_characteristic,
          "pivot profile disagrees with the span bijection");
  return CharPair{f,
                  n,
                  k,
                  add(x0, x1),
                  x0,
                  x1,
                  add(y1, y0),
                  y1,
                  y0,
                  spans_x_from_sigma(n, sigma),
                  spans_y_from_sigma(n, sigma),
                  sigma,
                  profile,
                  true};
}

CharPair char_pair_direct(const Mat& g) {
  const Field f = g.field();
  const int n = g.cols();
  const int k = g.rows();
  check_generator(g);
  if (k == n) return full_space_pair(f, n);
  const Mat h = null_space(g);
  require_domain(g, h);
  const int m = n - k;

  const Mat g01m = reduce_msf(g, MsfFlavor::left_right_reduced).matrix;
  const Mat h10m = reduce_msf(h, MsfFlavor::right_left_reduced).matrix;
  const PivotProfile profile = pivot_profile(g01m, h10m);

  // Wrapped X rows solve H'_0 H^T = -I on the J0 columns and H'_1 H^T = I on
  // the J1 columns; H10 restricted to J0 is lower triangular, so the solution
  // scatters an upper triangular inverse back onto J0.
  const Mat w0 = neg(inverse(transpose(take_cols(h10m, profile.j0))));
  const Mat w1 = inverse(transpose(take_cols(h10m, profile.j1)));
  Mat x0(f, n, n), x1(f, n, n);
  std::vector<int> sigma(n, -1);
  for (int r = 0; r < k; ++r) {
    const int i = profile.i0[r];
    for (int c = 0; c < n; ++c) x0.set(i, c, g01m.at(r, c));
    sigma[i] = conv_span_row(g01m, r).i1;
  }
  for (int r = 0; r < m; ++r) {
    const int i = profile.j0[r];
    for (int t = 0; t < m; ++t) x0.set(i, profile.j0[t], w0.at(r, t));
    for (int t = 0; t < m; ++t) x1.set(i, profile.j1[t], w1.at(r, t));
    for (int c = 0; c < i; ++c)
      if (x1.at(i, c) != 0) sigma[i] = c;
    require(sigma[i] >= 0, errc::not_characteristic, "wrapped row lost its trailing pivot");
    for (int c = i; c < n; ++c)
      require(x1.at(i, c) == 0, errc::not_characteristic, "wrapped row extends past its start");
  }

  // Dually for Y: G'_0 G^T = -I on I0, G'_1 G^T = I on I1.
  const Mat v0 = neg(inverse(transpose(take_cols(g01m, profile.i0))));
  const Mat v1 = inverse(transpose(take_cols(g01m, profile.i1)));
  Mat y0(f, n, n), y1(f, n, n);
  std::vector<int> sigy(n, -1);
  for (int r = 0; r < m; ++r) {
    const int j = profile.j0[r];
    for (int c = 0; c < n; ++c) y0.set(j, c, h10m.at(r, c));
    sigy[j] = conv_span_row(h10m, r).i0;
  }
  for (int r = 0; r < k; ++r) {
    const int j = profile.i0[r];
    for (int t = 0; t < k; ++t) y0.set(j, profile.i0[t], v0.at(r, t));
    for (int t = 0; t < k; ++t) y1.set(j, profile.i1[t], v1.at(r, t));
    for (int c = n - 1; c > j; --c)
      if (y1.at(j, c) != 0) sigy[j] = c;
    require(sigy[j] >= 0, errc::not_characteristic, "wrapped row lost its leading pivot");
    for (int c = 0; c <= j; ++c)
      require(y1.at(j, c) == 0, errc::not_characteristic, "wrapped row extends past its end");
  }
  require(sigy == sigma, errc::not_characteristic, "span bijections of the two sides disagree");
  require(same_profile(profile, profile_from_sigma(sigma)), errc::not_characteristic,
          "pivot profile disagrees with the span bijection");
  // The scatter solves give a semi-reduced pair: same spans as the reduced
  // pair, but the interior entries may differ. Record honestly whether this
  // instance is already the reduced one.
  const Mat ux = augment(x0, x1);
  const Mat uy = augment(y1, y0);
  const bool red = reduce_msf(ux, MsfFlavor::left_right_reduced).matrix == ux &&
                   reduce_msf(uy, MsfFlavor::right_left_reduced).matrix == uy;
  return CharPair{f,
                  n,
                  k,
                  add(x0, x1),
                  x0,
                  x1,
                  add(y1, y0),
                  y1,
                  y0,
                  spans_x_from_sigma(n, sigma),
                  spans_y_from_sigma(n, sigma),
                  sigma,
                  profile,
                  red};
}

CharPair assemble_pair(const Field& f, const Mat& x, const Mat& y) {
  const int n = x.rows();
  require(x.field() == f && y.field() == f, errc::dimension_mismatch, "field mismatch");
  require(x.cols() == n && y.rows() == n && y.cols() == n && n >= 1, errc::dimension_mismatch,
          "X and Y must be square of the same size");
  for (int i = 0; i < n; ++i) {
    require(x.at(i, i) != 0, errc::not_characteristic, "X diagonal must be nonzero");
    require(y.at(i, i) != 0, errc::not_characteristic, "Y diagonal must be nonzero");
  }
  std::vector<int> sigma(n), sigy(n);
  for (int i = 0; i < n; ++i) sigma[i] = back_walk(x, i, i);
  for (int j = 0; j < n; ++j) sigy[j] = fwd_walk(y, j, j);
  require(is_permutation(sigma), errc::not_characteristic, "span ends of X collide");
  require(sigy == sigma, errc::not_characteristic, "Y spans do not match the X span bijection");
  Mat x0(f, n, n), x1(f, n, n), y0(f, n, n), y1(f, n, n);
  split_x(x, x0, x1);
  split_y(y, y1, y0);
  const PivotProfile profile = profile_from_sigma(sigma);
  return CharPair{f,
                  n,
                  static_cast<int>(profile.i0.size()),
                  x,
                  x0,
                  x1,
                  y,
                  y1,
                  y0,
                  spans_x_from_sigma(n, sigma),
                  spans_y_from_sigma(n, sigma),
                  sigma,
                  profile,
                  false};
}

CharPair make_pair_checked(const Field& f, const Mat& x, const Mat& y) {
  CharPair pr = assemble_pair(f, x, y);
  const int n = pr.n;
  const int k = pr.k;
  require(multiply(pr.x, transpose(pr.y)).is_zero(), errc::not_orthogonal_pair, "X Y^T != 0");
  require(rank(pr.x) == k, errc::not_characteristic, "X rank does not match its conventional row count");
  require(rank(take_rows(pr.x, pr.profile.i0)) == k, errc::not_characteristic,
          "conventional rows of X are dependent");
  require(rank(pr.y) == n - k, errc::not_characteristic,
          "Y rank does not match its conventional row count");
  require(rank(take_rows(pr.y, pr.profile.j0)) == n - k, errc::not_characteristic,
          "conventional rows of Y are dependent");
  require(total_length(pr.spans_x) == static_cast<long long>(n - k) * n, errc::not_characteristic,
          "X spanlength is not minimal");
  require(total_length(pr.spans_y) == static_cast<long long>(k) * n, errc::not_characteristic,
          "Y spanlength is not minimal");
  const CharPair rebuilt = char_pair_reduced(take_rows(pr.x, pr.profile.i0));
  pr.reduced = rebuilt.x == pr.x && rebuilt.y == pr.y;
  return pr;
}

Report verify_characteristic(const Mat& x, const Mat& g) {
  const int n = g.cols();
  require(x.rows() == n && x.cols() == n && x.field() == g.field(), errc::dimension_mismatch,
          "X must be square with the code length");
  Report rep;
  bool diag = true;
  for (int i = 0; i < n; ++i) diag = diag && x.at(i, i) != 0;
  rep.add("diagonal", diag, "row i is nonzero at position i");
  rep.add("rows_in_code", multiply(x, transpose(null_space(g))).is_zero(),
          "every row lies in the code");
  const int k = rank(g);
  rep.add("rank", rank(x) == k, "rank equals the code dimension");
  bool nonzero_rows = true;
  std::vector<int> ends(n, -1);
  for (int i = 0; i < n && nonzero_rows; ++i) {
    if (x.row_is_zero(i)) {
      nonzero_rows = false;
      break;
    }
    ends[i] = x.at(i, i) != 0 ? back_walk(x, i, i) : conv_span_row(x, i).i1;
  }
  const bool distinct = nonzero_rows && is_permutation(ends);
  rep.add("ends_distinct", distinct, "span ends form a permutation");
  long long total = 0;
  if (nonzero_rows && diag) {
    for (int i = 0; i < n; ++i) total += CircSpan{n, i, ends[i]}.length();
  }
  const long long want = static_cast<long long>(n - k) * n;
  std::ostringstream os;
  os << total << " vs |J1| n = " << want;
  rep.add("spanlength", nonzero_rows && diag && total == want, os.str());
  return rep;
}

CharPair dual_char(const Mat& x) {
  const Field f = x.field();
  const int n = x.rows();
  require(x.cols() == n && n >= 1, errc::dimension_mismatch, "X must be square");
  for (int i = 0; i < n; ++i)
    require(x.at(i, i) != 0, errc::not_characteristic, "X diagonal must be nonzero");
  Mat x0(f, n, n), x1(f, n, n);
  split_x(x, x0, x1);
  // The companion is forced: Y0 = -(X0^T)^{-1} and Y1^T = X0^{-1}(I + X1 X0^{-1}),
  // which must come out strictly lower triangular.
  const Mat x0i = inverse(x0);
  const Mat y0 = neg(transpose(x0i));
  const Mat z = multiply(x0i, add(Mat::identity(f, n), multiply(x1, x0i)));
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c)
      require(z.at(r, c) == 0, errc::not_characteristic, "forced Y1 is not strictly upper triangular");
  const Mat y1 = transpose(z);
  return make_pair_checked(f, x, add(y1, y0));
}

Report duality_report(const CharPair& pr) {
  const Field& f = pr.f;
  const int n = pr.n;
  const Mat eye = Mat::identity(f, n);
  const Mat d = multiply(pr.x0, transpose(pr.y1));
  const Mat e = multiply(pr.y0, transpose(pr.x1));
  Mat d0(f, n, n), e0(f, n, n);
  for (int i = 0; i < n; ++i) {
    d0.set(i, i, d.at(i, i));
    e0.set(i, i, e.at(i, i));
  }
  Report rep;
  rep.add("x_orth_y", multiply(pr.x, transpose(pr.y)).is_zero(), "X Y^T = 0");
  rep.add("yt_x", multiply(transpose(pr.y), pr.x).is_zero(), "Y^T X = 0");
  rep.add("x1t_y1", multiply(transpose(pr.x1), pr.y1).is_zero(), "X1^T Y1 = 0");
  rep.add("unit_mix", add(multiply(pr.x0, transpose(pr.y1)), multiply(pr.x1, transpose(pr.y0))) == eye,
          "X0 Y1^T + X1 Y0^T = I");
  rep.add("x0_y0", multiply(pr.x0, transpose(pr.y0)) == neg(eye), "X0 Y0^T = -I");
  rep.add("x1_y1", multiply(pr.x1, transpose(pr.y1)).is_zero(), "X1 Y1^T = 0");
  rep.add("d_idempotent", multiply(d, d) == d, "D^2 = D");
  rep.add("e_idempotent", multiply(e, e) == e, "E^2 = E");
  rep.add("d_et", multiply(d, transpose(e)).is_zero(), "D E^T = 0");
  rep.add("et_d", multiply(transpose(e), d).is_zero(), "E^T D = 0");
  rep.add("d_d0", multiply(d, d0) == d, "D D0 = D");
  rep.add("d0_d", multiply(d0, d) == d0, "D0 D = D0");
  rep.add("dt_y", multiply(transpose(d), pr.y).is_zero(), "D^T Y = 0");
  rep.add("e_e0", multiply(e, e0) == e, "E E0 = E");
  rep.add("e0_e", multiply(e0, e) == e0, "E0 E = E0");
  rep.add("et_x", multiply(transpose(e), pr.x).is_zero(), "E^T X = 0");
  rep.add("x_from_d", multiply(d, multiply(d0, pr.x)) == pr.x, "D D0 X = X");
  rep.add("d_plus_et", add(d, transpose(e)) == eye, "D + E^T = I");
  rep.add("x_spanlength",
          total_length(pr.spans_x) == static_cast<long long>(pr.profile.j1.size()) * n,
          "total X spanlength is |J1| n");
  rep.add("y_spanlength",
          total_length(pr.spans_y) == static_cast<long long>(pr.profile.i1.size()) * n,
          "total Y spanlength is |I1| n");
  if (pr.degenerate()) rep.add("degenerate", true, "k = n; the companion is formal");
  return rep;
}

Displacement displacement(const CharPair& pr) {
  const Field& f = pr.f;
  const int n = pr.n;
  const Mat mix = add(multiply(pr.x0, transpose(pr.y1)), multiply(pr.x1, transpose(pr.y0)));
  require(mix == Mat::identity(f, n), errc::not_in_duality, "X0 Y1^T + X1 Y0^T != I");
  Displacement out{multiply(pr.x0, transpose(pr.y1)), multiply(pr.y0, transpose(pr.x1)),
                   Mat(f, n, n), Mat(f, n, n)};
  for (int i = 0; i < n; ++i) {
    out.d0.set(i, i, out.d.at(i, i));
    out.e0.set(i, i, out.e.at(i, i));
  }
  return out;
}

CharPair shift_conjugate(const CharPair& pr) {
  const Field& f = pr.f;
  const int n = pr.n;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
  const Mat s = permutation_mat(f, perm);
  const Mat x = multiply(multiply(s, pr.x), transpose(s));
  const Mat y = multiply(multiply(s, pr.y), transpose(s));
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = (pr.sigma[(i + 1) % n] + n - 1) % n;
  Mat x0(f, n, n), x1(f, n, n), y0(f, n, n), y1(f, n, n);
  split_x(x, x0, x1);
  split_y(y, y1, y0);
  return CharPair{f,
                  n,
                  pr.k,
                  x,
                  x0,
                  x1,
                  y,
                  y1,
                  y0,
                  spans_x_from_sigma(n, sigma),
                  spans_y_from_sigma(n, sigma),
                  sigma,
                  profile_from_sigma(sigma),
                  pr.reduced};
}

Report shift_displacement_check(const CharPair& pr) {
  const Field& f = pr.f;
  const int n = pr.n;
  const CharPair sh = shift_conjugate(pr);
  const Displacement base = displacement(pr);
  const Displacement stepped = displacement(sh);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
  const Mat s = permutation_mat(f, perm);
  Mat xc(f, n, 1), yc(f, n, 1);
  for (int i = 0; i < n; ++i) {
    xc.set(i, 0, pr.x.at(i, 0));
    yc.set(i, 0, pr.y.at(i, 0));
  }
  const Mat lhs_d = sub(multiply(multiply(transpose(s), stepped.d), s), base.d);
  const Mat lhs_e = sub(multiply(multiply(transpose(s), stepped.e), s), base.e);
  Report rep;
  rep.add("d_step", lhs_d == multiply(xc, transpose(yc)), "S^T D(X^S) S - D(X) = x y^T");
  rep.add("e_step", lhs_e == neg(multiply(yc, transpose(xc))), "S^T E(X^S) S - E(X) = -y x^T");
  return rep;
}

Report transpose_check(const CharPair& pr) {
  const int n = pr.n;
  Report rep;
  const Mat xt = transpose(pr.x);
  std::vector<int> starts(n);
  for (int j = 0; j < n; ++j) starts[j] = fwd_walk(xt, j, j);
  rep.add("xt_right_characteristic", is_permutation(starts),
          "transpose span starts form a permutation");
  long long total = 0;
  for (int j = 0; j < n; ++j) total += CircSpan{n, starts[j], j}.length();
  const long long want = static_cast<long long>(pr.profile.j1.size()) * n;
  std::ostringstream os;
  os << total << " vs |J1| n = " << want;
  rep.add("xt_spanlength_minimal", total == want, os.str());

  auto guarded = [](const auto& fn) {
    try {
      return fn();
    } catch (const error&) {
      return false;
    }
  };
  const PivotProfile& pp = pr.profile;
  rep.add("x_factor", guarded([&] {
            const Mat w0t = multiply(take_cols(pr.x, pp.i1), inverse(submatrix(pr.x, pp.i0, pp.i1)));
            return multiply(w0t, take_rows(pr.x, pp.i0)) == pr.x;
          }),
          "X = W0^T G01");
  rep.add("xt_factor", guarded([&] {
            const Mat g1 = multiply(inverse(submatrix(pr.x, pp.i0, pp.i1)), take_rows(pr.x, pp.i0));
            return multiply(transpose(g1), transpose(take_cols(pr.x, pp.i1))) == transpose(pr.x);
          }),
          "X^T = G1^T W10");
  rep.add("y_factor", guarded([&] {
            const Mat v1t = multiply(take_cols(pr.y, pp.j1), inverse(submatrix(pr.y, pp.j0, pp.j1)));
            return multiply(v1t, take_rows(pr.y, pp.j0)) == pr.y;
          }),
          "Y = V1^T H10");
  rep.add("yt_factor", guarded([&] {
            const Mat h0 = multiply(inverse(submatrix(pr.y, pp.j0, pp.j1)), take_rows(pr.y, pp.j0));
            return multiply(transpose(h0), transpose(take_cols(pr.y, pp.j1))) == transpose(pr.y);
          }),
          "Y^T = H0^T V01");
  return rep;
}

Report cyclic_transpose_check(const Field& f, int n, const std::vector<int>& c,
                              const std::vector<int>& d) {
  require(n >= 1, errc::out_of_range, "length must be positive");
  require(!c.empty() && !d.empty(), errc::zero_vector, "polynomials must be nonempty");
  std::vector<int> cc(c.size()), dd(d.size());
  for (size_t i = 0; i < c.size(); ++i) cc[i] = f.canon(c[i]);
  for (size_t i = 0; i < d.size(); ++i) dd[i] = f.canon(d[i]);
  // c(x) d(x) must equal x^n - 1.
  std::vector<int> conv(c.size() + d.size() - 1, 0);
  for (size_t a = 0; a < cc.size(); ++a)
    for (size_t b = 0; b < dd.size(); ++b)
      conv[a + b] = f.add(conv[a + b], f.mul(cc[a], dd[b]));
  bool factor = static_cast<int>(conv.size()) == n + 1;
  if (factor) {
    for (int t = 0; t <= n; ++t) {
      const int want = t == 0 ? f.neg(1) : (t == n ? 1 : 0);
      factor = factor && conv[t] == want;
    }
  }
  require(factor, errc::not_factor_of_xn_minus_1, "c(x) d(x) != x^n - 1");
  const int degc = static_cast<int>(c.size()) - 1;
  const int k = n - degc;
  require(k >= 1, errc::dimension_mismatch, "c(x) has degree n; the code is trivial");

  Report rep;
  if (k == n) {
    const CharPair pr = char_pair_reduced(Mat::identity(f, n));
    rep.add("degenerate", true, "c is constant; the cyclic code is the full space");
    bool diagonal = true;
    for (int i = 0; i < n && diagonal; ++i)
      for (int j = 0; j < n && diagonal; ++j)
        diagonal = (i == j) ? pr.x.at(i, j) != 0 : pr.x.at(i, j) == 0;
    rep.add("x_diagonal", diagonal, "X is diagonal");
    return rep;
  }
  Mat g(f, k, n);
  for (int r = 0; r < k; ++r)
    for (int t = 0; t <= degc; ++t) g.set(r, r + t, cc[t]);
  // The reverse-ordered dual C' is the cyclic code generated by d(x).
  const int degd = static_cast<int>(dd.size()) - 1;
  Mat g2(f, n - degd, n);
  for (int r = 0; r < n - degd; ++r)
    for (int t = 0; t <= degd; ++t) g2.set(r, r + t, dd[t]);
  const CharPair pr = char_pair_reduced(g);
  const CharPair pr2 = char_pair_reduced(g2);
  rep.add("xt_is_yprime", transpose(pr.x) == pr2.y, "X(C)^T = Y(C')");
  rep.add("yt_is_xprime", transpose(pr.y) == pr2.x, "Y(C)^T = X(C')");
  return rep;
}

std::string rook_board(const CharPair& pr) {
  std::ostringstream os;
  for (int i = 0; i < pr.n; ++i) {
    for (int j = 0; j < pr.n; ++j) {
      if (j) os << " ";
      if (j == pr.sigma[i])
        os << (pr.spans_x[i].conventional() ? "B" : "W");
      else
        os << ".";
    }
    os << "\n";
  }
  return os.str();
}

std::string rook_board(int n, const std::vector<std::pair<int, int>>& spans) {
  require(n >= 1, errc::out_of_range, "board size must be positive");
  std::vector<std::string> cell(static_cast<size_t>(n) * n, ".");
  for (const auto& [i, j] : spans) {
    require(i >= 0 && i < n && j >= 0, errc::bad_span, "span start out of range");
    const int col = ((j % n) + n - 1) % n;
    cell[static_cast<size_t>(i) * n + col] = std::to_string((j + n - 1) / n);
  }
  std::ostringstream os;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) os << " ";
      os << cell[static_cast<size_t>(i) * n + j];
    }
    os << "\n";
  }
  return os.str();
}

std::vector<int> basis_at_cut(const CharPair& pr, int a) {
  require(a >= 0 && a < pr.n, errc::out_of_range, "cut out of range");
  std::vector<int> rows;
  for (int i = 0; i < pr.n; ++i)
    if (!pr.spans_x[i].covers_boundary(a)) rows.push_back(i);
  require(static_cast<int>(rows.size()) == pr.k, errc::not_characteristic,
          "cut does not isolate k rows");
  require(rank(take_rows(pr.x, rows)) == pr.k, errc::rank_deficient, "rows at the cut are dependent");
  return rows;
}

Report prop_abcd_report(const CharPair& pr) {
  const int n = pr.n;
  // Unwrapped, row i occupies the interval (i, i + len_i] in 0..2n-1.
  std::vector<int> ends(n);
  for (int i = 0; i < n; ++i) ends[i] = i + pr.spans_x[i].length();
  std::vector<int> want;
  for (int c : pr.profile.i1) want.push_back(c);
  for (int c : pr.profile.j1) want.push_back(n + c);
  std::sort(want.begin(), want.end());
  std::vector<int> got = ends;
  std::sort(got.begin(), got.end());
  const bool distinct = std::adjacent_find(got.begin(), got.end()) == got.end();
  const bool a_ok = distinct && got == want;

  long long total = 0;
  for (int i = 0; i < n; ++i) total += pr.spans_x[i].length();
  const bool b_ok = total == static_cast<long long>(pr.profile.j1.size()) * n;

  bool c_ok = true, d_ok = true;
  for (int a = 0; a < n; ++a) {
    int clear = 0, covering = 0;
    for (int i = 0; i < n; ++i) {
      const int e = ends[i];
      if (e <= a - 1 || (i >= a && e <= a + n - 1)) ++clear;
      if ((i <= a - 1 && e >= a) || e >= a + n) ++covering;
    }
    c_ok = c_ok && clear == static_cast<int>(pr.profile.i1.size());
    d_ok = d_ok && covering == static_cast<int>(pr.profile.j1.size());
  }
  Report rep;
  rep.add("a", a_ok, "unwrapped ends are I1 together with n + J1");
  rep.add("b", b_ok, "total spanlength is |J1| n");
  rep.add("c", c_ok, "|I1| rows clear each boundary");
  rep.add("d", d_ok, "|J1| rows cover each boundary");
  rep.add("agree", a_ok == b_ok && b_ok == c_ok && c_ok == d_ok, "the four counts agree");
  return rep;
}

bool separating_check(const Mat& m, const Mat& g, bool with_complements) {
  const int n = g.cols();
  require(m.cols() == n && m.field() == g.field(), errc::dimension_mismatch,
          "words must have the code length");
  const int k = rank(g);
  long long size = 1;
  for (int t = 0; t < k; ++t) {
    size *= g.field().p();
    require(size <= (1LL << 16), errc::too_large, "code is too large to enumerate subcodes");
  }
  std::vector<std::vector<int>> supports;
  supports.push_back({});
  for (int a = 0; a < n; ++a)
    for (int len = 1; a + len <= n; ++len) {
      std::vector<int> s;
      for (int t = a; t < a + len; ++t) s.push_back(t);
      supports.push_back(s);
    }
  if (with_complements) {
    const size_t base = supports.size();
    for (size_t t = 0; t < base; ++t) {
      std::vector<bool> in(n, false);
      for (int p : supports[t]) in[p] = true;
      std::vector<int> s;
      for (int p = 0; p < n; ++p)
        if (!in[p]) s.push_back(p);
      supports.push_back(s);
    }
  }
  // Group supports by which of the given words their subcode contains; within a
  // group the subcodes must coincide.
  std::map<std::string, std::string> seen;
  for (const auto& s : supports) {
    std::vector<bool> in(n, false);
    for (int p : s) in[p] = true;
    std::vector<int> outside;
    for (int p = 0; p < n; ++p)
      if (!in[p]) outside.push_back(p);
    const Mat coef = null_space(transpose(take_cols(g, outside)));
    const Mat basis = multiply(coef, g);
    const int rb = rank(basis);
    std::string key;
    for (int r = 0; r < m.rows(); ++r) {
      const Mat word = take_rows(m, {r});
      key.push_back(rank(stack(basis, word)) == rb ? '1' : '0');
    }
    const Mat reduced = rref_left(basis);
    std::ostringstream canon;
    for (int r = 0; r < reduced.rows(); ++r) {
      if (reduced.row_is_zero(r)) continue;
      for (int c = 0; c < n; ++c) canon << reduced.at(r, c) << " ";
      canon << ";";
    }
    auto [it, inserted] = seen.emplace(key, canon.str());
    if (!inserted && it->second != canon.str()) return false;
  }
  return true;
}

std::string unwrap_band(const CharPair& pr, int windows) {
  require(windows >= 1, errc::out_of_range, "window count must be positive");
  const int n = pr.n;
  const int width = (windows + 1) * n;
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& tokens) {
    for (int c = 0; c < width; ++c) {
      if (c) os << " ";
      os << tokens[c];
    }
    os << "\n";
  };
  for (int w = 0; w < windows; ++w)
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> tokens(width, ".");
      for (int t = 0; t < n; ++t) tokens[w * n + i + t] = std::to_string(pr.x.at(i, (i + t) % n));
      emit(tokens);
    }
  os << "\n";
  for (int w = 0; w < windows; ++w)
    for (int j = 0; j < n; ++j) {
      std::vector<std::string> tokens(width, ".");
      for (int t = 1; t <= n; ++t) tokens[w * n + j + t] = std::to_string(pr.y.at(j, (j + t) % n));
      emit(tokens);
    }
  return os.str();
}

std::string char_pair_json(const CharPair& pr) {
  nlohmann::json j;
  j["p"] = pr.f.p();
  j["n"] = pr.n;
  j["k"] = pr.k;
  j["reduced"] = pr.reduced;
  j["degenerate"] = pr.degenerate();
  j["sigma"] = pr.sigma;
  auto rows = [](const Mat& m) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < m.rows(); ++i) {
      std::vector<int> row;
      for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
      out.push_back(row);
    }
    return out;
  };
  j["x"] = rows(pr.x);
  j["y"] = rows(pr.y);
  j["i0"] = pr.profile.i0;
  j["i1"] = pr.profile.i1;
  j["j0"] = pr.profile.j0;
  j["j1"] = pr.profile.j1;
  auto spans = [](const std::vector<CircSpan>& sp) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : sp) arr.push_back({{"i", s.i}, {"j", s.j}});
    return arr;
  };
  j["spans_x"] = spans(pr.spans_x);
  j["spans_y"] = spans(pr.spans_y);
  return j.dump(2) + "\n";
}

}  // namespace tmt
