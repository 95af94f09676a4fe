// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tmt/matrix.hpp"
#include "tmt/report.hpp"
#include "tmt/spanform.hpp"

namespace tmt {

// Circular span (i, j] on Z/n: support runs from position i to position j
// inclusive (wrapping when j < i), covered boundaries are {i+1, ..., j}
// circularly, and (i, i] is the singleton support {i} covering no boundary.
struct CircSpan {
  int n = 0;
  int i = 0;
  int j = 0;

  int length() const { return ((j - i) % n + n) % n; }
  bool conventional() const { return i <= j; }
  // Position p lies in the circular segment [i .. j].
  bool contains(int p) const {
    int off = ((p - i) % n + n) % n;
    return off <= length();
  }
  // Boundary t in {i+1, ..., j} circularly; a length-0 span covers none.
  bool covers_boundary(int t) const {
    if (length() == 0) return false;
    int off = ((t - i) % n + n) % n;
    return off >= 1 && off <= length();
  }
  bool operator==(const CircSpan& o) const { return n == o.n && i == o.i && j == o.j; }
  bool operator!=(const CircSpan& o) const { return !(*this == o); }
};

std::string circ_span_text(const CircSpan& s);

// All circular spans (i, j] valid for v: v[i] != 0, v[j] != 0, and v vanishes
// outside the circular segment [i .. j].  ZeroVector on v == 0.
std::vector<CircSpan> circ_spans(const Field& f, const std::vector<int>& v);
bool is_circ_span(const Field& f, const std::vector<int>& v, const CircSpan& s);

// Reduced characteristic pair for a length-n code and its dual.
// Row i of X has circular span (i, sigma[i]]; row j of Y has span (sigma[j], j]
// for the same bijection.  X = X0 + X1 with X0 upper triangular (including the
// diagonal, which is nonzero) and X1 strictly lower; Y = Y1 + Y0 with Y0 lower
// triangular (nonzero diagonal) and Y1 strictly upper.
struct CharPair {
  Field f;
  int n = 0;
  int k = 0;  // dim of the code spanned by the rows of X
  Mat x, x0, x1;
  Mat y, y1, y0;
  std::vector<CircSpan> spans_x;
  std::vector<CircSpan> spans_y;
  std::vector<int> sigma;  // spans_x[i] = (i, sigma[i]], spans_y[j] = (sigma[j], j]
  PivotProfile profile;        // i0/i1/j0/j1 of the underlying (G, H) pair
  bool reduced = false;

  bool degenerate() const { return k == n; }
  Mat g01() const;  // rows I0 of X: the left-right reduced MSF of the code
  Mat h10() const;  // rows J0 of Y: the right-left reduced MSF of the dual
};

// Displacement pair D = X0 Y1^T, E = Y0 X1^T with their diagonal parts.
struct Displacement {
  Mat d, e, d0, e0;
};

// Build the reduced characteristic pair from a generator matrix (full row
// rank, 1 <= k <= n).  The stack route: X from [(-I | I); (0 | G)] in
// left-right reduced MSF, Y from [(H | 0); (I | -I)] in right-left reduced
// MSF, with H a generator of the dual code.  For k == n the companion Y is
// the formal -((X0)^-1)^T; such a pair is valid but not in duality.
CharPair char_pair_reduced(const Mat& g);

// Same pair by the direct route: solve for the unique characteristic vectors
// through the reduced MSFs of G and H.  Agrees with char_pair_reduced.
CharPair char_pair_direct(const Mat& g);

// Structural assembly from explicit X and Y: derives spans from the
// triangular split (row index is the start of an X row and the end of a Y
// row; the other endpoint is read off the unwrapped row), requires nonzero
// diagonals and a span bijection, but defers every duality identity to
// duality_report.  NotCharacteristic on structural violations only.
CharPair assemble_pair(const Field& f, const Mat& x, const Mat& y);

// assemble_pair plus the strict gates: orthogonality of the two row spaces,
// matching span bijections, spanlength sums and row ranks, raising
// NotCharacteristic / NotOrthogonalPair on violation.
CharPair make_pair_checked(const Field& f, const Mat& x, const Mat& y);

// Checks that x is an n x n characteristic matrix for the code of g:
// row i nonzero at position i, rows inside the code, rank equal to the code
// dimension, span ends distinct, and total spanlength equal to the minimum
// |J1| * n.
Report verify_characteristic(const Mat& x, const Mat& g);

// Construct Y from X alone: Y0 = -((X0)^-1)^T, Y1^T = (X0)^-1 (I + X1 (X0)^-1)
// ... taken strictly-lower; NotCharacteristic if the result is not a valid
// companion.  Returns the assembled pair.
CharPair dual_char(const Mat& x);

// Evaluate the duality identities between X and Y: X Y^T = 0, Y^T X = 0,
// X1^T Y1 = 0, X0 Y1^T + X1 Y0^T = I, X0 Y0^T = -I, X1 Y1^T = 0, the
// displacement identities D^2 = D, E^2 = E, D E^T = 0, E^T D = 0, D D0 = D,
// D0 D = D0, D^T Y = 0, E E0 = E, E0 E = E0, E^T X = 0, X = D (D0 X), and
// D + E^T = I.  For a degenerate pair (k == n) the identities that require
// duality fail; they are reported honestly and the report is flagged.
Report duality_report(const CharPair& pr);

// D, E and their diagonal supports.  NotInDuality when the pair fails
// X0 Y1^T + X1 Y0^T = I (in particular when k == n).
Displacement displacement(const CharPair& pr);

// Conjugate the pair by the cyclic shift S (e_i S = e_{i+1}): X^S = S X S^T.
CharPair shift_conjugate(const CharPair& pr);

// Rank-one displacement identity: S^T D(X^S) S - D(X) = x y^T and the E
// analogue with a minus sign, where x, y are column 0 of X, Y.
Report shift_displacement_check(const CharPair& pr);

// Transpose duality (reduced pairs): X^T is a right-ordered characteristic
// matrix with spanlength |J1| * n, and the four stacked factorizations
// X = W0^T G01, X^T = G1^T W10, Y = V1^T H10, Y^T = H0^T V01 hold.
// For a non-reduced characteristic matrix the transpose spanlength is
// strictly larger and the report says so.
Report transpose_check(const CharPair& pr);

// Cyclic codes: for C generated by c(x) with c(x) d(x) = x^n - 1, the
// reverse-ordered dual C' is the cyclic code generated by d(x), and
// X(C)^T = Y(C'), Y(C)^T = X(C').  Coefficient vectors are ascending-degree;
// NotFactorOfXnMinus1 if the product is not x^n - 1.
Report cyclic_transpose_check(const Field& f, int n, const std::vector<int>& c_coeffs,
                              const std::vector<int>& d_coeffs);

// The span bijection as a rook placement: an n x n board with a black rook
// at (i, sigma(i)) when the span is conventional and a white rook otherwise.
std::string rook_board(const CharPair& pr);

// Rook board for raw spans (i, j] whose ends may run past n (multi-window
// wrapping).  The rook for (i, j] sits at row i, display column
// ((j mod n) + n - 1) mod n under column labels 1..n-1,0, and is printed as
// the window count (j + n - 1) / n.
std::string rook_board(int n, const std::vector<std::pair<int, int>>& spans);

// Row indices of X forming a basis adapted to the cut at boundary a: the k
// rows whose span does not cover boundary a.  Checks they are independent.
std::vector<int> basis_at_cut(const CharPair& pr, int a);

// The four equivalent characterizations of a characteristic span set,
// evaluated independently on the unwrapped rows of (X0|X1): (a) distinct
// ends I1 u (n + J1), (b) total spanlength |J1| * n, (c) |I1| rows clear of
// each cut, (d) |J1| rows straddling each boundary.  Items "a".."d" plus
// "agree".
Report prop_abcd_report(const CharPair& pr);

// Whether equality of subcodes C(I) = { c in C : supp(c) <= I } over the
// family of coordinate intervals (plus complements when requested) is
// decided by the rows of m alone.  Pre: rows of m lie in the code of g and
// q^k <= 2^16 (TooLarge otherwise).
bool separating_check(const Mat& m, const Mat& g, bool with_complements);

// Banded unwrapping of the pair over the given number of windows: the
// block rows [X0 X1], [.. X0 X1] and [Y0 ..], [Y1 Y0] laid out on
// (windows + 1) * n columns, entries outside the band rendered as '.'.
std::string unwrap_band(const CharPair& pr, int windows);

// JSON rendering of the pair: field, size, matrices, spans, sigma, flags.
std::string char_pair_json(const CharPair& pr);

}  // namespace tmt
