// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "tmt/matrix.hpp"

namespace tmt {

// Conventional span [i0, i1]: the vector is nonzero at i0 and i1 and zero
// outside the interval. spanlength = i1 - i0.
struct ConvSpan {
  int i0 = 0;
  int i1 = 0;
  int length() const { return i1 - i0; }
  bool operator==(const ConvSpan&) const = default;
};

ConvSpan conv_span(const std::vector<int>& v);  // ZeroVector
ConvSpan conv_span_row(const Mat& m, int r);

enum class MsfFlavor { unreduced, left_right_reduced, right_left_reduced };

// A matrix in (possibly reduced) minimal span form together with its span
// list and the triangular/permutation factors of its pivot minors.
//   left-ordered:  matrix|I0 = U (upper), matrix|I1 = P.L = L'.P
//   right-ordered: matrix|lead = P.U = U'.P, matrix|trail = L (lower)
struct MsfReport {
  Mat matrix;
  std::vector<ConvSpan> spans;
  Mat u;  // upper factor of the leading minor
  Mat p;  // permutation factor
  Mat l;  // lower factor of the trailing minor
  MsfFlavor flavor = MsfFlavor::unreduced;
  std::vector<int> i0, i1;  // leading / trailing pivot columns, sorted
  int spanlength() const;
};

// LR property: no two rows share a start, no two share an end. ZeroRow on a
// zero row.
bool is_msf(const Mat& m);

// Greedy pairwise span reduction; terminates because total spanlength
// strictly decreases. Result is left-ordered (rows sorted by span start) and
// unreduced. RankDeficient unless m has full row rank.
MsfReport to_msf(const Mat& m);

// The unique reduced minimal span form of the chosen flavor:
//   left_right_reduced:  rows by span start, cleared north of each trailing
//                        pivot, trailing entries normalized to 1.
//   right_left_reduced:  rows by span end, cleared south of each leading
//                        pivot, leading entries normalized to 1.
MsfReport reduce_msf(const Mat& m, MsfFlavor flavor);

struct Lpu {
  Mat l, p, u;
};

// A = L.P.U with L lower and U upper triangular invertible; P is canonical
// (independent of elimination order).
Lpu lpu(const Mat& a);  // Singular, NotSquare

enum class Corner { nw, ne, sw, se };

// Permutation whose corner-block nonzero counts equal the ranks of A's
// corresponding corner blocks. Corner::sw is the standard Bruhat permutation
// of A = U1.P.U2.
Mat bruhat_corner(const Mat& a, Corner corner);

}  // namespace tmt
