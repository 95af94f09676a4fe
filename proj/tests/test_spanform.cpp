// SPDX-License-Identifier: MIT
#include "tmt/spanform.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "tmt/error.hpp"
#include "tmt/field.hpp"
#include "tmt/matrix.hpp"

using namespace tmt;

namespace {

Mat gf3_g() { return Mat::from_rows(Field(3), {{2, 2, 1, 0}, {1, 0, 1, 2}}, 4); }

Mat b53_g() {
  return Mat::from_rows(Field(2), {{1, 1, 1, 0, 0}, {0, 1, 1, 0, 1}, {0, 0, 1, 1, 0}}, 5);
}

Mat random_full_rank(const Field& f, int k, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, f.p() - 1);
  while (true) {
    Mat m(f, k, n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) m.set(i, j, d(rng));
    if (rank(m) == k) return m;
  }
}

}  // namespace

TEST_CASE("conventional spans") {
  Field f(3);
  const ConvSpan s = conv_span(std::vector<int>{0, 2, 0, 1, 0});
  CHECK(s.i0 == 1);
  CHECK(s.i1 == 3);
  CHECK(s.length() == 2);
  CHECK_THROWS_AS(conv_span(std::vector<int>{0, 0}), error);
  const Mat g = gf3_g();
  CHECK(conv_span_row(g, 0) == ConvSpan{0, 2});
  CHECK(conv_span_row(g, 1) == ConvSpan{0, 3});
}

TEST_CASE("left-right property") {
  CHECK(is_msf(b53_g()));
  CHECK(!is_msf(gf3_g()));  // both rows start in position 0
  const Mat shared_end = Mat::from_rows(Field(2), {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3);
  CHECK_THROWS_AS(to_msf(shared_end), error);  // rank deficient
}

TEST_CASE("to_msf golden over GF(3)") {
  const MsfReport rep = to_msf(gf3_g());
  CHECK(is_msf(rep.matrix));
  CHECK(same_row_space(rep.matrix, gf3_g()));
  REQUIRE(rep.spans.size() == 2);
  CHECK(rep.spans[0] == ConvSpan{0, 2});
  CHECK(rep.spans[1] == ConvSpan{1, 3});
  CHECK(rep.spanlength() == 4);
  CHECK(rep.i0 == std::vector<int>{0, 1});
  CHECK(rep.i1 == std::vector<int>{2, 3});
  // [DERIVED] brute-force minimum over all bases.
  CHECK(oracle::brute_min_spanlength(gf3_g()) == 4);
}

TEST_CASE("left reduced minimal span forms") {
  // [PAPER] GF(3): trailing entries normalized to one.
  const Mat g01 = Mat::from_rows(Field(3), {{2, 2, 1, 0}, {0, 1, 1, 1}}, 4);
  CHECK(reduce_msf(gf3_g(), MsfFlavor::left_right_reduced).matrix == g01);
  // [PAPER] binary [5,3]: the generator is already left reduced.
  CHECK(reduce_msf(b53_g(), MsfFlavor::left_right_reduced).matrix == b53_g());
  // [PAPER] two-row toy: reduced form of (A|I) picks the identity factors.
  const Mat ai = Mat::from_rows(Field(2), {{0, 1, 1, 0}, {1, 0, 0, 1}}, 4);
  const Mat want = Mat::from_rows(Field(2), {{1, 0, 0, 1}, {0, 1, 1, 0}}, 4);
  CHECK(reduce_msf(ai, MsfFlavor::left_right_reduced).matrix == want);
}

TEST_CASE("right reduced minimal span forms") {
  // [DERIVED] GF(3) dual: rows ordered by span end, leading entries one.
  const Mat h = Mat::from_rows(Field(3), {{2, 1, 0, 2}, {0, 2, 2, 2}}, 4);
  const Mat h10 = Mat::from_rows(Field(3), {{1, 1, 2, 0}, {0, 1, 1, 1}}, 4);
  CHECK(reduce_msf(h, MsfFlavor::right_left_reduced).matrix == h10);
  // [PAPER] binary [5,3] duals.
  const Mat h2 = null_space(b53_g());
  const Mat h10b = Mat::from_rows(Field(2), {{0, 1, 1, 1, 0}, {1, 0, 1, 1, 1}}, 5);
  CHECK(reduce_msf(h2, MsfFlavor::right_left_reduced).matrix == h10b);
  const Mat h01 = Mat::from_rows(Field(2), {{1, 1, 0, 0, 1}, {0, 1, 1, 1, 0}}, 5);
  CHECK(reduce_msf(h2, MsfFlavor::left_right_reduced).matrix == h01);
  const Mat g10 = Mat::from_rows(Field(2), {{1, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 1, 0, 1, 1}}, 5);
  CHECK(reduce_msf(b53_g(), MsfFlavor::right_left_reduced).matrix == g10);
}

TEST_CASE("report factors expose the triangular decomposition") {
  const MsfReport left = reduce_msf(gf3_g(), MsfFlavor::left_right_reduced);
  const Mat lead = take_cols(left.matrix, left.i0);
  const Mat trail = take_cols(left.matrix, left.i1);
  CHECK(left.u == lead);
  CHECK(multiply(left.p, left.l) == trail);
  for (int r = 0; r < left.l.rows(); ++r) {
    CHECK(left.l.at(r, r) == 1);  // L normalized with unit diagonal
    for (int c = r + 1; c < left.l.cols(); ++c) CHECK(left.l.at(r, c) == 0);
  }
  const Mat h = Mat::from_rows(Field(3), {{2, 1, 0, 2}, {0, 2, 2, 2}}, 4);
  const MsfReport right = reduce_msf(h, MsfFlavor::right_left_reduced);
  const Mat rlead = take_cols(right.matrix, right.i0);
  const Mat rtrail = take_cols(right.matrix, right.i1);
  CHECK(right.l == rtrail);
  CHECK(multiply(right.p, right.u) == rlead);
  for (int r = 0; r < right.u.rows(); ++r) {
    CHECK(right.u.at(r, r) == 1);  // U normalized with unit diagonal
    for (int c = 0; c < r; ++c) CHECK(right.u.at(r, c) == 0);
  }
}

TEST_CASE("lpu golden on the binary 3x3") {
  const Mat a = Mat::from_rows(Field(2), {{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}, 3);
  const Lpu d = lpu(a);
  // [PAPER] the LPU permutation.
  const Mat p = Mat::from_rows(Field(2), {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, 3);
  CHECK(d.p == p);
  CHECK(multiply(multiply(d.l, d.p), d.u) == a);
  CHECK_THROWS_AS(lpu(Mat::from_rows(Field(2), {{1, 1}, {1, 1}}, 2)), error);
  CHECK_THROWS_AS(lpu(gf3_g()), error);  // not square
}

TEST_CASE("bruhat corners on the binary 3x3") {
  const Mat a = Mat::from_rows(Field(2), {{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}, 3);
  // [PAPER] the standard Bruhat permutation, south-west rank semantics.
  const Mat sw = Mat::from_rows(Field(2), {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, 3);
  CHECK(bruhat_corner(a, Corner::sw) == sw);
  CHECK(bruhat_corner(a, Corner::nw) == lpu(a).p);
}

TEST_CASE("bruhat corner rank property on random invertibles") {
  std::mt19937 rng(4051);
  for (int trial = 0; trial < 60; ++trial) {
    const int p = (trial % 2 == 0) ? 2 : 3;
    Field f(p);
    std::uniform_int_distribution<int> dn(1, 5);
    const int n = dn(rng);
    const Mat a = random_full_rank(f, n, n, rng);
    for (Corner corner : {Corner::nw, Corner::ne, Corner::sw, Corner::se}) {
      const Mat perm = bruhat_corner(a, corner);
      CHECK(rank(perm) == n);
      for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
          int r0 = (corner == Corner::nw || corner == Corner::ne) ? 0 : n - r;
          int c0 = (corner == Corner::nw || corner == Corner::sw) ? 0 : n - c;
          const Mat ba = block(a, r0, c0, r, c);
          const Mat bp = block(perm, r0, c0, r, c);
          int ones = 0;
          for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
              if (bp.at(i, j) != 0) ++ones;
          CHECK(rank(ba) == ones);
        }
    }
  }
}

TEST_CASE("to_msf matches the brute-force minimum") {
  std::mt19937 rng(99173);
  int done = 0;
  while (done < 30) {
    const int p = (done % 2 == 0) ? 2 : 3;
    Field f(p);
    std::uniform_int_distribution<int> dk(1, 3);
    std::uniform_int_distribution<int> dn(2, 6);
    const int k = dk(rng);
    const int n = dn(rng);
    if (k > n) continue;
    double cost = 1;
    for (int i = 0; i < k * k; ++i) cost *= p;
    if (cost > 1048576.0) continue;
    const Mat g = random_full_rank(f, k, n, rng);
    const MsfReport rep = to_msf(g);
    CHECK(is_msf(rep.matrix));
    CHECK(same_row_space(rep.matrix, g));
    CHECK(rep.spanlength() == oracle::brute_min_spanlength(g));
    long long via_pivots = 0;
    for (int v : rep.i1) via_pivots += v;
    for (int v : rep.i0) via_pivots -= v;
    CHECK(rep.spanlength() == via_pivots);
    ++done;
  }
}

TEST_CASE("reduction is idempotent and span preserving") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    Field f(trial % 2 == 0 ? 2 : 5);
    std::uniform_int_distribution<int> dk(1, 3);
    std::uniform_int_distribution<int> dn(3, 7);
    const int k = dk(rng);
    const int n = dn(rng);
    if (k > n) continue;
    const Mat g = random_full_rank(f, k, n, rng);
    for (MsfFlavor fl : {MsfFlavor::left_right_reduced, MsfFlavor::right_left_reduced}) {
      const MsfReport once = reduce_msf(g, fl);
      const MsfReport twice = reduce_msf(once.matrix, fl);
      CHECK(once.matrix == twice.matrix);
      CHECK(once.spanlength() == to_msf(g).spanlength());
      CHECK(same_row_space(once.matrix, g));
      CHECK(is_msf(once.matrix));
    }
  }
}
