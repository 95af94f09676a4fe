// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tmt/charmat.hpp"
#include "tmt/matrix.hpp"
#include "tmt/report.hpp"

namespace tmt {

// One generator of a tail-biting trellis: a length-n word, its circular span,
// and the vertex labels v_0 .. v_n it induces (v_n == v_0).
struct TrellisGenerator {
  std::vector<int> word;
  CircSpan span;
  std::vector<std::vector<int>> vlabels;
};

struct TrellisEdge {
  int from = 0;
  int to = 0;
  int symbol = 0;
};

// Tail-biting trellis on boundaries 0..n, V_n identified with V_0.
// vertices[t] lists the distinct label vectors at boundary t (t = 0..n,
// vertices[n] == vertices[0]); edges[t] connects V_t to V_{t+1}.
// The full vertex/edge sets are materialized only when q^k <= 2^16.
struct Trellis {
  Field f;
  int n = 0;
  int vdim = 0;
  std::vector<TrellisGenerator> generators;
  std::vector<std::vector<std::vector<int>>> vertices;
  std::vector<std::vector<TrellisEdge>> edges;
  Report validation;
  bool materialized = false;

  explicit Trellis(const Field& fld) : f(fld) {}
};

// Product construction: generator g with span (i, j] gets v_t = e_g on the
// boundaries covered by its span and v_t = 0 elsewhere.  BadSpan if a listed
// span is not a valid circular span of its word.
Trellis product_trellis(const Field& f,
                        const std::vector<std::pair<std::vector<int>, CircSpan>>& gens);

// Span-based BCJR construction: v_{start} = 0 and walking the circle from the
// span start, v_{t+1} = v_t + sign * c_t * (column t of labels).  NotClosed if
// the walk does not return to 0.  labels is d x n; vertex labels have dim d.
Trellis bcjr_trellis(const Field& f,
                     const std::vector<std::pair<std::vector<int>, CircSpan>>& gens,
                     const Mat& labels, int sign);

// State-complexity profile: entry t in 0..n counts the generators whose span
// covers boundary (t mod n).
std::vector<int> complexity_profile(const std::vector<CircSpan>& spans, int n);

// Whether the map (coefficient vector -> edge-label word) is a bijection onto
// the code of g.  TooLarge when q^k > 2^16.
bool represents_one_to_one(const Trellis& t, const Mat& g);

// Whether two trellises on the same field and length are linearly isomorphic:
// re-express t2's generator words in terms of t1's and compare, per boundary,
// the kernels of the vertex-label maps.  TooLarge when either has more than
// 16 generators.
bool linearly_isomorphic(const Trellis& t1, const Trellis& t2);

enum class LabelDirection {
  y_labels_x,  // generators are rows of X, labels are rows of Y, sign -1
  x_labels_y,  // generators are rows of Y, labels are rows of X, sign +1
};

// The label code S(Y^T | X) or S(X^T | Y) of a pair in duality.
// gen_rows selects the generator rows (empty = all); the label rows are the
// complementary rows of the other matrix when a proper selection is given and
// all rows otherwise.  N_t stacks the generator vertex labels at boundary t.
struct LabelCode {
  Field f;
  int n = 0;
  LabelDirection direction = LabelDirection::y_labels_x;
  std::vector<int> gen_rows;
  std::vector<int> label_rows;
  std::vector<TrellisGenerator> rows;
  Report checks;
  bool masked = false;

  explicit LabelCode(const Field& fld) : f(fld) {}
};

// Build the label code and verify: N_t X = 0 (resp. N_t Y = 0), the nonzero
// rows of each N_t are systematic (restrict to an identity on some column
// set), rank(N_{t+1} - N_t) <= 1, and N_0 equals E^T (resp. D^T) restricted
// to the selection.  NotInDuality unless the pair is in duality.
LabelCode label_code(const CharPair& pr, LabelDirection dir,
                     const std::vector<int>& gen_rows = {});

// Table rendering: N_0 |c_0| N_1 |c_1| ... |c_{n-1}| N_n with N_n = N_0.
// Masked label codes print labels at the label-row coordinate positions
// inside width-n strings, '.' elsewhere.
std::string label_code_text(const LabelCode& lc);

// Duality of trellis constructions: for an independent selection I of X rows
// (DependentSelection otherwise), J the complement, the BCJR trellis of the
// X rows I under Y[J]-labels with sign -1 and of the Y rows J under
// X[I]-labels with sign +1 satisfy (E[J x I])^T == -D[I x J], and both label
// codes verify.
Report trellis_duality_check(const CharPair& pr, const std::vector<int>& rows_i);

// All independent selections: k-subsets I of X rows with rank(X[I]) == k and
// rank(Y[complement]) == n - k.  Guarded to n <= 20.
std::vector<std::vector<int>> enumerate_bases(const CharPair& pr);

struct DecodeResult {
  std::vector<int> codeword;
  int distance = 0;
};

// Tail-biting Viterbi: minimum Hamming distance closed path, ties broken by
// lexicographically smallest codeword.  Requires a materialized trellis.
DecodeResult viterbi_decode(const Trellis& t, const std::vector<int>& received);

std::string trellis_text(const Trellis& t);
std::string trellis_dot(const Trellis& t);

}  // namespace tmt
