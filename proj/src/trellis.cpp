// SPDX-License-Identifier: MIT
#include "tmt/trellis.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tmt/error.hpp"

namespace tmt {

namespace {

constexpr long long kMaxPaths = 1LL << 16;

long long pow_checked(int base, int exp) {
  long long out = 1;
  for (int t = 0; t < exp; ++t) {
    out *= base;
    if (out > kMaxPaths) return kMaxPaths + 1;
  }
  return out;
}

// BCJR walk: v = 0 at the span start boundary, v += sign * c_t * labels[:, t]
// around the circle.  Returns labels at boundaries 0..n with entry n equal to
// entry 0; NotClosed if the walk does not return to zero.
std::vector<std::vector<int>> walk_labels(const Field& f, const std::vector<int>& word,
                                          const CircSpan& span, const Mat& labels, int sign) {
  const int n = static_cast<int>(word.size());
  const int d = labels.rows();
  std::vector<std::vector<int>> at(n + 1, std::vector<int>(d, 0));
  std::vector<int> v(d, 0);
  const int s = sign >= 0 ? 1 : f.p() - 1;
  for (int step = 0; step < n; ++step) {
    const int t = (span.i + step) % n;
    for (int r = 0; r < d; ++r) v[r] = f.add(v[r], f.mul(s, f.mul(word[t], labels.at(r, t))));
    at[(t + 1) % n] = v;
  }
  require(std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }),
          errc::not_closed, "span walk does not return to the zero state");
  at[span.i] = std::vector<int>(d, 0);
  at[n] = at[0];
  return at;
}

// Enumerates all coefficient vectors, collecting distinct vertex labels per
// boundary and distinct (from, to, symbol) edges.
void materialize(Trellis& t) {
  const int m = static_cast<int>(t.generators.size());
  const int n = t.n;
  if (pow_checked(t.f.p(), m) > kMaxPaths) {
    t.materialized = false;
    return;
  }
  auto path_vertex = [&](const std::vector<int>& a, int b) {
    std::vector<int> v(t.vdim, 0);
    for (int g = 0; g < m; ++g)
      for (int r = 0; r < t.vdim; ++r)
        v[r] = t.f.add(v[r], t.f.mul(a[g], t.generators[g].vlabels[b][r]));
    return v;
  };
  auto advance = [&](std::vector<int>& a) {
    int g = 0;
    while (g < m && a[g] == t.f.p() - 1) a[g++] = 0;
    if (g == m) return false;
    ++a[g];
    return true;
  };
  std::vector<std::set<std::vector<int>>> verts(n + 1);
  std::vector<int> a(m, 0);
  do {
    for (int b = 0; b <= n; ++b) verts[b].insert(path_vertex(a, b));
  } while (advance(a));
  t.vertices.assign(n + 1, {});
  for (int b = 0; b <= n; ++b) t.vertices[b].assign(verts[b].begin(), verts[b].end());
  auto index_of = [&](int b, const std::vector<int>& v) {
    const auto& vs = t.vertices[b];
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  // Second pass recomputes each path for its edge symbols.
  std::vector<std::set<std::tuple<int, int, int>>> edges(n);
  a.assign(m, 0);
  do {
    int from = index_of(0, path_vertex(a, 0));
    for (int b = 0; b < n; ++b) {
      int sym = 0;
      for (int g = 0; g < m; ++g) sym = t.f.add(sym, t.f.mul(a[g], t.generators[g].word[b]));
      const int to = index_of(b + 1, path_vertex(a, b + 1));
      edges[b].insert({from, to, sym});
      from = to;
    }
  } while (advance(a));
  t.edges.assign(n, {});
  for (int b = 0; b < n; ++b)
    for (const auto& [from, to, sym] : edges[b]) t.edges[b].push_back(TrellisEdge{from, to, sym});
  t.materialized = true;
}

std::vector<TrellisGenerator> canon_generators(
    const Field& f, const std::vector<std::pair<std::vector<int>, CircSpan>>& gens, int n) {
  std::vector<TrellisGenerator> out;
  for (const auto& [word, span] : gens) {
    require(static_cast<int>(word.size()) == n && span.n == n, errc::dimension_mismatch,
            "generator length mismatch");
    require(span.i >= 0 && span.i < n && span.j >= 0 && span.j < n, errc::bad_span,
            "span endpoints out of range");
    TrellisGenerator g;
    g.word.resize(n);
    for (int t = 0; t < n; ++t) g.word[t] = f.canon(word[t]);
    g.span = span;
    out.push_back(std::move(g));
  }
  return out;
}

void finish(Trellis& t, bool spans_ok) {
  bool closed = true;
  for (const auto& g : t.generators) closed = closed && g.vlabels[t.n] == g.vlabels[0];
  t.validation.add("closed", closed, "v_n = v_0 for every generator");
  t.validation.add("spans", spans_ok, "listed spans are circular spans of their words");
  materialize(t);
}

Mat words_matrix(const Field& f, const std::vector<TrellisGenerator>& gens, int n) {
  Mat w(f, static_cast<int>(gens.size()), n);
  for (int r = 0; r < w.rows(); ++r)
    for (int c = 0; c < n; ++c) w.set(r, c, gens[r].word[c]);
  return w;
}

// Left kernel of v as a row-space basis.
Mat left_kernel(const Mat& v) { return null_space(transpose(v)); }

// Maximum bipartite matching between rows and candidate columns.
bool match_rows(const std::vector<std::vector<int>>& cand, int cols) {
  const int m = static_cast<int>(cand.size());
  std::vector<int> owner(cols, -1);
  std::vector<bool> used;
  std::function<bool(int)> augment = [&](int r) -> bool {
    for (int c : cand[r]) {
      if (used[c]) continue;
      used[c] = true;
      if (owner[c] < 0 || augment(owner[c])) {
        owner[c] = r;
        return true;
      }
    }
    return false;
  };
  for (int r = 0; r < m; ++r) {
    used.assign(cols, false);
    if (!augment(r)) return false;
  }
  return true;
}

// Nonzero rows restrict to an identity on some column set: each must own a
// column where it holds a 1 and every other nonzero row holds 0.
bool systematic(const Mat& nt) {
  std::vector<int> live;
  for (int r = 0; r < nt.rows(); ++r)
    if (!nt.row_is_zero(r)) live.push_back(r);
  std::vector<std::vector<int>> cand(live.size());
  for (size_t a = 0; a < live.size(); ++a) {
    for (int c = 0; c < nt.cols(); ++c) {
      if (nt.at(live[a], c) != 1) continue;
      bool clean = true;
      for (size_t b = 0; b < live.size() && clean; ++b)
        clean = b == a || nt.at(live[b], c) == 0;
      if (clean) cand[a].push_back(c);
    }
  }
  return match_rows(cand, nt.cols());
}

std::vector<int> complement_of(int n, const std::vector<int>& rows) {
  std::vector<bool> in(n, false);
  for (int r : rows) in[r] = true;
  std::vector<int> out;
  for (int r = 0; r < n; ++r)
    if (!in[r]) out.push_back(r);
  return out;
}

}  // namespace

Trellis product_trellis(const Field& f,
                        const std::vector<std::pair<std::vector<int>, CircSpan>>& gens) {
  require(!gens.empty(), errc::dimension_mismatch, "no generators");
  const int n = static_cast<int>(gens.front().first.size());
  require(n >= 1, errc::dimension_mismatch, "empty generator word");
  Trellis t(f);
  t.n = n;
  t.vdim = static_cast<int>(gens.size());
  t.generators = canon_generators(f, gens, n);
  for (size_t g = 0; g < t.generators.size(); ++g) {
    auto& gen = t.generators[g];
    require(is_circ_span(f, gen.word, gen.span), errc::bad_span,
            "span is not a circular span of its word");
    gen.vlabels.assign(n + 1, std::vector<int>(t.vdim, 0));
    for (int b = 0; b <= n; ++b)
      if (gen.span.covers_boundary(b % n)) gen.vlabels[b][g] = 1;
  }
  finish(t, true);
  return t;
}

Trellis bcjr_trellis(const Field& f,
                     const std::vector<std::pair<std::vector<int>, CircSpan>>& gens,
                     const Mat& labels, int sign) {
  require(!gens.empty(), errc::dimension_mismatch, "no generators");
  require(labels.field() == f, errc::dimension_mismatch, "label field mismatch");
  const int n = labels.cols();
  Trellis t(f);
  t.n = n;
  t.vdim = labels.rows();
  t.generators = canon_generators(f, gens, n);
  bool spans_ok = true;
  for (auto& gen : t.generators) {
    spans_ok = spans_ok && is_circ_span(f, gen.word, gen.span);
    gen.vlabels = walk_labels(f, gen.word, gen.span, labels, sign);
  }
  finish(t, spans_ok);
  return t;
}

std::vector<int> complexity_profile(const std::vector<CircSpan>& spans, int n) {
  require(n >= 1, errc::out_of_range, "length must be positive");
  std::vector<int> out(n, 0);
  for (int t = 0; t < n; ++t)
    for (const auto& s : spans) {
      require(s.n == n, errc::dimension_mismatch, "span length mismatch");
      if (s.covers_boundary(t)) ++out[t];
    }
  return out;
}

bool represents_one_to_one(const Trellis& t, const Mat& g) {
  const int m = static_cast<int>(t.generators.size());
  require(pow_checked(t.f.p(), m) <= kMaxPaths, errc::too_large,
          "too many coefficient vectors to enumerate");
  const Mat w = words_matrix(t.f, t.generators, t.n);
  return rank(w) == m && same_row_space(w, g);
}

bool linearly_isomorphic(const Trellis& t1, const Trellis& t2) {
  require(t1.generators.size() <= 16 && t2.generators.size() <= 16, errc::too_large,
          "too many generators");
  if (t1.f != t2.f || t1.n != t2.n) return false;
  const int m = static_cast<int>(t1.generators.size());
  if (static_cast<int>(t2.generators.size()) != m) return false;
  const Mat w1 = words_matrix(t1.f, t1.generators, t1.n);
  const Mat w2 = words_matrix(t2.f, t2.generators, t2.n);
  if (rank(w1) != m || !same_row_space(w1, w2)) return false;
  // Re-express t2's words as a * w1 via the pivot columns of w1.
  const std::vector<int> piv = pivots_left(w1);
  const Mat a = multiply(take_cols(w2, piv), inverse(take_cols(w1, piv)));
  if (multiply(a, w1) != w2) return false;
  const Mat ainv = inverse(a);
  for (int b = 0; b < t1.n; ++b) {
    Mat v1(t1.f, m, t1.vdim), v2(t1.f, m, t2.vdim);
    for (int g = 0; g < m; ++g) {
      for (int r = 0; r < t1.vdim; ++r) v1.set(g, r, t1.generators[g].vlabels[b][r]);
      for (int r = 0; r < t2.vdim; ++r) v2.set(g, r, t2.generators[g].vlabels[b][r]);
    }
    if (!same_row_space(left_kernel(v1), left_kernel(multiply(ainv, v2)))) return false;
  }
  return true;
}

LabelCode label_code(const CharPair& pr, LabelDirection dir, const std::vector<int>& gen_rows) {
  const Field& f = pr.f;
  const int n = pr.n;
  const Displacement disp = displacement(pr);
  LabelCode lc(f);
  lc.n = n;
  lc.direction = dir;
  if (gen_rows.empty()) {
    for (int r = 0; r < n; ++r) lc.gen_rows.push_back(r);
    lc.label_rows = lc.gen_rows;
    lc.masked = false;
  } else {
    lc.gen_rows = gen_rows;
    std::sort(lc.gen_rows.begin(), lc.gen_rows.end());
    require(std::adjacent_find(lc.gen_rows.begin(), lc.gen_rows.end()) == lc.gen_rows.end(),
            errc::out_of_range, "repeated generator row");
    for (int r : lc.gen_rows) require(r >= 0 && r < n, errc::out_of_range, "generator row");
    lc.label_rows = complement_of(n, lc.gen_rows);
    lc.masked = true;
  }
  const bool yx = dir == LabelDirection::y_labels_x;
  const Mat& gen_mat = yx ? pr.x : pr.y;
  const Mat& label_mat = yx ? pr.y : pr.x;
  const auto& spans = yx ? pr.spans_x : pr.spans_y;
  const Mat labels = take_rows(label_mat, lc.label_rows);
  const int sign = yx ? -1 : +1;
  for (int r : lc.gen_rows) {
    TrellisGenerator g;
    g.word.resize(n);
    for (int c = 0; c < n; ++c) g.word[c] = gen_mat.at(r, c);
    g.span = spans[r];
    g.vlabels = walk_labels(f, g.word, g.span, labels, sign);
    lc.rows.push_back(std::move(g));
  }
  const int m = static_cast<int>(lc.rows.size());
  const int d = static_cast<int>(lc.label_rows.size());
  auto nt_at = [&](int b) {
    Mat nt(f, m, d);
    for (int g = 0; g < m; ++g)
      for (int r = 0; r < d; ++r) nt.set(g, r, lc.rows[g].vlabels[b][r]);
    return nt;
  };
  bool orth = true, sys = true, step = true;
  const Mat& target = yx ? pr.x : pr.y;
  for (int b = 0; b <= n; ++b) {
    const Mat nt = nt_at(b);
    if (!lc.masked) {
      orth = orth && multiply(nt, target).is_zero();
      sys = sys && systematic(nt);
    }
    if (b < n) step = step && rank(sub(nt_at(b + 1), nt)) <= 1;
  }
  // Orthogonality and systematicity hold for the full label code only; a
  // masked selection drops the label coordinates that carried the identity.
  if (!lc.masked) {
    lc.checks.add("orthogonal", orth, yx ? "N_t X = 0" : "N_t Y = 0");
    lc.checks.add("systematic", sys, "nonzero rows of N_t restrict to an identity");
  }
  lc.checks.add("rank_step", step, "rank(N_{t+1} - N_t) <= 1");
  const Mat& de = yx ? disp.e : disp.d;
  lc.checks.add("n0", nt_at(0) == transpose(submatrix(de, lc.label_rows, lc.gen_rows)),
                yx ? "N_0 = E^T on the selection" : "N_0 = D^T on the selection");
  return lc;
}

std::string label_code_text(const LabelCode& lc) {
  const int n = lc.n;
  auto cell = [&](const std::vector<int>& v) {
    std::vector<std::string> out(n, ".");
    for (size_t t = 0; t < lc.label_rows.size(); ++t)
      out[lc.label_rows[t]] = std::to_string(v[t]);
    std::string s;
    for (const auto& c : out) s += c;
    return s;
  };
  const std::string filler_cell(n, '.');
  std::ostringstream os;
  for (int pos = 0; pos < n; ++pos) {
    int g = -1;
    for (size_t r = 0; r < lc.gen_rows.size(); ++r)
      if (lc.gen_rows[r] == pos) g = static_cast<int>(r);
    if (g < 0 && !lc.masked) continue;
    for (int b = 0; b <= n; ++b) {
      if (b) os << " |" << (g < 0 ? "." : std::to_string(lc.rows[g].word[b - 1])) << "| ";
      os << (g < 0 ? filler_cell : cell(lc.rows[g].vlabels[b]));
    }
    os << "\n";
  }
  return os.str();
}

Report trellis_duality_check(const CharPair& pr, const std::vector<int>& rows_i) {
  const Displacement disp = displacement(pr);
  std::vector<int> sel = rows_i;
  std::sort(sel.begin(), sel.end());
  require(std::adjacent_find(sel.begin(), sel.end()) == sel.end(), errc::dependent_selection,
          "repeated row in the selection");
  for (int r : sel) require(r >= 0 && r < pr.n, errc::out_of_range, "selected row");
  const std::vector<int> comp = complement_of(pr.n, sel);
  require(rank(take_rows(pr.x, sel)) == static_cast<int>(sel.size()), errc::dependent_selection,
          "selected X rows are dependent");
  require(rank(take_rows(pr.y, comp)) == static_cast<int>(comp.size()), errc::dependent_selection,
          "complementary Y rows are dependent");
  std::vector<std::pair<std::vector<int>, CircSpan>> gx, gy;
  for (int r : sel) {
    std::vector<int> w(pr.n);
    for (int c = 0; c < pr.n; ++c) w[c] = pr.x.at(r, c);
    gx.push_back({w, pr.spans_x[r]});
  }
  for (int r : comp) {
    std::vector<int> w(pr.n);
    for (int c = 0; c < pr.n; ++c) w[c] = pr.y.at(r, c);
    gy.push_back({w, pr.spans_y[r]});
  }
  const Trellis tx = bcjr_trellis(pr.f, gx, take_rows(pr.y, comp), -1);
  const Trellis ty = bcjr_trellis(pr.f, gy, take_rows(pr.x, sel), +1);
  Report rep;
  rep.add("x_trellis", tx.validation.all(), "BCJR trellis of the X selection is valid");
  rep.add("y_trellis", ty.validation.all(), "BCJR trellis of the Y complement is valid");
  rep.add("displacement_match",
          transpose(submatrix(disp.e, comp, sel)) == neg(submatrix(disp.d, sel, comp)),
          "(E[J x I])^T = -D[I x J]");
  rep.add("x_label_code", label_code(pr, LabelDirection::y_labels_x, sel).checks.all(),
          "masked S(Y^T | X) verifies");
  rep.add("y_label_code", label_code(pr, LabelDirection::x_labels_y, comp).checks.all(),
          "masked S(X^T | Y) verifies");
  return rep;
}

std::vector<std::vector<int>> enumerate_bases(const CharPair& pr) {
  require(pr.n <= 20, errc::too_large, "too many subsets to enumerate");
  std::vector<std::vector<int>> out;
  std::vector<int> idx(pr.k);
  for (int i = 0; i < pr.k; ++i) idx[i] = i;
  while (true) {
    const std::vector<int> comp = complement_of(pr.n, idx);
    if (rank(take_rows(pr.x, idx)) == pr.k &&
        rank(take_rows(pr.y, comp)) == pr.n - pr.k)
      out.push_back(idx);
    int t = pr.k - 1;
    while (t >= 0 && idx[t] == pr.n - pr.k + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < pr.k; ++s) idx[s] = idx[s - 1] + 1;
  }
  return out;
}

DecodeResult viterbi_decode(const Trellis& t, const std::vector<int>& received) {
  require(t.materialized, errc::too_large, "trellis is not materialized");
  require(static_cast<int>(received.size()) == t.n, errc::dimension_mismatch,
          "received word length mismatch");
  std::vector<int> r(t.n);
  for (int i = 0; i < t.n; ++i) r[i] = t.f.canon(received[i]);
  using State = std::optional<std::pair<int, std::vector<int>>>;
  State best;
  const int starts = static_cast<int>(t.vertices[0].size());
  for (int s = 0; s < starts; ++s) {
    std::vector<State> cur(starts);
    cur[s] = std::make_pair(0, std::vector<int>{});
    for (int b = 0; b < t.n; ++b) {
      std::vector<State> next(t.vertices[b + 1].size());
      for (const auto& e : t.edges[b]) {
        if (!cur[e.from]) continue;
        std::pair<int, std::vector<int>> cand = *cur[e.from];
        cand.first += e.symbol != r[b] ? 1 : 0;
        cand.second.push_back(e.symbol);
        if (!next[e.to] || cand < *next[e.to]) next[e.to] = std::move(cand);
      }
      cur = std::move(next);
    }
    if (cur[s] && (!best || *cur[s] < *best)) best = cur[s];
  }
  require(best.has_value(), errc::not_closed, "no closed path");
  return DecodeResult{best->second, best->first};
}

std::string trellis_text(const Trellis& t) {
  std::ostringstream os;
  os << "tail-biting trellis over GF(" << t.f.p() << "): n=" << t.n << ", "
     << t.generators.size() << " generators\n";
  std::vector<CircSpan> spans;
  for (const auto& g : t.generators) spans.push_back(g.span);
  os << "profile:";
  for (int c : complexity_profile(spans, t.n)) os << " " << c;
  os << "\n";
  for (size_t g = 0; g < t.generators.size(); ++g) {
    os << "generator " << g << ": word";
    for (int c : t.generators[g].word) os << " " << c;
    os << ", span " << circ_span_text(t.generators[g].span) << "\n";
  }
  if (!t.materialized) {
    os << "not materialized\n";
    return os.str();
  }
  for (int b = 0; b < t.n; ++b)
    os << "boundary " << b << ": " << t.vertices[b].size() << " vertices, " << t.edges[b].size()
       << " edges\n";
  return os.str();
}

std::string trellis_dot(const Trellis& t) {
  std::ostringstream os;
  os << "digraph trellis {\n";
  os << "  rankdir=LR;\n";
  if (!t.materialized) {
    os << "  // not materialized\n";
    os << "}\n";
    return os.str();
  }
  for (int b = 0; b <= t.n; ++b)
    for (size_t v = 0; v < t.vertices[b].size(); ++v) {
      os << "  b" << b << "_" << v << " [label=\"";
      for (size_t r = 0; r < t.vertices[b][v].size(); ++r) os << t.vertices[b][v][r];
      os << "\"];\n";
    }
  for (int b = 0; b < t.n; ++b)
    for (const auto& e : t.edges[b])
      os << "  b" << b << "_" << e.from << " -> b" << b + 1 << "_" << e.to << " [label=\""
         << e.symbol << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace tmt
