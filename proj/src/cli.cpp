// SPDX-License-Identifier: MIT
#include "tmt/cli.hpp"

#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tmt/charmat.hpp"
#include "tmt/error.hpp"
#include "tmt/field.hpp"
#include "tmt/fixtures.hpp"
#include "tmt/matrix.hpp"
#include "tmt/spanform.hpp"
#include "tmt/trellis.hpp"

namespace tmt {
namespace {

// Inputs resolve fixture-name first, then as a matrix file in the shared
// text format ("p rows cols" header, then the rows).
Mat load_matrix(const std::string& name) {
  if (const Fixture* fx = find_fixture(name)) {
    require(fx->g.rows() > 0, errc::parse_error,
            "fixture '" + name + "' carries spans only, not a matrix");
    return fx->g;
  }
  std::ifstream is(name);
  require(static_cast<bool>(is), errc::parse_error,
          "no fixture or readable file named '" + name + "'");
  std::ostringstream buf;
  buf << is.rdbuf();
  return mat_from_text(buf.str());
}

std::vector<int> parse_row_list(const std::string& csv) {
  std::vector<int> rows;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    require(!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos,
            errc::parse_error, "row list entries must be nonnegative integers: '" + csv + "'");
    rows.push_back(std::stoi(tok));
  }
  require(!rows.empty(), errc::parse_error, "empty row list");
  return rows;
}

std::string int_list(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string span_list(const std::vector<CircSpan>& spans) {
  std::ostringstream os;
  for (size_t i = 0; i < spans.size(); ++i) os << (i ? " " : "") << circ_span_text(spans[i]);
  return os.str();
}

int do_msf(const std::string& input, bool reduce, const std::string& flavor, std::ostream& out) {
  const Mat m = load_matrix(input);
  const MsfFlavor fl =
      flavor == "right" ? MsfFlavor::right_left_reduced : MsfFlavor::left_right_reduced;
  const MsfReport rep = reduce ? reduce_msf(m, fl) : to_msf(m);
  out << rep.matrix.format_rows();
  out << "spans:";
  for (const auto& s : rep.spans) out << " [" << s.i0 << ", " << s.i1 << "]";
  out << "\n";
  out << "spanlength " << rep.spanlength() << "\n";
  return 0;
}

int do_char(const std::string& input, const std::string& method, bool as_json, int band,
            std::ostream& out) {
  const Mat g = load_matrix(input);
  const CharPair pr = method == "direct" ? char_pair_direct(g) : char_pair_reduced(g);
  if (as_json) {
    out << char_pair_json(pr);
    return 0;
  }
  if (band > 0) {
    out << unwrap_band(pr, band);
    return 0;
  }
  out << "p = " << pr.f.p() << ", n = " << pr.n << ", k = " << pr.k << "\n";
  out << "X =\n" << pr.x.format_rows();
  out << "spans X: " << span_list(pr.spans_x) << "\n";
  out << "Y =\n" << pr.y.format_rows();
  out << "spans Y: " << span_list(pr.spans_y) << "\n";
  out << "sigma: " << int_list(pr.sigma) << "\n";
  out << (pr.reduced ? "reduced pair\n" : "pair is not reduced\n");
  return 0;
}

int do_trellis(const std::string& input, const std::string& rows_csv,
               const std::string& construction, const std::string& labels, bool dot, bool dual,
               std::ostream& out, std::ostream& err) {
  const Mat g = load_matrix(input);
  const CharPair pr = char_pair_reduced(g);
  std::vector<int> rows;
  if (rows_csv.empty()) {
    rows.resize(pr.n);
    std::iota(rows.begin(), rows.end(), 0);
  } else {
    rows = parse_row_list(rows_csv);
  }
  for (int r : rows)
    require(r >= 0 && r < pr.n, errc::out_of_range, "row " + std::to_string(r) + " out of range");

  if (dual) {
    try {
      const Report rep = trellis_duality_check(pr, rows);
      for (const auto& it : rep.items) out << it.name << ": " << (it.pass ? "ok" : "FAIL") << "\n";
      if (!rep.all()) {
        err << "trellis duality check failed\n";
        return 1;
      }
      return 0;
    } catch (const error& e) {
      if (e.kind() == errc::dependent_selection) {
        err << "error: " << e.what() << "\n";
        return 1;
      }
      throw;
    }
  }

  // The generator side follows --labels for bcjr; product always takes X rows.
  const bool x_side = !(construction == "bcjr" && labels == "x");
  const Mat& gen_mat = x_side ? pr.x : pr.y;
  const auto& spans = x_side ? pr.spans_x : pr.spans_y;
  std::vector<std::pair<std::vector<int>, CircSpan>> gens;
  gens.reserve(rows.size());
  for (int r : rows) gens.emplace_back(gen_mat.row(r), spans[r]);

  const Trellis t = construction == "bcjr"
                        ? bcjr_trellis(pr.f, gens, x_side ? pr.y : pr.x, x_side ? -1 : +1)
                        : product_trellis(pr.f, gens);
  if (dot)
    out << trellis_dot(t);
  else
    out << trellis_text(t);
  try {
    const Mat code = x_side ? g : null_space(g);
    if (!represents_one_to_one(t, code)) err << "warning: trellis is not one-to-one\n";
  } catch (const error&) {
    // q^m too large to decide; no warning either way.
  }
  return 0;
}

int do_labelcode(const std::string& input, const std::string& direction,
                 const std::string& rows_csv, std::ostream& out) {
  const CharPair pr = char_pair_reduced(load_matrix(input));
  const std::vector<int> rows = rows_csv.empty() ? std::vector<int>{} : parse_row_list(rows_csv);
  const LabelDirection dir =
      direction == "xy" ? LabelDirection::x_labels_y : LabelDirection::y_labels_x;
  out << label_code_text(label_code(pr, dir, rows));
  return 0;
}

// Rejection sampling over uniform k x n matrices; the accepted generator has
// full row rank and neither the code nor its dual contains a unit vector.
Mat random_generator(int p, int n, int k, std::uint32_t seed) {
  require(n >= 1 && k >= 1 && k <= n, errc::out_of_range, "need 1 <= k <= n");
  const Field f = field_new(p);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(0, p - 1);
  auto has_zero_col = [](const Mat& m) {
    for (int c = 0; c < m.cols(); ++c) {
      bool all_zero = m.rows() > 0;
      for (int r = 0; r < m.rows() && all_zero; ++r) all_zero = m.at(r, c) == 0;
      if (all_zero) return true;
    }
    return false;
  };
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Mat g(f, k, n);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n; ++c) g.set(r, c, entry(rng));
    if (rank(g) != k) continue;
    if (has_zero_col(g)) continue;
    if (has_zero_col(null_space(g))) continue;
    return g;
  }
  fail(errc::parse_error, "no admissible generator found for these parameters");
}

int do_verify(const std::string& input, const std::string& xfile, const std::string& yfile,
              bool random_mode, int p, int n, int k, std::uint32_t seed, std::ostream& out) {
  const CharPair pr = [&]() -> CharPair {
    if (random_mode) return char_pair_reduced(random_generator(p, n, k, seed));
    if (!xfile.empty() || !yfile.empty()) {
      require(!xfile.empty() && !yfile.empty(), errc::parse_error,
              "pair mode needs both --x and --y");
      const Mat x = load_matrix(xfile);
      const Mat y = load_matrix(yfile);
      require(x.field().p() == y.field().p(), errc::dimension_mismatch,
              "X and Y use different moduli");
      return assemble_pair(x.field(), x, y);
    }
    require(!input.empty(), errc::parse_error, "verify needs an input, --x/--y, or --random");
    return char_pair_reduced(load_matrix(input));
  }();

  nlohmann::json checks = nlohmann::json::object();
  bool pass = true;
  auto put = [&](const std::string& prefix, const Report& rep) {
    for (const auto& it : rep.items) {
      checks[prefix + "." + it.name] = it.pass;
      pass = pass && it.pass;
    }
  };
  auto put_guarded = [&](const std::string& prefix, auto make) {
    try {
      put(prefix, make());
    } catch (const error&) {
      checks[prefix + ".completed"] = false;
      pass = false;
    }
  };

  const Report dual = duality_report(pr);
  put("duality", dual);
  put_guarded("spans", [&] { return prop_abcd_report(pr); });
  put_guarded("transpose", [&] { return transpose_check(pr); });
  // The shift and label-code checks presuppose a pair in duality.
  if (dual.get("unit_mix")) {
    put_guarded("shift", [&] { return shift_displacement_check(pr); });
    put_guarded("labels.yx", [&] { return label_code(pr, LabelDirection::y_labels_x).checks; });
    put_guarded("labels.xy", [&] { return label_code(pr, LabelDirection::x_labels_y).checks; });
  }

  nlohmann::json j;
  j["pass"] = pass;
  j["p"] = pr.f.p();
  j["n"] = pr.n;
  j["k"] = pr.k;
  j["reduced"] = pr.reduced;
  j["checks"] = checks;
  out << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

int do_lpu(const std::string& input, const std::string& corner, std::ostream& out) {
  const Mat a = load_matrix(input);
  if (!corner.empty()) {
    const Corner c = corner == "nw"   ? Corner::nw
                     : corner == "ne" ? Corner::ne
                     : corner == "se" ? Corner::se
                                      : Corner::sw;
    out << bruhat_corner(a, c).format_rows();
    return 0;
  }
  const Lpu r = lpu(a);
  out << "L =\n" << r.l.format_rows();
  out << "P =\n" << r.p.format_rows();
  out << "U =\n" << r.u.format_rows();
  return 0;
}

int do_rooks(const std::string& input, std::ostream& out) {
  if (const Fixture* fx = find_fixture(input)) {
    if (fx->g.rows() == 0) {
      out << rook_board(fx->n, fx->spans);
      return 0;
    }
  }
  out << rook_board(char_pair_reduced(load_matrix(input)));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"reduced characteristic pairs and minimal tail-biting trellises over GF(p)"};
  app.require_subcommand(1);

  std::string input;

  bool reduce = false;
  std::string flavor = "left";
  CLI::App* msf = app.add_subcommand("msf", "minimal span form of a matrix");
  msf->add_option("input", input, "fixture name or matrix file")->required();
  msf->add_flag("--reduce", reduce, "unique reduced form instead of the greedy one");
  msf->add_option("--flavor", flavor, "reduction flavor")
      ->check(CLI::IsMember({"left", "right"}));

  std::string method = "stack";
  bool as_json = false;
  int band = 0;
  CLI::App* chr = app.add_subcommand("char", "reduced characteristic pair of a code");
  chr->add_option("input", input, "fixture name or generator matrix file")->required();
  chr->add_option("--method", method, "construction route")
      ->check(CLI::IsMember({"stack", "direct"}));
  chr->add_flag("--json", as_json, "emit the pair as JSON");
  chr->add_option("--band", band, "banded unwrapping over this many windows")
      ->check(CLI::PositiveNumber);

  std::string rows_csv;
  std::string construction = "product";
  std::string labels = "y";
  bool dot = false;
  bool dual = false;
  CLI::App* tre = app.add_subcommand("trellis", "tail-biting trellis from characteristic rows");
  tre->add_option("input", input, "fixture name or generator matrix file")->required();
  tre->add_option("--rows", rows_csv, "comma-separated generator row indices (default: all)");
  tre->add_option("--construction", construction, "trellis construction")
      ->check(CLI::IsMember({"product", "bcjr"}));
  tre->add_option("--labels", labels, "bcjr labeling side: y labels X rows, x labels Y rows")
      ->check(CLI::IsMember({"y", "x"}));
  tre->add_flag("--dot", dot, "emit graphviz instead of text");
  tre->add_flag("--dual", dual, "check the product/BCJR duality on this selection");

  std::string direction = "yx";
  CLI::App* lab = app.add_subcommand("labelcode", "label code table of the pair");
  lab->add_option("input", input, "fixture name or generator matrix file")->required();
  lab->add_option("--direction", direction, "yx: Y labels X; xy: X labels Y")
      ->check(CLI::IsMember({"yx", "xy"}));
  lab->add_option("--rows", rows_csv, "generator rows for the masked table");

  std::string xfile, yfile;
  bool random_mode = false;
  int rp = 3;
  int rn = 4;
  int rk = 2;
  std::uint32_t seed = 0;
  CLI::App* ver = app.add_subcommand("verify", "evaluate every pair identity, report as JSON");
  ver->add_option("input", input, "fixture name or generator matrix file");
  ver->add_option("--x", xfile, "explicit X matrix file");
  ver->add_option("--y", yfile, "explicit Y matrix file");
  ver->add_flag("--random", random_mode, "verify a random admissible generator");
  ver->add_option("--p", rp, "field modulus for --random");
  ver->add_option("--n", rn, "length for --random");
  ver->add_option("--k", rk, "dimension for --random");
  ver->add_option("--seed", seed, "seed for --random");

  std::string corner;
  CLI::App* lp = app.add_subcommand("lpu", "L.P.U factorization and Bruhat corner permutations");
  lp->add_option("input", input, "square matrix file or fixture")->required();
  lp->add_option("--corner", corner, "corner permutation instead of the factors")
      ->check(CLI::IsMember({"nw", "ne", "sw", "se"}));

  CLI::App* rooks = app.add_subcommand("rooks", "span bijection as a rook placement");
  rooks->add_option("input", input, "fixture name or generator matrix file")->required();

  try {
    app.parse(argc, argv);
    if (msf->parsed()) return do_msf(input, reduce, flavor, out);
    if (chr->parsed()) return do_char(input, method, as_json, band, out);
    if (tre->parsed()) return do_trellis(input, rows_csv, construction, labels, dot, dual, out, err);
    if (lab->parsed()) return do_labelcode(input, direction, rows_csv, out);
    if (ver->parsed()) return do_verify(input, xfile, yfile, random_mode, rp, rn, rk, seed, out);
    if (lp->parsed()) return do_lpu(input, corner, out);
    if (rooks->parsed()) return do_rooks(input, out);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tmt
