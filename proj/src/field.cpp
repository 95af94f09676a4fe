// SPDX-License-Identifier: MIT
#include "tmt/field.hpp"

#include "tmt/matrix.hpp"

namespace tmt {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field::Field(int p) : p_(p) {
  require(p >= 2 && p <= 251, errc::out_of_range, "modulus must be in [2, 251], got " + std::to_string(p));
  require(is_prime(p), errc::composite_modulus, std::to_string(p) + " is not prime");
  inv_.assign(p_, 0);
  for (int a = 1; a < p_; ++a) {
    for (int b = 1; b < p_; ++b) {
      if (a * b % p_ == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
}

int Field::canon(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<int>(r);
}

int Field::inv(int a) const {
  require(a != 0, errc::out_of_range, "inverse of 0");
  return inv_[a];
}

Field field_new(int p) { return Field(p); }

Mat gf4_concatenate(const std::vector<std::string>& rows, bool swap_rule) {
  Field f2(2);
  require(!rows.empty() && !rows[0].empty(), errc::dimension_mismatch, "empty symbol grid");
  const int r = static_cast<int>(rows.size());
  const int cols4 = static_cast<int>(rows[0].size());
  for (const auto& row : rows)
    require(static_cast<int>(row.size()) == cols4, errc::dimension_mismatch, "ragged symbol grid");
  Mat out(f2, r, 2 * cols4);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < cols4; ++j) {
      int b0, b1;  // symbol image (b0, b1)
      switch (rows[i][j]) {
        case '0': b0 = 0; b1 = 0; break;
        case '1': b0 = 1; b1 = 1; break;
        case 'a': b0 = 0; b1 = 1; break;
        case 'b': b0 = 1; b1 = 0; break;
        default:
          fail(errc::bad_symbol, std::string("symbol '") + rows[i][j] + "' not in {0,1,a,b}");
      }
      out.set(i, 2 * j, b0);
      out.set(i, 2 * j + 1, b1);
    }
  }
  if (swap_rule) {
    // Transpose binary columns 4k+2 and 4k+4 (1-indexed): 0-based 4k+1 and
    // 4k+3 within each block of four binary columns.
    for (int c = 0; 4 * c + 3 < out.cols(); ++c) {
      for (int i = 0; i < r; ++i) {
        int t = out.at(i, 4 * c + 1);
        out.set(i, 4 * c + 1, out.at(i, 4 * c + 3));
        out.set(i, 4 * c + 3, t);
      }
    }
  }
  return out;
}

}  // namespace tmt
