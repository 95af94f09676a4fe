// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace tmt {

// Error kinds raised by the library. The CLI maps parse/input kinds to exit
// code 2 and verification failures to exit code 1.
enum class errc {
  composite_modulus,
  out_of_range,
  bad_symbol,
  dimension_mismatch,
  not_orthogonal_pair,
  zero_vector,
  zero_row,
  rank_deficient,
  singular,
  not_square,
  not_characteristic,
  not_in_duality,
  not_factor_of_xn_minus_1,
  too_large,
  bad_span,
  not_closed,
  dependent_selection,
  parse_error,
};

const char* errc_name(errc kind);

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline void require(bool cond, errc kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace tmt
