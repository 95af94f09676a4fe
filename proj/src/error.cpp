// SPDX-License-Identifier: MIT
#include "tmt/error.hpp"

namespace tmt {

const char* errc_name(errc k) {
  switch (k) {
    case errc::composite_modulus: return "CompositeModulus";
    case errc::out_of_range: return "OutOfRange";
    case errc::bad_symbol: return "BadSymbol";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_orthogonal_pair: return "NotOrthogonalPair";
    case errc::zero_vector: return "ZeroVector";
    case errc::zero_row: return "ZeroRow";
    case errc::rank_deficient: return "RankDeficient";
    case errc::singular: return "Singular";
    case errc::not_square: return "NotSquare";
    case errc::not_characteristic: return "NotCharacteristic";
    case errc::not_in_duality: return "NotInDuality";
    case errc::not_factor_of_xn_minus_1: return "NotFactorOfXnMinus1";
    case errc::too_large: return "TooLarge";
    case errc::bad_span: return "BadSpan";
    case errc::not_closed: return "NotClosed";
    case errc::dependent_selection: return "DependentSelection";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tmt
