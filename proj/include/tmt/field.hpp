// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "tmt/error.hpp"

namespace tmt {

// Prime field GF(p), 2 <= p <= 251. Elements are canonical representatives in
// [0, p); every operation returns a canonical value.
class Field {
 public:
  explicit Field(int p);

  int p() const { return p_; }
  // Reduce an arbitrary integer (negatives allowed) into [0, p).
  int canon(long long v) const;
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  int mul(int a, int b) const { return (a * b) % p_; }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  int p_;
  std::vector<int> inv_;  // inv_[a] for 1 <= a < p
};

Field field_new(int p);

class Mat;

// GF(4) -> GF(2) symbol substitution: 0->00, 1->11, a->01,
// b->10. With swap_rule, binary columns 4k+2 and 4k+4 (1-indexed) are
// transposed afterwards. Rows are strings over {0,1,a,b}.
Mat gf4_concatenate(const std::vector<std::string>& rows, bool swap_rule);

}  // namespace tmt
