// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tmt/matrix.hpp"

namespace tmt {

// Built-in example inputs addressable by name from the CLI and tests.
// Matrix fixtures carry a generator matrix; suzuki-rooks is spans-only.
struct Fixture {
  std::string name;
  std::string describe;
  int p = 0;
  int n = 0;
  Mat g;                                   // 0 x n for spans-only fixtures
  std::vector<std::pair<int, int>> spans;  // only for spans-only fixtures
};

const std::vector<Fixture>& fixtures();
// nullptr when the name is unknown.
const Fixture* find_fixture(const std::string& name);

}  // namespace tmt
