// SPDX-License-Identifier: MIT
#include "tmt/fixtures.hpp"

#include "tmt/field.hpp"

namespace tmt {

namespace {

Mat mat2(const std::vector<std::vector<int>>& rows, int cols) {
  return Mat::from_rows(Field(2), rows, cols);
}

std::vector<Fixture> build() {
  std::vector<Fixture> fx;
  fx.push_back({"gf3-example",
                "[4,2] code over GF(3) with its 4x4 characteristic pair",
                3,
                4,
                Mat::from_rows(Field(3), {{2, 2, 1, 0}, {1, 0, 1, 2}}, 4),
                {}});
  fx.push_back({"binary53",
                "[5,3] binary code with 5x5 characteristic pair and trellises",
                2,
                5,
                mat2({{1, 1, 1, 0, 0}, {0, 1, 1, 0, 1}, {0, 0, 1, 1, 0}}, 5),
                {}});
  fx.push_back({"selfdual4",
                "[4,2] self-dual binary code with a non-reduced transpose",
                2,
                4,
                mat2({{1, 1, 0, 0}, {0, 0, 1, 1}}, 4),
                {}});
  fx.push_back({"b52a",
                "[5,2] binary code, first of three sharing one span set",
                2,
                5,
                mat2({{1, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}, 5),
                {}});
  fx.push_back({"b52b",
                "[5,2] binary code admitting a two-generator minimal trellis",
                2,
                5,
                mat2({{1, 1, 0, 1, 0}, {0, 0, 1, 1, 1}}, 5),
                {}});
  fx.push_back({"b52c",
                "[5,2] binary code, third of three sharing one span set",
                2,
                5,
                mat2({{1, 1, 1, 1, 0}, {0, 0, 1, 0, 1}}, 5),
                {}});
  fx.push_back({"golay",
                "[24,12] binary Golay code from a GF(4) generator",
                2,
                24,
                gf4_concatenate(
                    {
                        "1ab1ba000000", "ab1a1b000000", "00b1a1ba0000", "00ab1ba10000",
                        "00001ab1ba00", "0000ab1a1b00", "000000b1a1ba", "000000ab1ba1",
                        "ba0000001ab1", "1b000000ab1a", "a1ba000000b1", "1ba1000000ab",
                    },
                    true),
                {}});
  fx.push_back({"suzuki-rooks",
                "spans-only: rook board of a Suzuki curve, n = 13",
                2,
                13,
                Mat(Field(2), 0, 13),
                {{0, 0},
                 {1, 8},
                 {2, 16},
                 {3, 10},
                 {4, 18},
                 {5, 12},
                 {6, 20},
                 {7, 28},
                 {8, 22},
                 {9, 30},
                 {10, 24},
                 {11, 32},
                 {12, 40}}});
  return fx;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> fx = build();
  return fx;
}

const Fixture* find_fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace tmt
