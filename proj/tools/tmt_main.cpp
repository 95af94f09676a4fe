// SPDX-License-Identifier: MIT
#include <iostream>

#include "tmt/cli.hpp"

int main(int argc, char** argv) {
  return tmt::run_cli(argc, argv, std::cout, std::cerr);
}
