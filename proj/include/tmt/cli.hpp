// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>

namespace tmt {

// Full command-line driver; returns the process exit code.
// 0 = success, 1 = verification failure, 2 = bad input or usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tmt
