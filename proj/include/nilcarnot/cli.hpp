#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilcarnot {

/// Command-line driver. args excludes the program name. Exit codes:
/// 0 success, 1 invalid input, 2 inconclusive verdict, 3 budget or memory
/// limit. The search seed defaults to 0 and can be overridden with the
/// NILCARNOT_SEED environment variable.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nilcarnot
