#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace matchgame {

// Runs one CLI command. `args` excludes the program name. Data goes to
// `out`, diagnostics to `err`; `in` feeds the interactive stdin adversary.
//
// Exit codes: 0 success, 1 a requested check failed (verify-assign found
// violations, theorem cross-check broke), 2 bad input / unknown command /
// size-bound refusal, 3 internal invariant panic.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace matchgame
