#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subdiv::cli {

// Runs one subcommand and returns the process exit code.
// 0 success, 1 invalid witness, 2 precondition, 3 budget, 4 internal.
// The machine-readable report line goes to out; the human summary (the only
// place timing appears, so reports stay byte-identical across reruns) goes
// to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subdiv::cli
