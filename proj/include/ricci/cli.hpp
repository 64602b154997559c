#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ricci {

// Runs the command-line tool on `args` (program name excluded). Normal
// output goes to `out`, diagnostics to `err`. Returns the process exit
// code: 0 on success (including "not sharp" verdicts), 1 on an internal
// assertion failure or a failed verification run, 2 on malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ricci
