#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plumb {

/// Runs one plumbcalc invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on domain errors, 2 on usage errors; surveys
/// return 1 when counterexamples were found.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace plumb
