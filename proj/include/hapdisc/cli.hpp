#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hapdisc {

/// Runs one command. `args` excludes the program name.
/// Exit status: 2 for usage errors, 1 when classify/color find that the set
/// forces discrepancy two, 0 otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hapdisc
