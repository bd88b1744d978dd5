#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace khcalc {

enum ExitCode : int { kOk = 0, kInputError = 2, kSizeLimit = 3, kConsistency = 4 };

/// Entry point shared by main() and the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace khcalc
