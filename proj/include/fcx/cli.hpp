#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcx::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kCheckMismatch = 3 };

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fcx::cli
