#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adinv {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitDisagreement = 1, kExitMalformed = 2 };

/// `args` excludes the program name. Reports go to `out` (or --output),
/// diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace adinv
